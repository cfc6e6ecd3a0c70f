# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernel for the labeled tree solver.

Mirrors the pure-Python branch logic in kvedom.tree_solver exactly; the
test suite pins the two kernels together on random instances.
"""

import numpy as np


def run(int n, int root,
        int[::1] parent, int[::1] order,
        int[::1] child_start, int[::1] child_flat,
        long long[::1] demand_up, signed char[::1] forced):
    """Process support vertices bottom-up and complete the residual star.

    Returns (status, count, out): status 0 solved / 1 infeasible, with the
    chosen vertices (unsorted) in out[:count].  demand_up and forced are
    mutated in place.
    """
    out_arr = np.empty(n if n > 0 else 1, dtype=np.int32)
    cdef int[::1] out = out_arr
    cdef Py_ssize_t count = 0
    cdef Py_ssize_t oi, ci
    cdef int u, w, c, c0, c1
    cdef int nkids, deg_u, deg_w, size_nu, size_union, n_marked, r_size
    cdef int residual_size
    cdef long long s_max, s_uw, s_new, cap, extra, need, have

    for oi in range(n - 1):
        u = order[oi]
        c0 = child_start[u]
        c1 = child_start[u + 1]
        nkids = c1 - c0
        if nkids == 0:
            continue
        w = parent[u]
        deg_u = nkids + 1
        deg_w = child_start[w + 1] - child_start[w]
        if w != root:
            deg_w += 1
        size_nu = deg_u + 1
        size_union = deg_u + deg_w
        s_max = 0
        for ci in range(c0, c1):
            if demand_up[child_flat[ci]] > s_max:
                s_max = demand_up[child_flat[ci]]
        s_uw = demand_up[u]

        if s_max > size_nu or s_uw > size_union:
            return 1, 0, out_arr

        if s_max == size_nu or s_uw == size_union:
            forced[u] = 1
            forced[w] = 1
            s_uw -= nkids
            demand_up[u] = s_uw if s_uw > 0 else 0
            for ci in range(c0, c1):
                out[count] = child_flat[ci]
                count += 1
            continue

        n_marked = 0
        for ci in range(c0, c1):
            if forced[child_flat[ci]]:
                n_marked += 1
        r_size = n_marked + forced[u] + forced[w]

        if s_max <= r_size:
            s_new = s_uw - n_marked
            extra = 0
        elif s_max - n_marked == 1:
            forced[w] = 1
            s_new = s_uw - n_marked
            extra = 0
        else:
            forced[w] = 1
            forced[u] = 1
            s_new = s_uw - s_max + 2
            extra = s_max - n_marked - 2
        if s_new < 0:
            s_new = 0
        # the surviving cover of the parent edge tops out at deg(w)+1;
        # overflow has to come from this level's leaves
        cap = deg_w + 1
        if s_new > cap:
            extra += s_new - cap
            s_new = cap
        demand_up[u] = s_new
        for ci in range(c0, c1):
            c = child_flat[ci]
            if forced[c]:
                out[count] = c
                count += 1
            elif extra > 0:
                out[count] = c
                count += 1
                extra -= 1

    # residual star around the root
    c0 = child_start[root]
    c1 = child_start[root + 1]
    need = 0
    for ci in range(c0, c1):
        if demand_up[child_flat[ci]] > need:
            need = demand_up[child_flat[ci]]
    residual_size = (c1 - c0) + 1
    if need > residual_size:
        return 1, 0, out_arr
    have = 0
    if forced[root]:
        out[count] = root
        count += 1
        have += 1
    for ci in range(c0, c1):
        if forced[child_flat[ci]]:
            out[count] = child_flat[ci]
            count += 1
            have += 1
    if have < need and not forced[root]:
        out[count] = root
        count += 1
        have += 1
    for ci in range(c0, c1):
        if have >= need:
            break
        c = child_flat[ci]
        if not forced[c]:
            out[count] = c
            count += 1
            have += 1
    return 0, count, out_arr
