"""Text formats: edge lists, the DIMACS-like variant, labeling files,
solution files, exact-3-cover instances, and gadget role sidecars."""

from __future__ import annotations

from .errors import InputError
from .graph import Graph
from .reductions import Ex3CInstance, GadgetGraph
from .tree_solver import LABEL_FORCED, LABEL_PLAIN, STLabeling


def _data_lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def _ints(line: str, count: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise InputError(f"{what}: expected {count} fields, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise InputError(f"{what}: non-integer field in {line!r}") from exc


def parse_edge_list(text: str) -> Graph:
    """First data line ``n m``, then m lines ``u v``; '#' starts a comment."""
    lines = list(_data_lines(text))
    if not lines:
        raise InputError("empty graph file")
    n, m = _ints(lines[0], 2, "header")
    if len(lines) - 1 != m:
        raise InputError(f"header announces {m} edges but file has {len(lines) - 1}")
    edges = [tuple(_ints(line, 2, "edge")) for line in lines[1:]]
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_dimacs(text: str) -> Graph:
    """DIMACS-like form: ``c`` comments, one ``p edge n m`` line, then
    ``e u v`` lines with 1-based vertex ids."""
    n = m = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise InputError("multiple problem lines")
            if len(parts) != 4 or parts[1] != "edge":
                raise InputError(f"malformed problem line {line!r}")
            n, m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise InputError(f"malformed edge line {line!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise InputError(f"unrecognized line {line!r}")
    if n is None:
        raise InputError("missing problem line")
    if len(edges) != m:
        raise InputError(f"problem line announces {m} edges but file has {len(edges)}")
    return Graph(n, edges)


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise InputError(f"unknown graph format {fmt!r}")


def parse_labeling(text: str, g: Graph, default_demand: int) -> STLabeling:
    """Labeling overlay: lines ``v R`` mark forced vertices, lines ``u v s``
    set edge demands.  Unlisted vertices stay plain; unlisted edges get the
    default demand."""
    t = [LABEL_PLAIN] * g.n
    s = {e: default_demand for e in g.edges}
    seen_marks = set()
    seen_edges = set()
    for line in _data_lines(text):
        parts = line.split()
        if len(parts) == 2:
            v = int(parts[0])
            if parts[1] != LABEL_FORCED:
                raise InputError(f"vertex mark must be 'R', got {line!r}")
            g.check_vertex(v)
            if v in seen_marks:
                raise InputError(f"vertex {v} marked twice")
            seen_marks.add(v)
            t[v] = LABEL_FORCED
        elif len(parts) == 3:
            u, v, val = _ints(line, 3, "demand line")
            key = (u, v) if u < v else (v, u)
            if key not in s:
                raise InputError(f"({u}, {v}) is not an edge of the tree")
            if key in seen_edges:
                raise InputError(f"edge ({u}, {v}) listed twice")
            if val < 0:
                raise InputError(f"edge ({u}, {v}) has negative demand {val}")
            seen_edges.add(key)
            s[key] = val
        else:
            raise InputError(f"unrecognized labeling line {line!r}")
    return STLabeling(t=tuple(t), s=s)


def parse_solution(text: str) -> list[int]:
    """Solution files use the solver's output shape: first line the
    cardinality, second line the sorted vertex ids."""
    lines = list(_data_lines(text))
    if not lines:
        raise InputError("empty solution file")
    (count,) = _ints(lines[0], 1, "solution header")
    ids = []
    if len(lines) > 2:
        raise InputError("solution file has trailing content")
    if len(lines) == 2:
        ids = [int(p) for p in lines[1].split()]
    if len(ids) != count:
        raise InputError(f"header announces {count} vertices but file has {len(ids)}")
    for a, b in zip(ids, ids[1:]):
        if a >= b:
            raise InputError("solution vertices must be strictly increasing")
    return ids


def format_solution(members) -> str:
    return f"{len(members)}\n{' '.join(str(v) for v in members)}\n"


def parse_ex3c(text: str) -> Ex3CInstance:
    """First data line ``q m``, then m lines of 3 element ids."""
    lines = list(_data_lines(text))
    if not lines:
        raise InputError("empty instance file")
    q, m = _ints(lines[0], 2, "instance header")
    if len(lines) - 1 != m:
        raise InputError(f"header announces {m} triples but file has {len(lines) - 1}")
    collection = [tuple(_ints(line, 3, "triple")) for line in lines[1:]]
    return Ex3CInstance(q=q, collection=tuple(collection))


def write_roles(gadget: GadgetGraph) -> str:
    """Role sidecar: one ``vertex role`` line per vertex."""
    return "".join(f"{v} {role}\n" for v, role in enumerate(gadget.roles))
