"""Build script: compiles the optional tree-solver kernel when Cython is
available.  Without Cython (or with KVEDOM_NO_EXT=1) the package installs
pure-Python and the solver falls back to its Python kernel at import."""

import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("KVEDOM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [Extension("kvedom._tree_core", ["src/kvedom/_tree_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        extensions = []

setup(ext_modules=extensions)
