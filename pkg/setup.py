"""Build hook for the optional compiled character kernel.

The package is pure Python and fully functional without it; when Cython
and a C compiler are available, the Murnaghan-Nakayama kernel is compiled
and picked up automatically at import.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("repstab._mncore", ["src/repstab/_mncore.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
