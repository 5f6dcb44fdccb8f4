"""Build script.

The canonical-code search kernel has a Cython implementation that is used
when it compiles; the package falls back to the pure-Python kernel
otherwise, so a plain install without a C toolchain still works.

    python setup.py build_ext --inplace   # compile the kernel in-tree
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cvaegg.dfscode._ckernel",
                sources=["src/cvaegg/dfscode/_ckernel.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
