from setuptools import Extension, setup
from Cython.Build import cythonize

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in r22sdf._kernels._pure when the extension is missing.
ext = Extension(
    "r22sdf._kernels._core",
    sources=["src/r22sdf/_kernels/_core.pyx"],
    optional=True,
)

setup(
    ext_modules=cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    ),
)
