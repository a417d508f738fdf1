import sys

from setuptools import Extension, setup

# The compiled Sturm/bisection kernels are an optional speedup: the package
# falls back to the pure-Python implementation when the extension is missing,
# so a failed build must not break the install.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qescal._kernels._speedups",
                ["src/qescal/_kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    print("qescal: Cython not available, installing with pure-Python kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
