import warnings

import numpy
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the compiled kernels if possible, fall back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(
                f"compiled kernel build failed ({exc}); "
                "the pure-Python fallback will be used"
            )

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(
                f"building {ext.name} failed ({exc}); "
                "the pure-Python fallback will be used"
            )


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "perilink._kernel_ext",
                ["src/perilink/_kernel_ext.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
