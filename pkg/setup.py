"""Build script: compiles the optional accelerator module framekit._core.

The package is fully functional without it (framekit.backend falls back to
the NumPy implementations in framekit._corepy), so a failed compilation is
downgraded to a warning instead of aborting the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            warnings.warn(f"framekit._core not compiled, using pure-Python kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"framekit._core not compiled, using pure-Python kernels: {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "framekit._core",
                ["src/framekit/_core.pyx"],
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


setup(cmdclass={"build_ext": OptionalBuildExt}, ext_modules=extensions())
