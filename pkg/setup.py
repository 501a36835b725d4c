"""Build script: compiles the optional fast kernel.

The package is pure Python plus one Cython extension for the hot scan loop.
If the extension cannot be built (no compiler, no Cython), installation still
succeeds and the pure-Python kernel is used at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Allow the extension build to fail without failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: building the compiled kernel failed (%s); "
            "falling back to the pure-Python kernel." % (exc,),
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "WARNING: Cython not available; skipping the compiled kernel.",
            file=sys.stderr,
        )
        return []
    ext = Extension("ultrachain._fastkernel", ["src/ultrachain/_fastkernel.pyx"])
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
