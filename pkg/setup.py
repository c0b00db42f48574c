"""Build script for the optional compiled kernel extension.

The package is pure Python plus one Cython accelerator.  If Cython or a C
compiler is missing the extension is skipped and the pure-Python kernels
are used at runtime.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError):
            pass

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, ValueError):
            pass


def extensions():
    if os.environ.get("BPSKIT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("bpskit._speedups", ["src/bpskit/_speedups.pyx"])
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
