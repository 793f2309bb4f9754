"""Builds the optional compiled kernel; the package works without it."""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as err:  # pragma: no cover - depends on the toolchain
            print(f"warning: compiled kernels not built ({err}); using the numpy backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as err:  # pragma: no cover
            print(f"warning: building {ext.name} failed ({err}); using the numpy backend")


def extensions():
    if os.environ.get("OFTT_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "oftt._ckernels",
        ["src/oftt/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3, quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
