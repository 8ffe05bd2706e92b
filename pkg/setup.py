"""Build script: compiles the optional Cython convolution kernels.

If compilation fails (no compiler, no Cython) the package still installs;
prosocoref.kernels falls back to the pure-numpy implementation at import.
"""
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Tolerate extension build failures and install pure-Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            self._warn(exc)

    @staticmethod
    def _warn(exc):  # pragma: no cover
        print(
            f"warning: building the compiled kernels failed ({exc}); "
            "prosocoref will use the numpy fallback",
            file=sys.stderr,
        )


def _extensions():
    try:
        import numpy as np
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover
        return []
    ext = Extension(
        "prosocoref.kernels._convcy",
        ["src/prosocoref/kernels/_convcy.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
