"""Build script for the compiled kernels.

The compiled extension is optional: if no C toolchain (or Cython) is
available the install still succeeds and the package falls back to the
pure NumPy reference kernels at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, otherwise warn and continue."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: compiled kernels not built ({exc}); "
              "nlfmkit will use the pure NumPy reference backend")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("nlfmkit.kernels._fast", ["src/nlfmkit/kernels/_fast.pyx"])],
        language_level="3",
    )
except ImportError:
    print("WARNING: Cython not available; skipping compiled kernels")
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
