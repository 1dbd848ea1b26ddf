"""Build script for the optional compiled kernel.

The package works without the extension (a numpy fallback is selected at
import time), so a missing compiler or Cython only costs speed, not features.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the accelerator if possible, warn and continue if not."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or misconfigured
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        import warnings

        warnings.warn(
            f"building the compiled kernel failed ({exc!r}); "
            "falling back to the pure numpy implementation"
        )


ext_modules = []
if os.environ.get("HOLEVOQ_SKIP_BUILD_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("holevoq._axes_cy", ["src/holevoq/_axes_cy.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
