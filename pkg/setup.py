"""Build script: compiles the optional kernel extension.

The extension is a pure speedup; if Cython or a C compiler is missing
the install falls back to the pure-Python kernels and everything still
works, so build failures here are demoted to warnings.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            warnings.warn(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping compiled kernel {ext.name}: {exc}")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ringunits._kernels", ["src/ringunits/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    warnings.warn("Cython not available; installing with pure-Python kernels")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
