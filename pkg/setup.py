"""Build script for the optional compiled scoring kernels.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a failed compilation only costs speed.
Build in place with:  python setup.py build_ext --inplace
"""
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow compiler failures; the pure-Python kernels take over."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            print(f"WARNING: building tadda._speedups failed ({exc}); "
                  "falling back to the pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"WARNING: compiling {ext.name} failed ({exc}); "
                  "falling back to the pure-Python kernels")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("tadda._speedups", ["src/tadda/_speedups.pyx"],
                   extra_compile_args=["-O3"])],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
