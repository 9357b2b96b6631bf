import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the compiled core if possible; the pure backend covers failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing etc.
            print("warning: compiled core skipped (%s); using pure-Python backend" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("warning: %s skipped (%s)" % (ext.name, exc))


ext_modules = []
if not os.environ.get("G2KL_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("g2kl._core_cy", ["src/g2kl/_core_cy.pyx"],
                       extra_compile_args=["-O3"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython unavailable; using pure-Python backend")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
