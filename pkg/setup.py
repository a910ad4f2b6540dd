"""Build script: compiles the optional fast search kernel.

The package is pure Python except for one hot loop (the backtracking
search for adjacency-preserving permutations).  If Cython or a C
compiler is unavailable the build falls back to the pure-Python kernel;
everything still works, just slower.  Set HOMREP_PURE_PYTHON=1 to skip
the extension on purpose.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to a pure build instead of failing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: building the compiled kernel failed ({exc}); "
                  "falling back to the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} failed to compile ({exc}); "
                  "falling back to the pure-Python kernel")


ext_modules = []
if not os.environ.get("HOMREP_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("homrep._speedups", ["src/homrep/_speedups.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
