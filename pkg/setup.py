"""Build hook for the optional compiled kernels.

Everything else is declared in pyproject.toml.  The extension is marked
optional, so a missing compiler or Cython leaves a working pure-Python install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - exercised only without Cython
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "rookharmonics.oracle._kernels",
                ["src/rookharmonics/oracle/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
