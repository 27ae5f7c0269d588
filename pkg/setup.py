"""Build hook for the optional compiled kernels.

If Cython or a C compiler is unavailable the package still installs and
falls back to the pure-Python kernels.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("reqho.exactalg._ckernels", ["src/reqho/exactalg/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except Exception:  # pragma: no cover
    ext_modules = []

setup(ext_modules=ext_modules)
