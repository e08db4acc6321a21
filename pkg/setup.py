"""Build script: compiles the optional accelerated evaluation kernel.

The package is fully functional without the extension; `hiermap.kernel`
falls back to the pure-Python implementation when the compiled module is
missing (or when HIERMAP_PURE=1 is set).
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hiermap/_core.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
