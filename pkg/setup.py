"""Extension build for the compiled subset-sum kernel.

The package is fully functional without the extension (backend falls
back to the pure-Python kernel), so a missing Cython only skips the
fast lane instead of failing the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    extensions = cythonize(
        [Extension("vicalc._kernel", ["src/vicalc/_kernel.pyx"])],
        language_level=3,
    )

setup(ext_modules=extensions)
