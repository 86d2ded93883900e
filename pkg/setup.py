"""Build script for the optional compiled kernel backend.

The extension is a twin of areakit._pykernels: same algorithms, same
summation order, same branch structure, so results agree bitwise.  If
Cython or a C compiler is unavailable the package still installs and
falls back to the pure Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("areakit._ckernels", ["src/areakit/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
        # no -ffast-math: the fallback must reproduce these sums exactly
    )

setup(ext_modules=ext_modules)
