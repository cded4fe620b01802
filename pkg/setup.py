"""Build script: compiles the serialization hot kernels as a C extension.

The extension is optional.  If Cython or a C toolchain is unavailable the
package installs anyway and `ordercast.codec` falls back to the pure-Python
kernels at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ordercast/_codec_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
