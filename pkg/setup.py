import os

from setuptools import Extension, setup

# The compiled kernels are optional: UNIKRYPT_PURE=1 skips them and the
# package falls back to the pure-Python reference kernels at import time.
ext_modules = []
if os.environ.get("UNIKRYPT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "unikrypt.primitives._speed",
                    ["src/unikrypt/primitives/_speed.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
