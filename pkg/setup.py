from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # the numpy fallback in cupcube._kernels_py takes over
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("cupcube._kernels", ["src/cupcube/_kernels.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
