from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("stb._speedups", ["src/stb/_speedups.pyx"]),
]

setup(ext_modules=cythonize(extensions, language_level=3))
