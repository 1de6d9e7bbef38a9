from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernel is optional: without Cython the package installs
# pure-Python and graphcomp._kernel falls back to graphcomp._core_py.
ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("graphcomp._core", ["src/graphcomp/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
