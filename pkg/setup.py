from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("votemanip._bruteforce", ["src/votemanip/_bruteforce.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )
else:
    # The package still works without the extension: votemanip.manipulation
    # falls back to the pure-Python search core at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
