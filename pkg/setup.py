import os

import gmpy2
from Cython.Build import cythonize
from setuptools import Extension, setup

gmpy2_dir = os.path.dirname(gmpy2.__file__)

extensions = [
    Extension(
        "colombeau_lab.exactcalc._ckernels",
        ["src/colombeau_lab/exactcalc/_ckernels.pyx"],
        include_dirs=[gmpy2_dir],
        libraries=["gmp"],
        extra_compile_args=["-O2"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        include_path=[os.path.dirname(gmpy2_dir)],
        compiler_directives={"language_level": "3"},
    )
)
