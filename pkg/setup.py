from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython: ship the pure-Python kernels only
    cythonize = None

extensions = [
    Extension(
        "pfunc._ckernels",
        ["src/pfunc/_ckernels.pyx"],
        language="c++",
        extra_compile_args=["-O2"],
        optional=True,
    )
]

setup(
    ext_modules=(
        cythonize(extensions, compiler_directives={"language_level": "3"})
        if cythonize is not None
        else []
    )
)
