from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy

    ext_modules = cythonize(
        [
            Extension(
                "linefree._kernels._modp",
                ["src/linefree/_kernels/_modp.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Without Cython the package still installs; the pure-Python kernel
    # backend is picked up at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
