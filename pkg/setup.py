from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "contcomb._kernels",
                ["src/contcomb/_kernels.pyx"],
                language="c++",
                extra_compile_args=["-O3", "-std=c++17"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
