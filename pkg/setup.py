from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "sharecircuit._kernels._core",
                ["src/sharecircuit/_kernels/_core.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback kernels are used when the extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
