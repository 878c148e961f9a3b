from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "thermoiso._core",
        sources=[
            "python/bindings.cpp",
            "src/core.cpp",
            "src/lorenz.cpp",
            "src/modes.cpp",
            "src/model.cpp",
            "src/yield.cpp",
            "src/sweep.cpp",
            "src/io.cpp",
        ],
        include_dirs=["include", "vendor"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
