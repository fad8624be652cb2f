import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# The wheel compiles the core sources straight into the extension module;
# CMake stays the build of record for the CLI and the test suite. cli.cpp is
# the terminal front end and would drag in its argument-parser header, so the
# extension skips it.
sources = [s for s in sorted(glob.glob("src/*.cpp")) if not s.endswith("cli.cpp")]
ext = Pybind11Extension(
    "casimir_plates._core",
    sources + ["bindings/module.cpp"],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
