"""Builds the _pbrp extension through the project's CMake tree."""

import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        extdir = ext_fullpath.parent.resolve()

        cmake_args = [
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
        ]
        try:
            import pybind11

            cmake_args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass  # fall back to a system-wide pybind11

        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_pbrp"], cwd=build_temp, check=True
        )

        built = sorted((build_temp / "python" / "pbrp").glob("_pbrp*"))
        if not built:
            raise RuntimeError("CMake did not produce the _pbrp module")
        extdir.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], ext_fullpath)


setup(
    packages=["pbrp"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("pbrp._pbrp")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
