"""Builds the hellygraphs extension by delegating to the repository's CMake.

The module target (_core) is compiled by the same CMakeLists the C++ build
uses, so the wheel and a developer build can never drift apart.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DHELLY_BUILD_TESTS=OFF",
                "-DHELLY_BUILD_CLI=OFF",
                "-DHELLY_BUILD_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(["cmake", "--build", str(build_dir), "--target", "_core", "-j"], check=True)
        built = sorted((build_dir / "python" / "hellygraphs").glob("_core*"))
        if not built:
            raise RuntimeError("CMake did not produce the _core module")
        destination = Path(self.get_ext_fullpath(ext.name)).resolve()
        destination.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], destination)


setup(
    ext_modules=[CMakeExtension("hellygraphs._core")],
    cmdclass={"build_ext": CMakeBuild},
)
