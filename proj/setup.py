"""CMake-driven build for the polywalk_core extension."""
import os
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
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        src_dir = Path(__file__).parent.resolve()
        cfg = os.environ.get("POLYWALK_BUILD_TYPE", "Release")
        subprocess.run(
            [
                "cmake",
                "-S", str(src_dir),
                "-B", str(build_dir),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "polywalk_core"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("polywalk_core")],
    cmdclass={"build_ext": CMakeBuild},
)
