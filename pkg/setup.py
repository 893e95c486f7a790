"""Whittaker setup script."""
from setuptools import find_packages, setup

with open("README.md", encoding="utf-8") as f:
    long_description = f.read()

with open("requirements.txt", encoding="utf-8") as f:
    install_requires = [line.split("#")[0].strip() for line in f if line.strip()]

setup(
    name="whittaker",
    version="0.0.0",
    description=(
        "Whittaker - exact representation theory of GL2 over finite local rings"
    ),
    license="MIT",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["whittaker", "whittaker.*"]),
    python_requires=">=3.10",
    install_requires=install_requires,
    entry_points={
        "console_scripts": ["whittaker=whittaker.components.cli:init"],
    },
)
