from setuptools import setup, find_packages

setup(
    name="rigid-flow-frames",
    version="0.1.0",
    author="Your Name",
    description="Flow-adapted frame invariants: rigidity, rotation and isometry of timelike flows",
    packages=find_packages(include=["src", "src.*"]),
    install_requires=[
        "numpy>=1.23.0",
        "scipy>=1.9.0",
        "pandas>=1.5.0",
        "pyyaml>=6.0",
        "lark>=1.1.0",
    ],
    entry_points={
        "console_scripts": ["rigidflow=src.cli.main:main"],
    },
    python_requires=">=3.8",
)
