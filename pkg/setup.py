from setuptools import setup, find_packages

setup(
    name="transversal-lab",
    version="0.1.0",
    description="Brute-force laboratory for the quantified 3-DNF to graph transversal reduction",
    author="Transversal Lab Team",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "networkx>=2.8",
        "graphviz>=0.20",
    ],
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "transversal-lab=transversal_lab.main:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
)
