"""
Setup configuration for hypercut, exact hypergraph minimum cuts
"""

from setuptools import setup, find_packages # type: ignore

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

setup(
    name="hypercut",
    version="0.1.0",
    description="Exact minimum cuts of unweighted hypergraphs, with a brute-force oracle and adversarial generators",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[r for r in requirements if not r.startswith("pytest")],
    extras_require={"test": ["pytest==8.3.5"]},
    entry_points={"console_scripts": ["hypercut=hypercut.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.10",
    keywords="hypergraph minimum cut connectivity expander decomposition max flow",
)
