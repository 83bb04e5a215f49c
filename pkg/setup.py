from setuptools import setup, find_packages

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name="maxdens",
    version="0.1.0",
    description="Maximum density Beta/Dirichlet parameters for a target location and scale, with the baselines "
                "and studies that compare them.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["maxdens", "maxdens.*"]),
    python_requires=">=3.10",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=[
        "pydantic>=2.6",
        "numpy>=1.24",
        "pandas>=2.0",
    ],
    extras_require={
        "tests": ["pytest>=7.4", "scipy>=1.10"],
    },
    entry_points={
        "console_scripts": ["maxdens = maxdens.cli:main"],
    },
)
