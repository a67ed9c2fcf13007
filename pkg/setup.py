#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import sys

from setuptools import find_packages

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

if sys.argv[-1] == "publish":
    os.system("python setup.py sdist upload")
    sys.exit()

if sys.argv[-1] == "test":
    try:
        __import__("py")
    except ImportError:
        print("py.test required.")
        sys.exit(1)

    errors = os.system("py.test tests/")
    sys.exit(bool(errors))

install = [
    "attrs",
    "cachetools",
    "dogpile.cache",
    "lark",
    "networkx>=2.6",
    "pyyaml",
    "structlog",
    "sympy>=1.9",
    "tablib",
    "typing_extensions",
]

setup(
    name="plucker_asl",
    version="0.1.0",
    description="Verify Groebner bases, straightening laws and interval graph facts for Plücker ideals",
    long_description=(open("README.rst", encoding="utf-8").read()),
    packages=find_packages(include=["plucker_asl*"]),
    include_package_data=True,
    license="MIT",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={"console_scripts": ["plucker-asl = plucker_asl.cli:main"]},
    tests_require=["pytest", "pytest-cov", "hypothesis"],
    install_requires=install,
)
