# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.

from setuptools import setup, find_packages

with open('requirements.txt', 'r') as f:
    dependencies = f.read().splitlines()

with open("README.rst") as f:
    long_desc = f.read()

descr = "Rearrangements and Sobolev-type inequalities for monomial weights"
name = 'anisobolev'
version = '0.1.0'  # Put this in __init__.py

setup(
    name=name,
    version=version,
    packages=find_packages(include=["anisobolev", "anisobolev.*"]),
    scripts=[],
    license='MPL-2.0',
    include_package_data=True,
    description=descr,
    long_description=long_desc,
    install_requires=dependencies,
    python_requires=">=3.8",
    entry_points={
        'console_scripts': ['anisobolev = anisobolev.workflow.cli:main'],
    },
)
