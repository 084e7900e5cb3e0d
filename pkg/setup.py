# Copyright 2018 The qmask Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import io
from setuptools import find_packages, setup

# This reads the __version__ variable from qmask/_version.py
__version__ = None
exec(open('qmask/_version.py').read())

# Readme file as long_description:
long_description = io.open('README.rst', encoding='utf-8').read()

# Read in requirements
requirements = open('runtime-requirements.txt').readlines()
requirements = [r.strip() for r in requirements]

setup(
    name='qmask',
    version=__version__,
    author='The qmask Developers',
    description='Construction and numerical certification of quantum '
                'information maskers.',
    long_description=long_description,
    install_requires=requirements,
    python_requires='>=3.6',
    license='Apache 2',
    packages=find_packages(),
    package_data={'qmask': ['maskers/golden/*.json']},
    entry_points={
        'console_scripts': ['qmask=qmask.cli.main:main'],
    })
