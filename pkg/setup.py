#!/usr/bin/env python3

import sys
assert sys.version_info.major==3, 'This is a Python 3 module.'

from setuptools import setup

setup(name='MixShuffle',
      version='1.0',
      description='Free Baxter algebras through mixable shuffle products',
      author='The MixShuffle authors',
      license='GPLv2+',
      packages=['mixshuffle'],
      python_requires='>=3.8',
      install_requires=['lark>=1.1'],
      extras_require={'test': ['pytest', 'hypothesis']},
      entry_points = {'console_scripts': ['mixshuffle = mixshuffle.cli:main']},
     )
