#!/usr/bin/env python

'''
setup.py - Python setuptools file for the UnElGamal package.

Copyright (C) 2026 The UnElGamal authors

This code is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of the
License, or (at your option) any later version.

This code is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU Lesser General Public License
along with this code.  If not, see <http://www.gnu.org/licenses/>.
'''

from setuptools import setup

setup (name = 'UnElGamal',
    version = '0.1',
    install_requires = ['numpy'],
    extras_require = {'test': ['pytest>=7', 'hypothesis']},
    python_requires = '>=3.8',
    description = 'ElGamal encryption and discrete logarithms over the group of units U(n), n = p^m or 2p^m',
    packages = ['unelgamal'],
    entry_points = {'console_scripts': ['un-elgamal = unelgamal.cli:main']},
    license='LGPL',
    platforms='Linux; Windows; OS X'
    )
