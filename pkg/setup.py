#!/usr/bin/env python

from setuptools import setup, find_packages

def _read(fname):
    try:
        with open(fname) as fobj:
            return fobj.read()

    except IOError:
        return ''


setup(
    name='rrembed',
    version='0.1.0',
    description='Emitter dynamics in a cavity dressed by a molecular ensemble',
    long_description=_read("Readme.md"),
    license='MIT',
    packages=find_packages('src'),
    package_dir={'': 'src'},
    setup_requires=['pytest-runner'],
    install_requires=['numpy', 'scipy>=1.6', 'pandas'],
    tests_require=['pytest'],
    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',

        'Programming Language :: Python :: 3',

        'Topic :: Scientific/Engineering :: Physics',
    ],
    entry_points={
          'console_scripts': [
              'rrembed = rrembed.cli:main',
          ]
    },
    extras_require={
        'dask': ['dask'],
    }
)
