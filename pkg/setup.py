"""Packaging cregro."""

from setuptools import setup, find_packages


setup(
    name='cregro',
    version='0.1.0',
    license='BSD-3-Clause',
    license_files=['LICENSE'],
    description='Exact weight initial modules, Betti tables and componentwise regularity.',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    author='cregro developers',
    install_requires=['sympy', 'numpy', 'pyyaml'],
    url='https://github.com/cregro/cregro',
    packages=find_packages(
        exclude=(
            'tests*', 'testing*', 'examples*',
            'build*', 'dist*', 'docs*', 'venv*'
        )
    ),
    package_data={'cregro': ['schemas/*.json']},
    python_requires='>=3.8',
    test_suite='tests',
    entry_points={
        'console_scripts': [
            'cregro = cregro.main:execute',
        ]
    },
    classifiers=[
        'Intended Audience :: Science/Research',
        'Operating System :: MacOS :: MacOS X',
        'Operating System :: POSIX :: Linux',
        'Operating System :: Microsoft :: Windows',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
