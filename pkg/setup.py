import os
from setuptools import setup, find_packages


VERSION = '0.1.0'

#: Read description
with open('README.rst', 'r') as readme:
    README_TEXT = readme.read()


def write_version_py():

    filename = os.path.join(
        os.path.abspath('.'),
        'pygraded',
        'version.py')

    ver = f"__version__ = '{VERSION}'\n"
    with open(filename, 'w') as outfile:
        outfile.write(ver)


write_version_py()

setup(
    name='PyGraded',
    version=VERSION,
    description='Exact verification toolkit for graded noncommutative '
                'algebras and color Lie algebras',
    long_description=README_TEXT,
    packages=find_packages(),
    package_data={'pygraded': ['fixtures/*.alg', 'fixtures/*.cl']},
    include_package_data=True,
    install_requires=[
        'click>=7.0',
        'traits>=6.1.0',
        'numpy>=1.17',
        'pandas>=1.0.0',
        'networkx>=2.2',
        'sympy>=1.13',
    ],
    extras_require={
        'test': [
            'testfixtures>=4.10.0',
            'mock>=2.0.0',
            'hypothesis>=5.0',
            'flake8>=3.7.7',
            'coverage>=4.3.4',
        ]
    },
    entry_points={
        'console_scripts': ['PyGraded = pygraded.cli.__main__:pygraded']
    }
)
