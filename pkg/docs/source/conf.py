import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

from pygraded.version import __version__  # noqa: E402

project = 'PyGraded'
release = __version__
version = '.'.join(__version__.split('.')[:2])
master_doc = 'index'

extensions = [
    'sphinxcontrib.apidoc',
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]

apidoc_module_dir = '../../pygraded'
apidoc_output_dir = 'api'
apidoc_excluded_paths = ['*tests*', 'cli']
apidoc_separate_modules = True

html_theme = 'nature'
