# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder of nflab.

import os
import sys
sys.path.insert(0, os.path.abspath('.'))
sys.path.insert(0, os.path.abspath('../'))

# -- Project information -----------------------------------------------------

project = 'nflab'
copyright = '2026, the nflab developers'
author = 'the nflab developers'

# The version is read from the package, as setup.py does
version = ''
with open(os.path.join(os.path.dirname(__file__), '..', 'nflab', '__init__.py'), 'r') as fid:
    for line in (line.strip() for line in fid):
        if line.startswith('__version__'):
            version = line.split('=')[1].strip().strip('\'')
            break
release = version

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]
autodoc_member_order = 'bysource'
templates_path = ['.templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = ['.build', 'Thumbs.db', '.DS_Store']
pygments_style = None

# -- Output ------------------------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['.static']
htmlhelp_basename = 'nflabdoc'

latex_documents = [
    (master_doc, 'nflab.tex', 'nflab Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'nflab', 'nflab Documentation', [author], 1)
]
texinfo_documents = [
    (master_doc, 'nflab', 'nflab Documentation', author, 'nflab',
     'n-filters on semilattices, distributive lattices, and Boolean algebras.', 'Miscellaneous'),
]
epub_title = project
epub_exclude_files = ['search.html']
