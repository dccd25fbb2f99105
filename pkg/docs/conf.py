# -*- coding: utf-8 -*-
#
# pmbisect documentation build configuration file.

import os
import sys

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath('..'))

import pmbisect

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pmbisect'
copyright = u'2026, pmbisect developers'

version = pmbisect.__version__
release = pmbisect.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'
autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = 'pmbisectdoc'

# -- Options for LaTeX / man output ---------------------------------------

latex_documents = [
    ('index', 'pmbisect.tex', u'pmbisect Documentation',
     u'pmbisect developers', 'manual'),
]

man_pages = [
    ('index', 'pmbisect', u'pmbisect Documentation',
     [u'pmbisect developers'], 1)
]
