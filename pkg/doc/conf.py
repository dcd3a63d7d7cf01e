#!/usr/bin/env python3
#
# squeezelink documentation build configuration file.

import pathlib
import sys

root = pathlib.Path(__file__)
sys.path.insert(0, str(root.parent.parent))
extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'squeezelink'
copyright = '2026, the squeezelink developers'
author = 'the squeezelink developers'

version = '0.1'
release = '0.1.0'

rst_epilog = '.. |project| replace:: *%s*' % project

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'alabaster'
html_show_sourcelink = False

htmlhelp_basename = 'squeezelinkdoc'

latex_documents = [
    (master_doc, 'squeezelink.tex', 'squeezelink Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'squeezelink', 'squeezelink Documentation', [author], 1)
]
