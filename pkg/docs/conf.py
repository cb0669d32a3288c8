#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# arithring documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
import sys
from pathlib import Path

HERE = Path(__file__).parent
sys.path[:0] = [str(HERE.parent)]

import arithring  # noqa

# -- General configuration ---------------------------------------------

needs_sphinx = "3.4"  # Nicer param docs

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx_autodoc_typehints",  # needs to be after napoleon
    "sphinx.ext.autosummary",
    "scanpydoc.elegant_typehints",
    "scanpydoc.definition_list_typed_field",
    "scanpydoc.autosummary_generate_imported",
    "sphinx_copybutton",
]

source_suffix = ".rst"

# Generate the API documentation when building
autosummary_generate = True
autodoc_member_order = "bysource"
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = False
napoleon_use_rtype = True  # having a separate entry generally helps readability
napoleon_use_param = True
todo_include_todos = False
annotate_defaults = True  # scanpydoc option

master_doc = "index"

intersphinx_mapping = dict(
    numpy=("https://numpy.org/doc/stable/", None),
    python=("https://docs.python.org/3", None),
    sympy=("https://docs.sympy.org/latest/", None),
)

project = u"arithring"
copyright = u"2026, arithring developers"
author = u"arithring developers"

version = arithring.__version__
release = arithring.__version__

language = None

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

pygments_style = "default"
pygments_dark_style = "default"


# -- Options for HTML output -------------------------------------------

html_show_sourcelink = True
html_theme = "pydata_sphinx_theme"
html_title = "arithring"
html_show_sphinx = False


def setup(app):
    # https://github.com/pradyunsg/furo/issues/49
    app.config.pygments_dark_style = "default"
