# Sphinx configuration for the unitary_genera API documentation.
# Options: https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath("../src"))

from unitary_genera import __version__  # noqa: E402

# -- Project information -----------------------------------------------------

project = "unitary_genera"
copyright = "2026, unitary_genera developers"
author = "unitary_genera developers"
release = __version__

# -- General configuration ---------------------------------------------------

# mathjax renders the characteristic class formulas in the docstrings
extensions = [
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "autoapi.extension",
]
templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]

# -- Extension configuration -------------------------------------------------

autoapi_dirs = ["../src/unitary_genera"]
autoapi_options = [
    "members",
    "show-inheritance",
    "show-module-summary",
]
autodoc_typehints = "description"
