#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import excitonring


# General information about the project.
project = "ExcitonRing"
author = "ExcitonRing contributors"
language = "en"

release = excitonring.__version__  # The full version, including alpha/beta/rc tags.
version = ".".join(release.split(".")[:2])  # The short X.Y version.

extensions = [
    "recommonmark",
    "sphinx_markdown_tables",
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode"]

source_suffix = [".rst", ".md"]
exclude_patterns = ["README.md"]

html_theme = "sphinx_rtd_theme"
html_show_sourcelink = False
html_show_copyright = False
html_show_sphinx = False

autodoc_member_order = "bysource"
napoleon_include_init_with_doc = True
