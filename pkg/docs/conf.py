import os
import sys
from datetime import datetime

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath("../."))

import depthlab  # noqa

now = datetime.now()

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
    "sphinx_copybutton",
    "sphinx_rtd_theme",
    "sphinxcontrib.autodoc_pydantic",
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
}

autodoc_pydantic_model_show_json = False

# General information about the project.
project = "depthlab"
copyright = str(now.year) + f" {project} Authors"  # noqa

# The short X.Y version.
version = depthlab.__version__
release = version

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_theme_options = {
    "display_version": True,
}

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = "sphinx"

# If true, Sphinx will warn about all references where the target cannot be found.
nitpicky = True
nitpick_ignore_regex = [
    (r"py:class", r"ComputedFieldInfo"),
    (r"py:class", r"FieldInfo"),
    (r"py:class", r"ConfigDict"),
    (r"py:class", r"numpy\..*"),
    (r"py:class", r"np\..*"),
    (r"py:class", r"Monomial"),
]

autodoc_member_order = "bysource"
