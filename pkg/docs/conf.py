# sphinx configuration used by jupyter-book
author = ""
copyright = "2026"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
extensions = [
    "myst_nb",
    "jupyter_book",
    "sphinx_external_toc",
    "sphinx_book_theme",
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "numpydoc",
    "sphinx.ext.mathjax",
]
external_toc_exclude_missing = False
external_toc_path = "_toc.yml"
html_theme = "sphinx_book_theme"
html_title = "anisobolev"
language = None
myst_enable_extensions = ["colon_fence", "dollarmath"]
pygments_style = "sphinx"
autosummary_generate = True


import anisobolev as ab

version = ab.__version__
release = ab.__version__
