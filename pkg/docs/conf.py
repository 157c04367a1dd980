# -*- coding: utf-8 -*-

"""
Sphinx configuration for the randomchannels manual.

The API pages come from Doxygen XML read through breathe. The XML is
generated from docs/Doxyfile when the builder starts.
"""

#pylint: disable=C0103,W0622

import subprocess
import os
import sys
import shutil
import burger
import sphinx_rtd_theme

## True when building on ReadTheDocs.org
on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

## Folder holding this file, the Doxyfile and the rst pages
CWD = os.path.dirname(os.path.abspath(__file__))

# Read the version strings without importing the package and numpy
sys.path.append(os.path.join(os.path.dirname(CWD), 'randomchannels'))
tempmodule = __import__('__pkginfo__')
sys.path.pop()

# -- Project information -----------------------------------------------------

project = tempmodule.TITLE
copyright = tempmodule.COPYRIGHT
author = tempmodule.AUTHOR
version = '.'.join([str(num) for num in tempmodule.NUMVERSION[:2]])
release = tempmodule.VERSION

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.mathjax',
    'sphinx.ext.githubpages',
    'breathe'
]

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['temp']
pygments_style = 'sphinx'

# -- HTML output -------------------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_show_sourcelink = False
htmlhelp_basename = project + 'doc'

# -- Breathe -----------------------------------------------------------------

breathe_projects = {
    project: os.path.join(CWD, 'temp', 'xml')
}
breathe_default_project = project

########################################


def generate_doxygen_xml(app):
    """
    Convert the README and run Doxygen on docs/Doxyfile.

    On ReadTheDocs the Doxygen html pages are copied next to the Sphinx
    output under doxygen/.
    """
    #pylint: disable=W0613

    # Doxygen can't create a nested folder
    burger.create_folder_if_needed(os.path.join(CWD, 'temp'))

    sys.path.append(CWD)
    readme_html = __import__('readme_html')
    sys.path.pop()
    readme_html.build_readme(CWD)

    try:
        retcode = subprocess.call(['doxygen', 'Doxyfile'], cwd=CWD)
        if retcode:
            sys.stderr.write('doxygen returned {}\n'.format(retcode))
    except OSError as error:
        sys.stderr.write('doxygen execution failed: {}\n'.format(error))
        return

    if on_rtd:
        destination = os.path.join(app.outdir, 'doxygen')
        burger.delete_directory(destination)
        shutil.copytree(os.path.join(CWD, 'temp', 'html'), destination)

########################################


def setup(app):
    """
    Register the Doxygen step with Sphinx.
    """

    app.connect('builder-inited', generate_doxygen_xml)
