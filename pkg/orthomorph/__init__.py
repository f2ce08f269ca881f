"""Orthomorph project variables."""
import os
import os.path

from ._version import __version__

VERSION = tuple(int(part) for part in __version__.split('.'))

# Defines hard coded global variables
ORTHOMORPH_VERSION = __version__
ORTHOMORPH_VERSION_MESSAGE = 'orthomorph version %(version)s'
ORTHOMORPH_USER_FOLDER = os.path.expanduser('~/.orthomorph/')

# Defines configurable global variables
ORTHOMORPH_CONFIG_FILE = os.environ.get(
    'ORTHOMORPH_CONFIG_FILE', ORTHOMORPH_USER_FOLDER + 'config.json')
ORTHOMORPH_DEBUG = os.environ.get('ORTHOMORPH_DEBUG', '') not in ('', '0')

__all__ = ['__version__', 'VERSION']
