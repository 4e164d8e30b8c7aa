from .errors import *  # noqa
from .jets import *  # noqa
from .riemann import *  # noqa
from .almost_kahler import *  # noqa
from .spinc import *  # noqa
from .ale import *  # noqa
from .catalog import *  # noqa

# expose library version and version info tuple
from .version import __version__ as _version, __version_info__ as _version_info
__version__ = _version
VERSION = _version
__version_info__ = _version_info
