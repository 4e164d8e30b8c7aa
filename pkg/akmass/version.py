"""Version info for akmass."""

__version_info__ = (0, 3, 1)
__version__ = '.'.join(str(i) for i in __version_info__)
