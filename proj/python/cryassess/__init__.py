"""Learning-assessment analytics over per-child quarterly records."""

try:
    from ._cryassess import *  # noqa: F401,F403
except ImportError:  # in-tree builds leave the extension next to the package
    from _cryassess import *  # noqa: F401,F403
