try:
    from ._pulveriser import *  # noqa: F401,F403
except ImportError:  # in-build tree: module sits next to the package dir
    from _pulveriser import *  # noqa: F401,F403
