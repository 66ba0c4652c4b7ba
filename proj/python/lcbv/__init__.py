try:
    from ._lcbv import *  # noqa: F401,F403
except ImportError:
    from _lcbv import *  # noqa: F401,F403
