from ._turansw import *  # noqa: F401,F403
from ._turansw import __doc__  # noqa: F401
