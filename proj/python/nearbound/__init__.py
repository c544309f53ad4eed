"""Independence-number decisions near the size-based upper bound."""

from ._nearbound import *  # noqa: F401,F403
from ._nearbound import __doc__  # noqa: F401
