"""Transport-entropy inequality lab: python bindings over the C++ core."""

from ._tel import *  # noqa: F401,F403
from ._tel import __version__  # noqa: F401
