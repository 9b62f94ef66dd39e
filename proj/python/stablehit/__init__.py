"""Maximum cliques, independent transversals and stable sets hitting every maximum clique."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
