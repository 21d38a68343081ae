"""Ising-model evolutionary optimization on the integer sine benchmark."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
