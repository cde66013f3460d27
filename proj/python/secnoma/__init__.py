"""Secrecy outage analysis and fair power allocation for two-user NOMA."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
