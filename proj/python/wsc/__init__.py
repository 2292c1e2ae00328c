"""Weakly bridged graph toolkit: recognition, LexBFS dismantling
certificates, cop-and-robber solving, clique-complex descent checks,
group-invariant simplices, and diameter/radius audits."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401
