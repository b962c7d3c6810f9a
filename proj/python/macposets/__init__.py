"""Macaulay posets, monomial posets of graded rings, and poset operations."""

try:
    from macposets._macposets import *  # noqa: F401,F403
    from macposets._macposets import __doc__  # noqa: F401
except ImportError:  # running against a build tree with the bare extension
    from _macposets import *  # noqa: F401,F403
