"""Crypto kernels: a pure-Python reference and an optional compiled core.

``pure`` is always available. ``fast`` points at the compiled extension when
it was built and falls back to the reference kernels otherwise; callers can
check :data:`HAVE_COMPILED` to know which one they got.
"""

from . import pure

try:
    from . import _speed as fast

    HAVE_COMPILED = True
except ImportError:
    fast = pure
    HAVE_COMPILED = False

__all__ = ["pure", "fast", "HAVE_COMPILED"]
