"""Failure types shared across modules.

Scans that give up carry their cap, resource guards carry the offending
dimension, and checkpoint problems name the bad line.  Nothing in this
package fails silently.
"""

from __future__ import annotations


class CapExceeded(RuntimeError):
    """An iterative scan passed its cap without resolving."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what}: cap {cap} exceeded")
        self.what = what
        self.cap = cap


class ResourceLimit(RuntimeError):
    """A computation would exceed a configured size ceiling."""

    def __init__(self, what: str, amount: int, ceiling: int):
        super().__init__(f"{what}: {amount} exceeds ceiling {ceiling}")
        self.what = what
        self.amount = amount
        self.ceiling = ceiling


class CheckpointError(RuntimeError):
    """A checkpoint file was rejected; refusing to resume from it."""
