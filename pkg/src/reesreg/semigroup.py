"""Numerical-semigroup membership tables.

build_membership computes, for a finite set G of non-negative integer
generators, the membership table on [0, bound] of the monoid of all
non-negative integer combinations of G.  Closure under a single generator
g is a run of doubled shifted-ORs (shift by g, 2g, 4g, ...), and because
addition commutes, one such pass per generator closes the whole table.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bits import has_bit, mask


def _close(bits: int, generators: frozenset[int], bound: int) -> int:
    window = mask(bound + 1)
    bits &= window
    for g in sorted(g for g in generators if 0 < g <= bound):
        shift = g
        while shift <= bound:
            bits |= (bits << shift) & window
            shift <<= 1
    return bits


@dataclass(frozen=True)
class MembershipTable:
    """Membership of the semigroup generated by `generators` on [0, bound]."""

    generators: frozenset[int]
    bound: int
    bits: int

    def contains(self, m: int) -> bool:
        """True iff m is a non-negative integer combination of the generators.

        Queries outside [0, bound] raise instead of returning a silent false.
        """
        if m < 0 or m > self.bound:
            raise ValueError(
                f"membership query {m} outside table range [0, {self.bound}]"
            )
        return has_bit(self.bits, m)

    def extend(self, bound: int) -> "MembershipTable":
        """A table on the larger [0, bound], warm-started from this one."""
        if bound <= self.bound:
            return self
        return MembershipTable(
            self.generators, bound, _close(self.bits, self.generators, bound)
        )

    def members(self) -> list[int]:
        from ._bits import iter_bits

        return list(iter_bits(self.bits))


def build_membership(generators, bound: int) -> MembershipTable:
    """Membership table of <generators> on [0, bound].

    Duplicate or unsorted input is normalized; 0 always belongs.  An input
    with no positive generators yields the degenerate table {0}, which is
    the honest answer for the monoid it generates.
    """
    if bound < 0:
        raise ValueError(f"table bound must be non-negative, got {bound}")
    gens = set()
    for g in generators:
        if g != int(g) or g < 0:
            raise ValueError(f"generators must be non-negative integers, got {g!r}")
        gens.add(int(g))
    gens.add(0)
    frozen = frozenset(gens)
    return MembershipTable(frozen, bound, _close(1, frozen, bound))
