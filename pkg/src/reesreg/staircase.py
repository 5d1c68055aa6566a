"""Ideal descriptions and exponent sumsets of their powers.

An equigenerated (x, y)-primary monomial ideal in two variables is pinned
down by its generation degree d and the x-exponents of its generators:

    I = (x^d, x^a1 y^(d-a1), ..., x^ap y^(d-ap), y^d),
    S = {0, a1, ..., ap, d},   T = {0, d-ap, ..., d-a1, d}.

The minimal generators of I^n all sit in degree nd, with x-exponent set
nS = S + ... + S (n-fold Minkowski sum).  Everything downstream (reduction
numbers, Ratliff-Rush closures, regularity, Hilbert functions) reads off
these sumsets, so they are kept as packed bit tables with an incremental
n -> n+1 step.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ._bits import mask, popcount_prefix
from .errors import CapExceeded, ResourceLimit

# Guard rails for sumset growth.  nd is the bit width of one sumset table;
# the total budget bounds the whole family kept by an iterative scan.
DEFAULT_MAX_ND = 1 << 20
DEFAULT_MAX_TOTAL_BITS = 1 << 28


class IdealError(ValueError):
    """Invalid ideal description."""


class DegreeError(IdealError):
    """Generation degree below 2."""


class ParameterIdealError(IdealError):
    """Empty interior: the parameter ideal (x^d, y^d) is out of scope."""


class ExponentOrderError(IdealError):
    """Interior exponents not strictly increasing."""


class ExponentRangeError(IdealError):
    """Interior exponent outside the open interval (0, d)."""


@dataclass(frozen=True)
class IdealSpec:
    """Degree d plus strictly increasing interior x-exponents."""

    d: int
    interior: tuple[int, ...]

    @property
    def S(self) -> tuple[int, ...]:
        return (0,) + self.interior + (self.d,)

    @property
    def T(self) -> tuple[int, ...]:
        return (0,) + tuple(self.d - a for a in reversed(self.interior)) + (self.d,)

    def generator_exponents(self) -> list[tuple[int, int]]:
        """(x, y)-exponents of the minimal generators, by descending x."""
        return [(s, self.d - s) for s in sorted(self.S, reverse=True)]


def make_ideal(d: int, interior) -> IdealSpec:
    """Validated IdealSpec for degree d and interior exponent list."""
    if d != int(d) or d < 2:
        raise DegreeError(f"generation degree must be an integer >= 2, got {d!r}")
    exps = tuple(int(a) for a in interior)
    if not exps:
        raise ParameterIdealError(
            "parameter ideal (x^d, y^d): at least one interior exponent is required"
        )
    if any(e != a for e, a in zip(exps, interior)):
        raise ExponentRangeError(f"exponents must be integers, got {list(interior)!r}")
    if any(y <= x for x, y in zip(exps, exps[1:])):
        raise ExponentOrderError(
            f"exponents must be strictly increasing, got {list(exps)!r}"
        )
    if exps[0] <= 0 or exps[-1] >= d:
        raise ExponentRangeError(
            f"exponent out of range: interior exponents must lie strictly between 0 and {d}"
        )
    return IdealSpec(int(d), exps)


def mirror(spec: IdealSpec) -> IdealSpec:
    """The ideal with x and y swapped; an involution on specs."""
    return IdealSpec(spec.d, tuple(spec.d - a for a in reversed(spec.interior)))


@dataclass(frozen=True)
class PowerSumset:
    """nS as a bit table on [0, nd], with a counting table for range queries."""

    n: int
    d: int
    bits: int

    @property
    def nd(self) -> int:
        return self.n * self.d

    @cached_property
    def prefix(self) -> list[int]:
        return popcount_prefix(self.bits, self.nd + 1)

    def contains(self, w: int) -> bool:
        if w < 0 or w > self.nd:
            return False
        return (self.bits >> w) & 1 == 1

    def members(self) -> list[int]:
        from ._bits import iter_bits

        return list(iter_bits(self.bits))


def has_member_in_range(ps: PowerSumset, lo: int, hi: int) -> bool:
    """True iff nS meets [lo, hi]; constant time via the prefix table.

    A reversed interval is normalized to [min, max] and the query is
    clamped to the table window [0, nd].
    """
    if lo > hi:
        lo, hi = hi, lo
    lo = max(lo, 0)
    hi = min(hi, ps.nd)
    if lo > hi:
        return False
    prefix = ps.prefix
    below = prefix[lo - 1] if lo > 0 else 0
    return prefix[hi] - below > 0


class PowerFamily:
    """Sumsets of one ideal, grown on demand: (n+1)S = union over s of nS + s.

    Growth is guarded twice: a per-table ceiling on nd (table width) and a
    budget on the total bits held, so a runaway scan fails loudly instead
    of exhausting memory.
    """

    def __init__(
        self,
        spec: IdealSpec,
        max_nd: int = DEFAULT_MAX_ND,
        max_total_bits: int = DEFAULT_MAX_TOTAL_BITS,
    ):
        self.spec = spec
        self.max_nd = max_nd
        self.max_total_bits = max_total_bits
        first = 0
        for s in spec.S:
            first |= 1 << s
        self._sets = [PowerSumset(1, spec.d, first)]
        self._total_bits = spec.d + 1

    def get(self, n: int) -> PowerSumset:
        if n < 1:
            raise ValueError(f"power must be >= 1, got {n}")
        d = self.spec.d
        while len(self._sets) < n:
            m = len(self._sets) + 1
            if m * d > self.max_nd:
                raise ResourceLimit("sumset table width", m * d, self.max_nd)
            if self._total_bits + m * d + 1 > self.max_total_bits:
                raise ResourceLimit(
                    "sumset family size", self._total_bits + m * d + 1, self.max_total_bits
                )
            prev = self._sets[-1].bits
            nxt = 0
            for s in self.spec.S:
                nxt |= prev << s
            self._sets.append(PowerSumset(m, d, nxt))
            self._total_bits += m * d + 1
        return self._sets[n - 1]


def power_sumsets(
    spec: IdealSpec, n_max: int, max_nd: int = DEFAULT_MAX_ND
) -> list[PowerSumset]:
    """The sumsets nS for n = 1..n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    family = PowerFamily(spec, max_nd=max_nd)
    return [family.get(n) for n in range(1, n_max + 1)]


def theoretical_cap(spec: IdealSpec) -> int:
    """e(e-1) for multiplicity e = d^2: a universal bound on every index here."""
    e = spec.d * spec.d
    return e * (e - 1)


def reduction_number(
    spec: IdealSpec, cap: int | None = None, family: PowerFamily | None = None
) -> int:
    """Least n with (n+1)S = nS union (nS + d).

    From that n on, J = (x^d, y^d) rewrites every new generator of the next
    power, so this is the reduction number of I with respect to J.  A scan
    passing the cap raises CapExceeded rather than answering.
    """
    cap_eff = cap if cap is not None else theoretical_cap(spec)
    fam = family if family is not None else PowerFamily(spec)
    d = spec.d
    n = 1
    while n <= cap_eff:
        cur = fam.get(n).bits
        if fam.get(n + 1).bits == cur | (cur << d):
            return n
        n += 1
    raise CapExceeded("reduction number scan", cap_eff)
