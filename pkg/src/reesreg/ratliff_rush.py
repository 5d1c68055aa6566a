"""Ratliff-Rush closures of powers of two-variable monomial ideals.

For I equigenerated in degree d with exponent sets S and T, the closure of
I^n is again a monomial ideal, generated in degrees nd and nd + 1 by

    { x^u y^v : u, v <= nd <= u + v,
                (u in <S> and v in <T>) or (nd - u in <T> and nd - v in <S>) },

where <S> and <T> are the numerical semigroups the exponent sets generate.
Such a generator lies in I^n itself iff the sumset nS meets the interval
between u and nd - v (in either order), which reduces every closure-versus-
power question to gap bookkeeping on nS.

rr_oracle recomputes the closure the slow way, as a union of colon ideals
I^(n+t) : (x^(td), y^(td)), and is kept deliberately independent so the two
routes can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from ._bits import iter_bits, lowest_bit, mask, reverse_window
from .semigroup import MembershipTable, build_membership
from .staircase import IdealSpec, PowerFamily, PowerSumset


class Monomial(NamedTuple):
    """Exponent pair: x^u * y^v."""

    u: int
    v: int

    def render(self) -> str:
        return f"x^{self.u}*y^{self.v}"


def semigroup_tables(
    spec: IdealSpec, bound: int
) -> tuple[MembershipTable, MembershipTable]:
    """Membership tables for <S> and <T> on [0, bound]."""
    return build_membership(spec.S, bound), build_membership(spec.T, bound)


def _require_tables(
    spec: IdealSpec,
    bound: int,
    tables: tuple[MembershipTable, MembershipTable] | None,
) -> tuple[MembershipTable, MembershipTable]:
    if tables is None:
        return semigroup_tables(spec, bound)
    sg_s, sg_t = tables
    if sg_s.bound < bound or sg_t.bound < bound:
        raise ValueError(
            f"semigroup tables bound {min(sg_s.bound, sg_t.bound)} below required {bound}"
        )
    return sg_s, sg_t


@dataclass
class RRClosure:
    """Generators of the closure of I^n, stored as one bit row per x-exponent.

    rows[u] has bit v set iff x^u y^v is in the generator list.  The rows
    keep multi-million-generator listings affordable: iteration, counting,
    minimalization and region comparisons all read the rows directly.
    """

    n: int
    d: int
    rows: list[int]
    _region: list[int] | None = field(default=None, repr=False)

    @property
    def nd(self) -> int:
        return self.n * self.d

    @property
    def count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def has_generator(self, u: int, v: int) -> bool:
        if u < 0 or u > self.nd or v < 0:
            return False
        return (self.rows[u] >> v) & 1 == 1

    def iter_generators(self) -> Iterator[Monomial]:
        """All generators, sorted by u then v, deduplicated by construction."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row):
                yield Monomial(u, v)

    @property
    def generators(self) -> list[Monomial]:
        return list(self.iter_generators())

    def region_min_v(self) -> list[int]:
        """For each r in [0, nd], the least s with x^r y^s in the ideal the
        generators span.  Two closures are equal iff these profiles agree."""
        if self._region is None:
            profile = []
            best = self.nd + 1
            for row in self.rows:
                if row:
                    best = min(best, lowest_bit(row))
                profile.append(best)
            self._region = profile
        return self._region

    def contains_monomial(self, r: int, s: int) -> bool:
        if r < 0 or s < 0:
            return False
        return s >= self.region_min_v()[min(r, self.nd)]

    def minimal_generators(self) -> list[Monomial]:
        """The divisibility-minimal generators (the corners of the staircase)."""
        out = []
        best = None
        for u, row in enumerate(self.rows):
            if not row:
                continue
            low = lowest_bit(row)
            if best is None or low < best:
                out.append(Monomial(u, low))
                best = low
        return out


def rr_generators(
    spec: IdealSpec,
    n: int,
    tables: tuple[MembershipTable, MembershipTable] | None = None,
) -> RRClosure:
    """Generators of the closure of I^n from semigroup membership alone.

    Row u collects, over v in [nd - u, nd], the v with v in <T> (when u is
    in <S>) and the v with nd - v in <S> (when nd - u is in <T>).  The pure
    powers x^nd and y^nd always appear, so the rows span an ideal containing
    I^n even in degenerate cases.
    """
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    nd = n * spec.d
    sg_s, sg_t = _require_tables(spec, nd, tables)
    window = mask(nd + 1)
    in_s = sg_s.bits & window
    in_t = sg_t.bits & window
    from_s = reverse_window(in_s, nd + 1)  # bit u set iff nd - u in <S>
    from_t = reverse_window(in_t, nd + 1)
    rows = []
    for u in range(nd + 1):
        high = window ^ mask(nd - u)  # v >= nd - u
        row = 0
        if (in_s >> u) & 1:
            row |= in_t & high
        if (from_t >> u) & 1:
            row |= from_s & high
        rows.append(row)
    return RRClosure(n, spec.d, rows)


def _off_sumset_sides(
    spec: IdealSpec,
    ps: PowerSumset,
    tables: tuple[MembershipTable, MembershipTable] | None,
) -> tuple[int, int]:
    """Bit tables of <S>-points and of mirrored <T>-points not in nS."""
    nd = ps.nd
    sg_s, sg_t = _require_tables(spec, nd, tables)
    window = mask(nd + 1)
    outside = ~ps.bits & window
    side_s = sg_s.bits & outside
    side_t = reverse_window(sg_t.bits & window, nd + 1) & outside
    return side_s, side_t


def rr_equals_power(
    spec: IdealSpec,
    ps: PowerSumset,
    tables: tuple[MembershipTable, MembershipTable] | None = None,
) -> tuple[bool, Monomial | None]:
    """Does the closure of I^n equal I^n?  On failure, also the first bad
    generator in scan order (u ascending, then v ascending).

    A generator (u, v) escapes I^n exactly when u and nd - v sit strictly
    inside the same gap of nS, so the test walks the off-sumset semigroup
    points once, resetting at every sumset member in between.
    """
    nd = ps.nd
    side_s, side_t = _off_sumset_sides(spec, ps, tables)
    if side_s == 0 or side_t == 0:
        return True, None
    sumset = ps.bits
    best_s: int | None = None
    best_t: int | None = None
    prev: int | None = None
    for p in iter_bits(side_s | side_t):
        if prev is not None and p - prev > 1:
            if (sumset >> (prev + 1)) & mask(p - prev - 1):
                best_s = best_t = None  # crossed into a new gap
        in_s = (side_s >> p) & 1
        in_t = (side_t >> p) & 1
        v: int | None = None
        if in_s:
            partner = p if in_t else best_t
            if partner is not None:
                v = nd - partner
        if in_t:
            partner = p if in_s else best_s
            if partner is not None and (v is None or nd - partner < v):
                v = nd - partner
        if v is not None:
            return False, Monomial(p, v)
        if in_s:
            best_s = p
        if in_t:
            best_t = p
        prev = p
    return True, None


def rr_equals_power_at_initial_degree(
    spec: IdealSpec,
    ps: PowerSumset,
    tables: tuple[MembershipTable, MembershipTable] | None = None,
) -> tuple[bool, int | None]:
    """Degree-nd part only: does the closure add a monomial x^u y^(nd-u)?

    Such a u lies in <S>, has nd - u in <T>, and misses nS.  Returns the
    least failing u when equality breaks.
    """
    side_s, side_t = _off_sumset_sides(spec, ps, tables)
    both = side_s & side_t
    if both:
        return False, lowest_bit(both)
    return True, None


def _min_y_profile(ps: PowerSumset) -> list[int]:
    """profile[r] = least s with x^r y^s in I^n, for r in [0, nd]."""
    nd = ps.nd
    out = [0] * (nd + 1)
    members = ps.members()  # always includes 0 and nd
    for w0, w1 in zip(members, members[1:]):
        fill = nd - w0
        for r in range(w0, w1):
            out[r] = fill
    return out


def rr_oracle(spec: IdealSpec, n: int, t_max: int) -> RRClosure:
    """Closure of I^n as a union of colons, by plain exponent arithmetic.

    For each t <= t_max, x^r y^s lies in I^(n+t) : (x^(td), y^(td)) iff both
    shifts (r + td, s) and (r, s + td) land in the exponent region of
    I^(n+t).  Returns the minimal generators of the union over t.
    """
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    if t_max < 0:
        raise ValueError(f"t_max must be >= 0, got {t_max}")
    d = spec.d
    nd = n * d
    family = PowerFamily(spec)
    floor: list[int] | None = None
    for t in range(t_max + 1):
        profile = _min_y_profile(family.get(n + t))
        td = t * d
        cur = [max(profile[r + td], profile[r] - td, 0) for r in range(nd + 1)]
        floor = cur if floor is None else [min(a, b) for a, b in zip(floor, cur)]
    rows = [0] * (nd + 1)
    best: int | None = None
    for r, s in enumerate(floor):
        if best is None or s < best:
            rows[r] = 1 << s
            best = s
    return RRClosure(n, d, rows)
