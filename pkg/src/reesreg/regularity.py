"""Castelnuovo-Mumford regularity of the Rees algebra and the fiber ring.

Both regularities are least-index formulas anchored at the reduction
number r_J:

    reg Rees  = least n >= r_J with closure(I^n) = I^n,
    reg fiber = least n >= r_J with equality in the generating degree nd,

and both decompose as max(r_J, stability index) for the corresponding
stability index.  eu_check compares the two regularities; whenever the
Rees one is strictly larger, it attaches a monomial witness plus a
boundary certificate: a pair a + b = nd + 1 where one coordinate steps
out of its semigroup exactly while the other steps in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from .errors import CapExceeded
from .ratliff_rush import (
    Monomial,
    rr_equals_power,
    rr_equals_power_at_initial_degree,
    semigroup_tables,
)
from .semigroup import MembershipTable
from .staircase import (
    DEFAULT_MAX_ND,
    IdealSpec,
    PowerFamily,
    reduction_number,
    theoretical_cap,
)

# Operational cap policy: start well above the reduction number, escalate
# geometrically, stop at the universal multiplicity bound.
CAP_FLOOR = 200
CAP_GROWTH = 4


class CriterionPair(NamedTuple):
    """Boundary certificate (a, b) with a + b = nd + 1.

    condition "i":  a - 1 in <S>, a not in <S>, b - 1 in <T>, b not in <T>;
    condition "ii": the four memberships reversed.
    """

    a: int
    b: int
    condition: str


@dataclass(frozen=True)
class RegularityReport:
    """Everything eu_check learns about one ideal."""

    spec: IdealSpec
    r_j: int
    reg_f: int
    reg_r: int | None
    s_star: int | None
    s_star_in: int | None
    conjecture_holds: bool
    witness: Monomial | None
    criterion_pair: CriterionPair | None
    reg_r_cap: int | None = None


class Workspace:
    """Shared grow-on-demand tables for one ideal.

    Iterative scans deepen the sumset family and the two semigroup tables
    instead of rebuilding them, so repeated queries stay cheap.
    """

    def __init__(self, spec: IdealSpec, max_nd: int = DEFAULT_MAX_ND):
        self.spec = spec
        self.family = PowerFamily(spec, max_nd=max_nd)
        self._sg_s, self._sg_t = semigroup_tables(spec, spec.d)

    def tables(self, bound: int) -> tuple[MembershipTable, MembershipTable]:
        if self._sg_s.bound < bound:
            grow = max(bound, 2 * self._sg_s.bound)
            self._sg_s = self._sg_s.extend(grow)
            self._sg_t = self._sg_t.extend(grow)
        return self._sg_s, self._sg_t


def _cap_schedule(spec: IdealSpec, r_j: int, cap: int | None) -> Iterator[int]:
    if cap is not None:
        yield cap
        return
    ceiling = theoretical_cap(spec)
    c = max(CAP_GROWTH * 0 + 10 * r_j, CAP_FLOOR)
    while c < ceiling:
        yield c
        c *= CAP_GROWTH
    yield ceiling


def _scan_first(
    what: str,
    spec: IdealSpec,
    r_j: int,
    start: int,
    cap: int | None,
    test: Callable[[int], bool],
) -> int:
    n = start
    limit = start
    for limit in _cap_schedule(spec, r_j, cap):
        while n <= limit:
            if test(n):
                return n
            n += 1
    raise CapExceeded(what, limit)


def _full_equal(spec: IdealSpec, ws: Workspace, n: int) -> bool:
    ps = ws.family.get(n)
    ok, _ = rr_equals_power(spec, ps, tables=ws.tables(ps.nd))
    return ok


def _initial_equal(spec: IdealSpec, ws: Workspace, n: int) -> bool:
    ps = ws.family.get(n)
    ok, _ = rr_equals_power_at_initial_degree(spec, ps, tables=ws.tables(ps.nd))
    return ok


def reg_fiber(spec: IdealSpec, cap: int | None = None, ws: Workspace | None = None) -> int:
    """Least n >= r_J with closure and power equal in degree nd."""
    ws = ws if ws is not None else Workspace(spec)
    r_j = reduction_number(spec, cap=cap, family=ws.family)
    return _scan_first(
        "fiber regularity scan", spec, r_j, r_j, cap, lambda n: _initial_equal(spec, ws, n)
    )


def reg_rees(spec: IdealSpec, cap: int | None = None, ws: Workspace | None = None) -> int:
    """Least n >= r_J with closure(I^n) = I^n."""
    ws = ws if ws is not None else Workspace(spec)
    r_j = reduction_number(spec, cap=cap, family=ws.family)
    return _scan_first(
        "rees regularity scan", spec, r_j, r_j, cap, lambda n: _full_equal(spec, ws, n)
    )


def stability_indices(
    spec: IdealSpec, reg_r: int, ws: Workspace | None = None
) -> tuple[int, int]:
    """(s_star, s_star_in): from these powers on, closure equals power
    (respectively: equals it in the generating degree).

    Beyond reg Rees both equalities are automatic, so scanning n <= reg_r
    finds the last failures exactly.
    """
    ws = ws if ws is not None else Workspace(spec)
    last_full = 0
    last_initial = 0
    for n in range(1, reg_r + 1):
        if not _full_equal(spec, ws, n):
            last_full = n
        if not _initial_equal(spec, ws, n):
            last_initial = n
    return last_full + 1, last_initial + 1


def criterion_witness(
    spec: IdealSpec,
    n: int,
    tables: tuple[MembershipTable, MembershipTable] | None = None,
) -> CriterionPair | None:
    """First pair a + b = nd + 1 crossing both semigroup boundaries at once.

    Scans a ascending; such a pair certifies that the closure of I^n gains
    a generator in degree nd + 1, hence that reg Rees exceeds reg fiber
    when found at n = reg fiber.
    """
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    nd = n * spec.d
    if tables is None:
        tables = semigroup_tables(spec, nd + 1)
    sg_s, sg_t = tables
    for a in range(1, nd + 1):
        b = nd + 1 - a
        s_before, s_at = sg_s.contains(a - 1), sg_s.contains(a)
        t_before, t_at = sg_t.contains(b - 1), sg_t.contains(b)
        if s_before and not s_at and t_before and not t_at:
            return CriterionPair(a, b, "i")
        if not s_before and s_at and not t_before and t_at:
            return CriterionPair(a, b, "ii")
    return None


def eu_check(spec: IdealSpec, cap: int | None = None) -> RegularityReport:
    """Compare the two regularities for one ideal.

    Computes r_J and reg fiber, then tests full equality at reg fiber.
    Equality there means the regularities agree.  Otherwise the report
    carries the first escaping generator, the boundary certificate, and
    reg Rees from the continued scan (or the exhausted cap if that scan
    gives up; the verdict is already settled either way).
    """
    ws = Workspace(spec)
    r_j = reduction_number(spec, cap=cap, family=ws.family)
    reg_f = _scan_first(
        "fiber regularity scan", spec, r_j, r_j, cap, lambda n: _initial_equal(spec, ws, n)
    )
    ps = ws.family.get(reg_f)
    equal, witness = rr_equals_power(spec, ps, tables=ws.tables(ps.nd))
    if equal:
        s_star, s_star_in = stability_indices(spec, reg_f, ws=ws)
        return RegularityReport(
            spec=spec,
            r_j=r_j,
            reg_f=reg_f,
            reg_r=reg_f,
            s_star=s_star,
            s_star_in=s_star_in,
            conjecture_holds=True,
            witness=None,
            criterion_pair=None,
        )
    certificate = criterion_witness(spec, reg_f, tables=ws.tables(reg_f * spec.d + 1))
    try:
        reg_r = _scan_first(
            "rees regularity scan",
            spec,
            r_j,
            reg_f + 1,
            cap,
            lambda n: _full_equal(spec, ws, n),
        )
        s_star, s_star_in = stability_indices(spec, reg_r, ws=ws)
        cap_hit = None
    except CapExceeded as exc:
        reg_r = None
        s_star = s_star_in = None
        cap_hit = exc.cap
    return RegularityReport(
        spec=spec,
        r_j=r_j,
        reg_f=reg_f,
        reg_r=reg_r,
        s_star=s_star,
        s_star_in=s_star_in,
        conjecture_holds=False,
        witness=witness,
        criterion_pair=certificate,
        reg_r_cap=cap_hit,
    )


def reg_fiber_via_lemma(
    spec: IdealSpec,
    cap: int | None = None,
    window: int | None = None,
    ws: Workspace | None = None,
) -> int:
    """reg fiber by its sumset characterization, as a cross-check.

    Seeks the least m >= r_J with (n+1)S intersect ((n+1)S - d) = nS over a
    finite window of n >= m.  The window defaults to reaching a few steps
    past reg Rees, where the condition is guaranteed to have settled; any
    disagreement with reg_fiber is a bug and the test suite treats it so.
    """
    ws = ws if ws is not None else Workspace(spec)
    r_j = reduction_number(spec, cap=cap, family=ws.family)
    settled = reg_rees(spec, cap=cap, ws=ws) if window is None else None

    def condition(n: int) -> bool:
        upper = ws.family.get(n + 1).bits
        return upper & (upper >> spec.d) == ws.family.get(n).bits

    def window_ok(m: int) -> bool:
        w = window if window is not None else max(settled - m, 0) + 3
        return all(condition(k) for k in range(m, m + w + 1))

    return _scan_first("fiber window scan", spec, r_j, r_j, cap, window_ok)
