"""Hilbert-Samuel function of I-adic filtrations, exactly.

H_I(n) counts the monomials outside I^n.  Column by column that is
nd - (largest member of nS at or below the column), so one pass over the
sumset members evaluates H_I(n) in integer arithmetic.  Beyond reg Rees
the function agrees with its Hilbert polynomial, which the finite-
difference fit below recovers with no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .staircase import IdealSpec, PowerFamily


def hilbert_samuel(spec: IdealSpec, n: int, family: PowerFamily | None = None) -> int:
    """Number of monomials not in I^n (the colength of I^n)."""
    if n < 0:
        raise ValueError(f"power must be >= 0, got {n}")
    if n == 0:
        return 0
    ps = (family if family is not None else PowerFamily(spec)).get(n)
    nd = ps.nd
    members = ps.members()
    return sum((w1 - w0) * (nd - w0) for w0, w1 in zip(members, members[1:]))


def hilbert_value(poly: tuple[int, int, int], n: int) -> int:
    """P(n) = e0 * C(n+1, 2) - e1 * n + e2."""
    e0, e1, e2 = poly
    return e0 * comb(n + 1, 2) - e1 * n + e2


def hilbert_polynomial(
    spec: IdealSpec, reg_r: int, family: PowerFamily | None = None
) -> tuple[int, int, int]:
    """Hilbert coefficients (e0, e1, e2) from three exact values past reg Rees.

    Fits at reg_r + 1, +2, +3 by finite differences.  The leading
    coefficient must equal d^2 (the multiplicity); anything else means the
    fit ran inside the pre-polynomial range and is reported as a bug.
    """
    family = family if family is not None else PowerFamily(spec)
    n0 = reg_r + 1
    h0, h1, h2 = (hilbert_samuel(spec, n, family) for n in (n0, n0 + 1, n0 + 2))
    e0 = h2 - 2 * h1 + h0
    e1 = e0 * (n0 + 1) - (h1 - h0)
    e2 = h0 - e0 * comb(n0 + 1, 2) + e1 * n0
    if e0 != spec.d * spec.d:
        raise RuntimeError(
            f"internal consistency: leading Hilbert coefficient {e0} != {spec.d}^2"
        )
    return e0, e1, e2


def postulation_number(
    spec: IdealSpec,
    reg_r: int,
    poly: tuple[int, int, int] | None = None,
    family: PowerFamily | None = None,
) -> int | None:
    """Largest n with H_I(n) != P_I(n), or None when they always agree.

    Function and polynomial coincide beyond reg Rees, so the scan walks
    reg_r down to 0 and stops at the first mismatch.
    """
    family = family if family is not None else PowerFamily(spec)
    if poly is None:
        poly = hilbert_polynomial(spec, reg_r, family)
    for n in range(reg_r, -1, -1):
        if hilbert_samuel(spec, n, family) != hilbert_value(poly, n):
            return n
    return None


@dataclass(frozen=True)
class HilbertReport:
    """Multiplicity, Hilbert coefficients, postulation number, sample table."""

    spec: IdealSpec
    e: int
    poly: tuple[int, int, int]
    postulation: int | None
    table: tuple[tuple[int, int, int], ...]  # rows (n, H_I(n), P_I(n))


def hilbert_report(
    spec: IdealSpec, reg_r: int | None = None, cap: int | None = None
) -> HilbertReport:
    """Full Hilbert-Samuel summary; resolves reg Rees itself if not given."""
    if reg_r is None:
        from .regularity import reg_rees

        reg_r = reg_rees(spec, cap=cap)
    family = PowerFamily(spec)
    poly = hilbert_polynomial(spec, reg_r, family)
    post = postulation_number(spec, reg_r, poly, family)
    center = 1 if post is None else post
    rows = []
    for n in range(max(0, center - 2), center + 3):
        rows.append((n, hilbert_samuel(spec, n, family), hilbert_value(poly, n)))
    return HilbertReport(
        spec=spec,
        e=spec.d * spec.d,
        poly=poly,
        postulation=post,
        table=tuple(rows),
    )
