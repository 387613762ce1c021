"""The r-extended Shi arrangement and exact region counting.

The arrangement in m coordinates consists of the hyperplanes
x_i - x_j = c for 1 <= i < j <= m and c in {-r+1,..,r}.  Regions are the
connected components of the complement; each is identified by a strict
sign vector over the hyperplane list.  Counting is by branch-and-prune
over sign vectors with exact rational feasibility via variable
elimination, which also produces a rational witness point per region.

All hyperplanes involve only coordinate differences, so the count is
unchanged by fixing the last coordinate to zero; that reduction is applied
by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .core import ResourceCapError, ValidationError
from .parking import count_parking
from .prufer import count_trees_for_matching

DEFAULT_REGION_CAP = 500_000

# a strict constraint sum(coeffs * x) + const > 0, all entries integer
Constraint = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class Hyperplane:
    """The hyperplane x_i - x_j = c with i < j."""

    i: int
    j: int
    c: int


@dataclass(frozen=True)
class Region:
    """An open region: one sign per hyperplane (+1 above, -1 below) plus a
    rational interior point witnessing strict feasibility."""

    signs: tuple[int, ...]
    witness: tuple[Fraction, ...]


def build_arrangement(m: int, r: int) -> tuple[Hyperplane, ...]:
    """All C(m,2) * 2r hyperplanes, ordered by (i, j, c)."""
    if m < 1 or r < 1:
        raise ValidationError("need m >= 1 and r >= 1")
    return tuple(
        Hyperplane(i, j, c)
        for i, j in combinations(range(1, m + 1), 2)
        for c in range(-r + 1, r + 1)
    )


def _normalize(coeffs: tuple[int, ...], const: int) -> Constraint:
    g = gcd(gcd(*coeffs, 0), const)
    if g > 1:
        coeffs = tuple(x // g for x in coeffs)
        const //= g
    return coeffs, const


def _solve_strict(constraints: list[Constraint], nvars: int) -> list[Fraction] | None:
    """Witness point for a system of strict inequalities, or None.

    Variable elimination: combining a lower bound a*x + p > 0 (a > 0) with
    an upper bound b*x + q > 0 (b < 0) gives the strict consequence
    (-b)*p + a*q + ... > 0 with x eliminated; the projection is exact for
    strict systems.  Back-substitution picks interval midpoints.
    """
    levels = []
    cur = constraints
    for v in range(nvars - 1, -1, -1):
        lowers, uppers, rest = [], [], []
        for con in cur:
            a = con[0][v]
            (lowers if a > 0 else uppers if a < 0 else rest).append(con)
        levels.append((v, lowers, uppers))
        nxt = []
        seen = set()
        for con in rest:
            if con not in seen:
                seen.add(con)
                nxt.append(con)
        for lc, ld in lowers:
            for uc, ud in uppers:
                a, b = lc[v], uc[v]
                coeffs = tuple(-b * lc[t] + a * uc[t] for t in range(nvars))
                const = -b * ld + a * ud
                if all(x == 0 for x in coeffs):
                    if const <= 0:
                        return None
                    continue
                con = _normalize(coeffs, const)
                if con not in seen:
                    seen.add(con)
                    nxt.append(con)
        cur = nxt
    for coeffs, const in cur:
        if const <= 0:
            return None
    point = [Fraction(0)] * nvars
    for v, lowers, uppers in reversed(levels):
        lo = hi = None
        for coeffs, const in lowers + uppers:
            rest_val = const + sum(
                coeffs[t] * point[t] for t in range(nvars) if t != v and coeffs[t]
            )
            bound = Fraction(-rest_val, coeffs[v])
            if coeffs[v] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            point[v] = (lo + hi) / 2
        elif lo is not None:
            point[v] = lo + 1
        elif hi is not None:
            point[v] = hi - 1
    return point


def _hyperplane_vector(h: Hyperplane, nvars: int) -> Constraint:
    """x_i - x_j - c in the working coordinates (coordinates past nvars are 0)."""
    coeffs = [0] * nvars
    if h.i <= nvars:
        coeffs[h.i - 1] += 1
    if h.j <= nvars:
        coeffs[h.j - 1] -= 1
    return tuple(coeffs), -h.c


def regions(
    m: int,
    r: int,
    cap: int = DEFAULT_REGION_CAP,
    fix_last: bool = True,
) -> list[Region]:
    """All regions of the arrangement, with witnesses, in sign-vector order.

    Processes hyperplanes in their canonical order, extending each feasible
    partial sign assignment by +1 then -1 and pruning infeasible branches.
    ``fix_last`` pins x_m = 0; witnesses are reported in all m coordinates
    either way.
    """
    hyperplanes = build_arrangement(m, r)
    nvars = m - 1 if fix_last else m
    vectors = [_hyperplane_vector(h, nvars) for h in hyperplanes]
    partial: list[tuple[tuple[int, ...], list[Constraint]]] = [((), [])]
    explored = 0
    for coeffs, const in vectors:
        nxt = []
        for signs, cons in partial:
            for s in (+1, -1):
                explored += 1
                if explored > cap:
                    raise ResourceCapError(
                        f"region search explored {explored} nodes, cap {cap}"
                    )
                con = (
                    tuple(s * x for x in coeffs),
                    s * const,
                )
                trial = cons + [con]
                if _solve_strict(trial, nvars) is not None:
                    nxt.append((signs + (s,), trial))
        partial = nxt
    out = []
    for signs, cons in partial:
        point = _solve_strict(cons, nvars)
        assert point is not None
        full = tuple(point) + (Fraction(0),) * (m - nvars)
        out.append(Region(signs, full))
    return out


def count_regions(m: int, r: int, cap: int = DEFAULT_REGION_CAP) -> int:
    """Exact number of regions of the arrangement in m coordinates."""
    return len(regions(m, r, cap=cap))


def witness_satisfies(region: Region, hyperplanes: tuple[Hyperplane, ...]) -> bool:
    """Strict check of a region's witness against its full sign vector."""
    if len(region.signs) != len(hyperplanes):
        raise ValidationError("sign vector length does not match arrangement")
    for s, h in zip(region.signs, hyperplanes):
        value = region.witness[h.i - 1] - region.witness[h.j - 1] - h.c
        if s * value <= 0:
            return False
    return True


@dataclass(frozen=True)
class TriangleReport:
    """The three counts that one theorem chain forces to coincide."""

    regions: int
    parking: int
    trees: int

    @property
    def ok(self) -> bool:
        return self.regions == self.parking == self.trees


def verify_triangle(k: int, r: int, cap: int = DEFAULT_REGION_CAP) -> TriangleReport:
    """Region count vs parking count vs per-matching tree count at (k, r)."""
    return TriangleReport(
        regions=count_regions(k, r, cap=cap),
        parking=count_parking(k, r),
        trees=count_trees_for_matching(r * k + 1, r + 1),
    )
