"""Closed-form values and bounds for the per-node ADM requirement.

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class GroomingInstance:
    n: int
    C: int
    delta: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ring size n must be at least 1")
        if self.C < 1:
            raise ValueError("grooming factor C must be at least 1")
        if self.delta < 0:
            raise ValueError("degree bound must be non-negative")


@dataclass(frozen=True)
class BoundReport:
    lower: int
    upper: int
    exact: Optional[int] = None
    provenance: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError("exact value outside its bounds")


def elementary_value(inst: GroomingInstance) -> Optional[int]:
    """Exact total ADM count where an elementary argument pins it, else None."""
    n, C, d = inst.n, inst.C, inst.delta
    if d == 0:
        return 0
    if d == 1:
        return n
    if C == 1:
        return d * n
    if 2 * C >= n * d:
        return n
    return None


def general_lower_bound_M(C: int, delta: int) -> int:
    """ceil((C+1)/C * delta/2): tree-shaped parts in a high-girth regular request graph."""
    if C < 1 or delta < 1:
        raise ValueError("C and delta must be positive")
    return ceil_div((C + 1) * delta, 2 * C)


def greedy_upper_bound_A(inst: GroomingInstance) -> int:
    """Chop the at most n*delta/2 edges into blocks of C; every node sits in every block."""
    return ceil_div(inst.n * inst.delta, 2 * inst.C) * inst.n


def degree2_exact_A(n: int, C: int) -> int:
    """Total ADMs needed on an n-ring for all request graphs of maximum degree 2.

    For C < n this is 2n - (C - 1): C - 1 nodes can get by with one ADM,
    and C of them cannot (a (C+1)-cycle through them needs two parts).
    For C >= n every such request graph (at most n edges) fits one part,
    so n ADMs suffice.
    """
    if n < 1 or C < 2:
        raise ValueError("need n >= 1 and C >= 2")
    if C >= n:
        return n
    return 2 * n - (C - 1)


def bound_report(inst: GroomingInstance) -> BoundReport:
    """Combine the elementary values with the floor n and the greedy ceiling."""
    n, C, d = inst.n, inst.C, inst.delta
    upper = min(greedy_upper_bound_A(inst), d * n)
    lower = n if d >= 1 else 0
    tags = ["floor: every node may carry a request", "ceiling: greedy blocks of C edges"]
    exact = elementary_value(inst)
    if exact is not None:
        tags.append("elementary value")
    elif d == 2 and C <= n:
        exact = degree2_exact_A(n, C)
        tags.append("degree-2 path/cycle construction")
    if exact is not None:
        lower = upper = exact
    return BoundReport(lower, upper, exact, tuple(tags))


# -- the table of M(C, delta) --------------------------------------------------


@dataclass(frozen=True)
class MValue:
    """Known value of M(C, delta): exact, or an interval, with the reasoning that gives it."""

    lo: int
    hi: int
    provenance: tuple[str, ...] = field(default=())
    conjectured: Optional[int] = None

    @property
    def exact(self) -> Optional[int]:
        return self.lo if self.lo == self.hi else None


PROV_MATCHING = "degree 1: a perfect matching forces one ADM per node"
PROV_SINGLE_EDGES = "single-edge parts give delta per node"
PROV_SMALL_C = "C <= 2: exact by the table of known values"
PROV_DEG2 = "degree 2: paths/cycles with C-1 single-ADM nodes"
PROV_33 = "C=3, delta=3: a bridged cubic graph needs 3 at some node"
PROV_LINEAR = "C>=5, delta=3: 2-colouring into paths of length <= 5"
PROV_43 = "C=4, delta=3: open; 2 conjectured"
PROV_GIRTH = "lower: tree parts in a delta-regular graph of girth > C"


def known_M(C: int, delta: int) -> MValue:
    if C < 1 or delta < 1:
        raise ValueError("C and delta must be positive")
    if delta == 1:
        return MValue(1, 1, (PROV_MATCHING,))
    if C <= 2:
        return MValue(delta, delta, (PROV_SMALL_C, PROV_SINGLE_EDGES))
    if delta == 2:
        return MValue(2, 2, (PROV_DEG2,))
    if delta == 3:
        if C == 3:
            return MValue(3, 3, (PROV_33, PROV_SINGLE_EDGES))
        if C == 4:
            return MValue(2, 3, (PROV_43, PROV_SINGLE_EDGES), conjectured=2)
        return MValue(2, 2, (PROV_LINEAR, PROV_GIRTH))
    return MValue(general_lower_bound_M(C, delta), delta, (PROV_GIRTH, PROV_SINGLE_EDGES))


MTable = dict[tuple[int, int], Union[int, MValue, tuple[int, int]]]


def known_M_table(C_range: range, delta_range: range) -> dict[tuple[int, int], MValue]:
    return {(C, d): known_M(C, d) for C in C_range for d in delta_range}


def _interval(v: Union[int, MValue, tuple[int, int]]) -> tuple[int, int]:
    if isinstance(v, MValue):
        return v.lo, v.hi
    if isinstance(v, tuple):
        return v
    return v, v


def check_monotonicity(table: MTable) -> list[str]:
    """Definite violations of the three monotonicity rules for M(C, delta).

    Rules: non-increasing in C, non-decreasing in delta, and when C > delta
    a unit step in C lowers M by at most one. Interval cells only produce a
    violation when no values inside the intervals could satisfy the rule.
    """
    out = []
    for (C, d) in sorted(table):
        lo, hi = _interval(table[(C, d)])
        if (C + 1, d) in table:
            lo2, hi2 = _interval(table[(C + 1, d)])
            if lo2 > hi:
                out.append(f"M({C + 1},{d}) > M({C},{d}): larger C needs more")
            if C > d and hi2 < lo - 1:
                out.append(f"M({C + 1},{d}) < M({C},{d}) - 1 with C > delta")
        if (C, d + 1) in table:
            lo2, hi2 = _interval(table[(C, d + 1)])
            if lo > hi2:
                out.append(f"M({C},{d + 1}) < M({C},{d}): larger delta needs less")
    return out
