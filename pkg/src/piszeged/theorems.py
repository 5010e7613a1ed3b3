"""Inequality checks with their equality characterisations.

Every graph-side check compares exact integers (cross-multiplied where the
bound has a denominator), so equality detection never depends on rounding.
A verdict records both sides, whether the inequality holds, whether it is
tight, and whether tightness agrees with the predicted equality class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Sequence

from . import graph as gc
from .families import in_Xn, in_Yn
from .graph import C3_PRIME, Graph
from .invariants import GraphProfile, profile

LE = "<="
GE = ">="

IFF = "iff"
NECESSARY = "necessary"

PIV_SZ = "piv_le_sz_plus_m"
PI_SZE = "pi_le_sze_plus_m"
PIV_NM = "piv_le_nm_minus_3t"
SZ_N2M = "4sz_le_n2m_minus_12t"
SZ_M2 = "sz_ge_m2"
PI_SZE_RATIO = "pi_ge_4sze_over_m_minus_1"
MN_SZ_PIV = "32mn_sz_le_n_plus_2_sq_piv_sq"

THEOREM_IDS = (PIV_SZ, PI_SZE, PIV_NM, SZ_N2M, SZ_M2, PI_SZE_RATIO, MN_SZ_PIV)

POLYA_RTOL = 1e-9


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    relation: str
    applicable: bool
    lhs: int | Fraction | None = None
    rhs: int | Fraction | None = None
    holds: bool | None = None
    equality: bool | None = None
    predicted_equality: bool | None = None
    consistent: bool | None = None
    characterization: str = IFF
    details: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.applicable or bool(self.holds and self.consistent)

    def to_record(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "relation": self.relation,
            "applicable": self.applicable,
            "lhs": _exact(self.lhs),
            "rhs": _exact(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "predicted_equality": self.predicted_equality,
            "consistent": self.consistent,
            "characterization": self.characterization,
            "details": dict(self.details),
        }


def _exact(x: int | Fraction | None) -> int | str | None:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _verdict(theorem, relation, lhs, rhs, predicted, characterization=IFF, details=None):
    holds = lhs <= rhs if relation == LE else lhs >= rhs
    equality = lhs == rhs
    if characterization == IFF:
        consistent = equality == predicted
    else:
        consistent = predicted or not equality
    details = details or {}
    return TheoremVerdict(
        theorem, relation, True, lhs, rhs, holds, equality, predicted,
        consistent, characterization, details,
    )


def _inapplicable(theorem: str, relation: str, characterization: str = IFF) -> TheoremVerdict:
    return TheoremVerdict(theorem, relation, False, characterization=characterization)


def _as_profile(g: Graph | GraphProfile) -> GraphProfile:
    return g if isinstance(g, GraphProfile) else profile(g)


def thm_pivsz(g: Graph | GraphProfile) -> TheoremVerdict:
    """``PI_v <= Sz + m``, tight exactly on X_n."""
    p = _as_profile(g)
    inv = p.invariants
    return _verdict(PIV_SZ, LE, inv.vertex_pi, inv.szeged + p.m, in_Xn(p))


def thm_pisze(g: Graph | GraphProfile) -> TheoremVerdict:
    """``PI <= Sz_e + m`` for minimum degree >= 2, tight exactly on Y_n."""
    p = _as_profile(g)
    inv = p.invariants
    if inv.min_degree < 2:
        return _inapplicable(PI_SZE, LE)
    return _verdict(PI_SZE, LE, inv.pi, inv.edge_szeged + p.m, in_Yn(p))


def thm_piv_nm(g: Graph | GraphProfile) -> TheoremVerdict:
    """``PI_v <= nm - 3t``, tight iff ``nu + nv = n - t(e)`` on every edge.

    The side flags record the known sufficient conditions for tightness
    (bipartite, complete multipartite) and the known obstruction (an
    induced paw); ``consistent`` also requires those implications to hold.
    """
    p = _as_profile(g)
    n, inv, graph = p.n, p.invariants, p.graph
    predicted = all(s.nu + s.nv == n - s.te for s in p.vertex_splits)
    bipartite = gc.is_bipartite(graph)
    multipartite = gc.is_complete_multipartite(graph)
    paw = gc.has_induced(graph, C3_PRIME)
    v = _verdict(
        PIV_NM, LE, inv.vertex_pi, n * p.m - 3 * inv.triangles, predicted,
        details={
            "bipartite": bipartite,
            "complete_multipartite": multipartite,
            "induced_c3_prime": paw,
        },
    )
    side_ok = (not (bipartite or multipartite) or v.equality) and not (paw and v.equality)
    if not side_ok:
        v = replace(v, consistent=False)
    return v


def thm_sz_n2m(g: Graph | GraphProfile) -> TheoremVerdict:
    """``4 Sz <= n^2 m - 12 t``; tightness forces bipartite, regular, n even, min degree > 1.

    Only the forward implication is checked.  Edgeless graphs are outside
    the statement (both sides vanish).
    """
    p = _as_profile(g)
    n, inv, graph = p.n, p.invariants, p.graph
    if p.m == 0:
        return _inapplicable(SZ_N2M, LE, NECESSARY)
    conditions = {
        "bipartite": gc.is_bipartite(graph),
        "regular": gc.is_regular(graph),
        "n_even": n % 2 == 0,
        "min_degree_gt_1": inv.min_degree > 1,
    }
    return _verdict(
        SZ_N2M, LE, 4 * inv.szeged, n * n * p.m - 12 * inv.triangles,
        all(conditions.values()), NECESSARY, conditions,
    )


def thm_sz_m2(g: Graph | GraphProfile) -> TheoremVerdict:
    """``Sz >= M2`` on connected triangle-free graphs with n >= 3, tight iff diameter 2."""
    graph = g.graph if isinstance(g, GraphProfile) else g
    if graph.n < 3 or not gc.is_connected(graph) or gc.triangles_total(graph):
        return _inapplicable(SZ_M2, GE)
    p = _as_profile(g)
    inv = p.invariants
    return _verdict(SZ_M2, GE, inv.szeged, inv.zagreb2, inv.diameter == 2)


def thm_pi_sze(g: Graph | GraphProfile) -> TheoremVerdict:
    """``PI >= 4 Sz_e / (m - 1)`` for m >= 2, tight exactly on odd cycles."""
    p = _as_profile(g)
    m, inv = p.m, p.invariants
    if m < 2:
        return _inapplicable(PI_SZE_RATIO, GE)
    odd_cycle = gc.is_cycle(p.graph) and m % 2 == 1
    return _verdict(
        PI_SZE_RATIO, GE, Fraction(inv.pi), Fraction(4 * inv.edge_szeged, m - 1), odd_cycle,
    )


def thm_32mn(g: Graph | GraphProfile) -> TheoremVerdict:
    """``32 m n Sz <= (n + 2)^2 PI_v^2``, tight iff m = 0 or n = 2.

    Accepts connected graphs and edgeless graphs of any order.
    """
    if isinstance(g, Graph) and g.m == 0:
        n, m, sz, vertex_pi = g.n, 0, 0, 0
    else:
        p = _as_profile(g)
        n, m = p.n, p.m
        sz, vertex_pi = p.invariants.szeged, p.invariants.vertex_pi
    return _verdict(
        MN_SZ_PIV, LE, 32 * m * n * sz, (n + 2) ** 2 * vertex_pi ** 2, m == 0 or n == 2,
    )


CHECKS = (thm_pivsz, thm_pisze, thm_piv_nm, thm_sz_n2m, thm_sz_m2, thm_pi_sze, thm_32mn)


def evaluate_all(g: Graph | GraphProfile) -> list[TheoremVerdict]:
    """Every check in a fixed order, inapplicable ones included."""
    p = _as_profile(g)
    return [check(p) for check in CHECKS]


def run_all(g: Graph | GraphProfile) -> list[TheoremVerdict]:
    """The applicable verdicts for a connected graph, in a fixed order."""
    return [v for v in evaluate_all(g) if v.applicable]


# ---------------------------------------------------------------------------
# Polya-Szego

@dataclass(frozen=True)
class PolyaInput:
    a: tuple[float, ...]
    b: tuple[float, ...]
    a_lo: float
    a_hi: float
    b_lo: float
    b_hi: float

    def __post_init__(self):
        if len(self.a) != len(self.b) or not self.a:
            raise ValueError("a and b must be nonempty and of equal length")
        if min(self.a_lo, self.b_lo) <= 0 or min(self.a) <= 0 or min(self.b) <= 0:
            raise ValueError("entries and bounds must be positive")
        if not (self.a_lo <= min(self.a) and max(self.a) <= self.a_hi):
            raise ValueError("a violates its bounds")
        if not (self.b_lo <= min(self.b) and max(self.b) <= self.b_hi):
            raise ValueError("b violates its bounds")


@dataclass(frozen=True)
class PolyaReport:
    lhs_product: float
    rhs_bound: float
    holds: bool
    equal: bool
    p: float
    q: float
    equality_predicted: bool

    @property
    def relative_gap(self) -> float:
        return (self.rhs_bound - self.lhs_product) / self.rhs_bound


def _close(u: float, v: float) -> bool:
    return math.isclose(u, v, rel_tol=POLYA_RTOL)


def polya_szego(x: PolyaInput) -> PolyaReport:
    """``(sum a_i^2)(sum b_i^2) <= 1/4 (sqrt(AB/ab) + sqrt(ab/AB))^2 (sum a_i b_i)^2``.

    Equality is predicted when ``a*b == A*B`` (both sequences constant), or
    when ``p = n (A/a) / (A/a + B/b)`` and ``q = n - p`` are integers and
    the pairs ``(a_i, b_i)`` are exactly p copies of ``(a, B)`` and q copies
    of ``(A, b)``.  Integrality and pair matching use the same relative
    tolerance as the equality test, since inputs are floats.
    """
    a, b = x.a, x.b
    lhs = math.fsum(v * v for v in a) * math.fsum(v * v for v in b)
    ratio = (x.a_hi * x.b_hi) / (x.a_lo * x.b_lo)
    factor = 0.25 * (math.sqrt(ratio) + math.sqrt(1.0 / ratio)) ** 2
    rhs = factor * math.fsum(u * v for u, v in zip(a, b)) ** 2
    holds = lhs <= rhs * (1.0 + POLYA_RTOL)
    equal = abs(rhs - lhs) <= POLYA_RTOL * rhs

    n = len(a)
    ra, rb = x.a_hi / x.a_lo, x.b_hi / x.b_lo
    p = n * ra / (ra + rb)
    q = n - p
    if _close(x.a_lo * x.b_lo, x.a_hi * x.b_hi):
        predicted = True
    elif _close(p, round(p)) and _close(q, round(q)):
        lo_pair, hi_pair = (x.a_lo, x.b_hi), (x.a_hi, x.b_lo)
        at_lo = sum(_close(u, lo_pair[0]) and _close(v, lo_pair[1]) for u, v in zip(a, b))
        at_hi = sum(_close(u, hi_pair[0]) and _close(v, hi_pair[1]) for u, v in zip(a, b))
        predicted = (at_lo, at_hi) == (round(p), round(q))
    else:
        predicted = False
    return PolyaReport(lhs, rhs, holds, equal, p, q, predicted)


def polya_input(a: Sequence[float], b: Sequence[float], bounds: Sequence[float] | None = None) -> PolyaInput:
    """Convenience constructor; ``bounds`` is ``(a_lo, a_hi, b_lo, b_hi)``, default the extremes."""
    if bounds is None:
        bounds = (min(a), max(a), min(b), max(b))
    return PolyaInput(tuple(a), tuple(b), *bounds)

