"""Extremal families and closed forms.

``X_n``: every edge has ``min(nu, nv) == 1`` (equality class of
``PI_v <= Sz + m``).  ``Y_n``: every edge has ``min(mu, mv) == 1`` (equality
class of ``PI <= Sz_e + m``).  Members of ``Y_n`` are either a bouquet of
triangles and squares glued at one hub vertex, or ``K_{2,k}`` with ``k >= 3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canon import certificate
from .graph import (
    C4,
    P4,
    Graph,
    GraphError,
    complete_bipartite,
    diameter,
    has_induced,
    max_degree,
)
from .invariants import GraphProfile, profile


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if not self.v > self.k >= 1:
            raise GraphError(f"SRG parameters need v > k >= 1, got v={self.v}, k={self.k}")
        if not (0 <= self.lam <= self.k - 1 and 0 <= self.mu <= self.k):
            raise GraphError("SRG parameters need 0 <= lambda < k and 0 <= mu <= k")
        if self.k * (self.k - self.lam - 1) != (self.v - self.k - 1) * self.mu:
            raise GraphError(
                f"infeasible SRG({self.v},{self.k},{self.lam},{self.mu}): "
                "k(k - lambda - 1) != (v - k - 1) mu"
            )
        if self.v * self.k % 2:
            raise GraphError("v * k must be even")


BOUQUET = "BOUQUET"
K2K = "K2K"


@dataclass(frozen=True)
class YnMember:
    """``BOUQUET(a, b)``: a triangles and b squares sharing one hub; ``K2K(k)``: K_{2,k}."""

    kind: str
    a: int = 0
    b: int = 0
    k: int = 0

    def __post_init__(self):
        if self.kind == BOUQUET:
            if self.a < 0 or self.b < 0 or self.a + self.b < 1:
                raise GraphError("a bouquet needs a, b >= 0 and at least one cycle")
        elif self.kind == K2K:
            if self.k < 3:
                raise GraphError("K_{2,k} members need k >= 3")
        else:
            raise GraphError(f"unknown Y_n member kind {self.kind!r}")

    @property
    def order(self) -> int:
        if self.kind == BOUQUET:
            return 1 + 2 * self.a + 3 * self.b
        return self.k + 2

    def graph(self) -> Graph:
        if self.kind == K2K:
            return complete_bipartite(2, self.k)
        edges = []
        nxt = 1
        for _ in range(self.a):
            x, y = nxt, nxt + 1
            edges += [(0, x), (x, y), (0, y)]
            nxt += 2
        for _ in range(self.b):
            x, y, z = nxt, nxt + 1, nxt + 2
            edges += [(0, x), (x, y), (y, z), (0, z)]
            nxt += 3
        return Graph(nxt, edges)


def _profile(g: Graph | GraphProfile) -> GraphProfile:
    return g if isinstance(g, GraphProfile) else profile(g)


def in_Xn(g: Graph | GraphProfile) -> bool:
    """Every edge has ``min(nu, nv) == 1``.  Complete graphs qualify."""
    return all(min(s.nu, s.nv) == 1 for s in _profile(g).vertex_splits)


def xn_characterization(g: Graph) -> bool:
    """Diameter at most 2 with no induced P4 and no induced C4."""
    return diameter(g) <= 2 and not has_induced(g, P4) and not has_induced(g, C4)


def xn_universal_vertex(g: Graph) -> bool:
    return g.n >= 1 and max_degree(g) == g.n - 1


def in_Yn(g: Graph | GraphProfile) -> bool:
    """Every edge has ``min(mu, mv) == 1``; a pendant edge has 0 on the leaf side."""
    return all(min(s.mu, s.mv) == 1 for s in _profile(g).edge_splits)


def yn_count_formula(n: int) -> int:
    if n < 1:
        raise GraphError("n must be positive")
    if n <= 2:
        return 0
    if n <= 4:
        return 1
    if n % 6 == 2:
        return (n - 1) // 6 + 1
    return (n - 1) // 6 + 2


def yn_members(n: int) -> list[YnMember]:
    """Parameters of the Y_n members of order ``n``: bouquets first, then K_{2,n-2}."""
    out = []
    for b in range((n - 1) // 3 + 1):
        rest = n - 1 - 3 * b
        if rest % 2 == 0 and rest // 2 + b >= 1:
            out.append(YnMember(BOUQUET, a=rest // 2, b=b))
    if n - 2 >= 3:
        out.append(YnMember(K2K, k=n - 2))
    return out


def generate_Yn(n: int) -> list[Graph]:
    if n < 3:
        return []
    return [m.graph() for m in yn_members(n)]


def srg_closed_forms(p: SrgParams) -> tuple[int, int]:
    """``(PI_v, Sz)`` of a strongly regular graph from its parameters alone."""
    m = p.v * p.k // 2
    vertex_pi = p.v * p.k ** 2 - p.k * p.v * p.lam
    sz = m * p.k ** 2 - 2 * m * p.k * p.lam + m * p.lam ** 2
    return vertex_pi, sz


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("parts must be a nonempty sequence of positive sizes")
    label = []
    for i, size in enumerate(parts):
        label += [i] * size
    n = len(label)
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if label[u] != label[v]))


def prop_sz_diam2(g: Graph | GraphProfile) -> int | None:
    """``M2 - t*M1 + m*t^2`` when the diameter is 2 and every edge lies in exactly t triangles.

    Returns ``None`` when either hypothesis fails.
    """
    prof = _profile(g)
    inv = prof.invariants
    if inv.diameter != 2:
        return None
    per_edge = {s.te for s in prof.vertex_splits}
    if len(per_edge) != 1:
        return None
    (t,) = per_edge
    return inv.zagreb2 - t * inv.zagreb1 + prof.m * t * t


def same_up_to_isomorphism(gs: Sequence[Graph], hs: Sequence[Graph]) -> bool:
    """Multiset equality of isomorphism classes."""
    return sorted((g.n, certificate(g)) for g in gs) == sorted((h.n, certificate(h)) for h in hs)

