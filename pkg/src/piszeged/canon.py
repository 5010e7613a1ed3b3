"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine the ordered vertex partition to an
equitable one, individualise each vertex of the first non-singleton cell in
turn, and recurse until the partition is discrete.  Each leaf orders the
vertices; its certificate is the upper triangle of the relabelled adjacency
matrix read column by column.  The canonical form is the smallest leaf
certificate.

Two leaves with equal certificates give an automorphism.  Automorphisms are
used twice: a subtree that is the image of an explored one is abandoned as
soon as the coincidence is seen, and children of a node are skipped when an
automorphism fixing the node's individualised vertices maps them onto an
already explored child.  This keeps highly symmetric small graphs (empty,
complete, vertex-transitive) to a handful of leaves.
"""

from __future__ import annotations

from .graph import Graph
from .graph6 import bits_to_graph6

_NO_JUMP = 1 << 30


def _refine(rows: tuple[int, ...], cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    n = len(rows)
    qi = 0
    while qi < len(queue) and len(cells) < n:
        w = queue[qi]
        qi += 1
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(rows[v] & w).bit_count() for v in cell]
            lo = min(counts)
            if lo == max(counts):
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            for c in sorted(groups):
                frag = groups[c]
                out.append(frag)
                mask = 0
                for v in frag:
                    mask |= 1 << v
                queue.append(mask)
        cells = out
    return cells


def _leaf_certificate(rows: tuple[int, ...], order: list[int]) -> int:
    cert = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            cert = (cert << 1) | (rj >> order[i] & 1)
    return cert


class _Search:
    __slots__ = ("rows", "n", "first", "best", "autos")

    def __init__(self, rows: tuple[int, ...]):
        self.rows = rows
        self.n = len(rows)
        self.first = None  # (cert, order, path)
        self.best = None
        self.autos: list[list[int]] = []

    def run(self) -> tuple[list[int], int]:
        n = self.n
        if n == 0:
            return [], 0
        cells = _refine(self.rows, [list(range(n))], [(1 << n) - 1])
        self._visit(cells, [])
        cert, order, _ = self.best
        return order, cert

    def _visit(self, cells: list[list[int]], path: list[int]) -> int:
        if len(cells) == self.n:
            return self._leaf(cells, path)
        depth = len(path)
        ti = 0
        while len(cells[ti]) == 1:
            ti += 1
        target = cells[ti]
        tried: list[int] = []
        for v in target:
            if tried and self._same_orbit(v, tried, path):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            child = _refine(self.rows, cells[:ti] + [[v], rest] + cells[ti + 1:], [1 << v])
            back = self._visit(child, path + [v])
            if back < depth:
                return back
        return _NO_JUMP

    def _leaf(self, cells: list[list[int]], path: list[int]) -> int:
        order = [c[0] for c in cells]
        cert = _leaf_certificate(self.rows, order)
        if self.first is None:
            self.first = self.best = (cert, order, path)
            return _NO_JUMP
        for ref in (self.first, self.best):
            if cert == ref[0]:
                self._record(ref[1], order)
                return _common_prefix(ref[2], path)
        if cert < self.best[0]:
            self.best = (cert, order, path)
        return _NO_JUMP

    def _record(self, ref_order: list[int], order: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(ref_order, order):
            gamma[a] = b
        self.autos.append(gamma)

    def _same_orbit(self, v: int, tried: list[int], path: list[int]) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if any(gamma[p] != p for p in path):
                continue
            for x, y in enumerate(gamma):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        rv = find(v)
        return any(find(t) == rv for t in tried)


def _common_prefix(a: list[int], b: list[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def canonical_labeling(g: Graph) -> tuple[list[int], int]:
    """Return ``(order, cert)``: ``order[i]`` is the vertex placed at position ``i``.

    ``cert`` is the canonical upper-triangle bit string as an integer; two
    graphs of the same order are isomorphic iff their certificates agree.
    """
    return _Search(g.rows).run()


def certificate(g: Graph) -> int:
    return _Search(g.rows).run()[1]


def canonical_form(g: Graph) -> bytes:
    """Isomorphism certificate: the graph6 bytes of the canonically relabelled graph."""
    _, cert = canonical_labeling(g)
    return bits_to_graph6(g.n, cert)


def canonical_graph(g: Graph) -> Graph:
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return certificate(g) == certificate(h)
