"""Isomorph-free generation of small graphs and the censuses built on it.

Graphs of order ``n`` are grown from the graphs of order ``n - 1`` by adding
vertex ``n - 1`` with every admissible neighbourhood.  A child is kept iff

* the new vertex lies in the child's deletion class (minimum degree, then
  smallest sorted neighbour-degree tuple),
* deleting the canonically chosen member of that class gives a graph
  isomorphic to the parent, and
* no sibling from the same parent has the same certificate.

Every isomorphism class then appears exactly once, under the one parent
class it reduces to.  Levels are cached per process; each level stores
``(rows, certificate)`` pairs in generation order, which is deterministic.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Sequence

from .canon import canonical_labeling, certificate
from .families import generate_Yn, in_Yn, same_up_to_isomorphism, yn_count_formula
from .graph import (
    C3_PRIME,
    ODD_HOLE,
    Graph,
    bits,
    has_induced,
    is_bipartite,
    is_connected,
    min_degree,
    triangles_total,
)
from .graph6 import write_graph6
from .invariants import profile
from .theorems import THEOREM_IDS, evaluate_all

MAX_ORDER = 10
DEFAULT_SURVEY_CAP = 8
TABLE1_EXPECTED = {3: 1, 4: 2, 5: 4, 6: 7, 7: 11, 8: 17, 9: 25, 10: 36}

Level = list[tuple[tuple[int, ...], int]]

_levels: dict[int, Level] = {}


class EnumerationError(ValueError):
    pass


def _check_order(n: int, lo: int, hi: int, allow_large: bool = False, cap: int | None = None) -> None:
    if not lo <= n <= hi:
        raise EnumerationError(f"order {n} outside {lo}..{hi}")
    if cap is not None and n > cap and not allow_large:
        raise EnumerationError(f"order {n} exceeds the default cap {cap}; pass allow_large")


def _deletion_key(rows: Sequence[int], degs: Sequence[int], v: int) -> tuple[int, ...]:
    return tuple(sorted(degs[w] for w in bits(rows[v])))


def _children(parent: tuple[tuple[int, ...], int]) -> Level:
    prows, pcert = parent
    k = len(prows)
    new = k
    pdeg = [r.bit_count() for r in prows]
    top = min(min(pdeg, default=0) + 1, k)
    seen: set[int] = set()
    out: Level = []
    for size in range(top + 1):
        for nbrs in combinations(range(k), size):
            s = 0
            for v in nbrs:
                s |= 1 << v
            degs = pdeg + [size]
            for v in nbrs:
                degs[v] += 1
            if min(degs) != size:
                continue
            rows = tuple(r | (1 << new) if s >> i & 1 else r for i, r in enumerate(prows)) + (s,)
            cands = [v for v in range(k + 1) if degs[v] == size]
            if len(cands) > 1:
                keys = {v: _deletion_key(rows, degs, v) for v in cands}
                best = min(keys.values())
                if keys[new] != best:
                    continue
                cands = [v for v in cands if keys[v] == best]
            order, cert = canonical_labeling(Graph._trusted(rows))
            if cert in seen:
                continue
            if len(cands) > 1:
                pos = {v: i for i, v in enumerate(order)}
                c = max(cands, key=pos.__getitem__)
                if c != new and certificate(Graph._trusted(rows).delete_vertex(c)) != pcert:
                    continue
            seen.add(cert)
            out.append((rows, cert))
    return out


def _expand_chunk(chunk: list[tuple[tuple[int, ...], int]]) -> list[Level]:
    return [_children(p) for p in chunk]


def _chunks(seq: Sequence[Any], size: int) -> list[Sequence[Any]]:
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def _map_ordered(fn: Callable, chunks: list, workers: int) -> Iterator:
    if workers <= 1 or len(chunks) <= 1:
        return map(fn, chunks)
    pool = ProcessPoolExecutor(max_workers=workers)

    def run():
        with pool:
            yield from pool.map(fn, chunks)

    return run()


def _expand(parents: Sequence[tuple[tuple[int, ...], int]], workers: int) -> Level:
    size = max(1, min(256, len(parents) // (4 * max(workers, 1)) or 1))
    out: Level = []
    for block in _map_ordered(_expand_chunk, _chunks(list(parents), size), workers):
        for kids in block:
            out.extend(kids)
    return out


def level(n: int, workers: int = 1) -> Level:
    """All graphs of order ``n`` as ``(rows, certificate)``, one per isomorphism class."""
    if n < 1:
        raise EnumerationError("order must be at least 1")
    if n not in _levels:
        if n == 1:
            _levels[1] = [((0,), 0)]
        else:
            _levels[n] = _expand(level(n - 1, workers), workers)
    return _levels[n]


def _shard_parents(n: int, shard: tuple[int, int], workers: int) -> Level:
    i, k = shard
    if not (k >= 1 and 0 <= i < k):
        raise EnumerationError(f"bad shard {i}/{k}")
    if n == 1:
        return level(1) if i == 0 else []
    parents = level(n - 1, workers)[i::k]
    return _expand(parents, workers)


STREAM_SHARDS = 32
SURVEY_BATCH = 1 << 16


def _items(n: int, shard: tuple[int, int] | None, workers: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Graphs of order n.  The top order is streamed shard by shard rather than cached."""
    if shard is not None:
        yield from _shard_parents(n, shard, workers)
    elif n < MAX_ORDER or n in _levels:
        yield from level(n, workers)
    else:
        for i in range(STREAM_SHARDS):
            yield from _shard_parents(n, (i, STREAM_SHARDS), workers)


def _passes(g: Graph, connected, min_deg, bipartite, triangle_free) -> bool:
    if connected is not None and is_connected(g) != connected:
        return False
    if min_deg is not None and min_degree(g) < min_deg:
        return False
    if bipartite is not None and is_bipartite(g) != bipartite:
        return False
    if triangle_free is not None and (triangles_total(g) == 0) != triangle_free:
        return False
    return True


def generate_graphs(
    n: int,
    connected: bool | None = None,
    min_degree: int | None = None,
    bipartite: bool | None = None,
    triangle_free: bool | None = None,
    workers: int = 1,
    shard: tuple[int, int] | None = None,
) -> Iterator[Graph]:
    """One representative per isomorphism class of order ``n`` passing the filters.

    ``shard=(i, k)`` restricts output to children of every k-th parent
    starting at index i; the k shards partition the full output.
    """
    _check_order(n, 1, MAX_ORDER)
    for rows, _ in _items(n, shard, workers):
        g = Graph._trusted(rows)
        if _passes(g, connected, min_degree, bipartite, triangle_free):
            yield g


# ---------------------------------------------------------------------------
# Surveys

@dataclass
class TheoremStats:
    checked: int = 0
    held: int = 0
    equality: int = 0
    inconsistent: int = 0

    def merge(self, other: "TheoremStats") -> None:
        self.checked += other.checked
        self.held += other.held
        self.equality += other.equality
        self.inconsistent += other.inconsistent


@dataclass
class EnumerationSummary:
    order: int
    total_graphs: int = 0
    connected_graphs: int = 0
    theorems: dict[str, TheoremStats] = field(
        default_factory=lambda: {t: TheoremStats() for t in THEOREM_IDS}
    )
    counterexamples: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    shard: tuple[int, int] | None = None

    @property
    def violations(self) -> int:
        return sum(s.checked - s.held for s in self.theorems.values())

    @property
    def inconsistencies(self) -> int:
        return sum(s.inconsistent for s in self.theorems.values())

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "EnumerationSummary") -> None:
        self.total_graphs += other.total_graphs
        self.connected_graphs += other.connected_graphs
        for t, s in other.theorems.items():
            self.theorems[t].merge(s)
        self.counterexamples.extend(other.counterexamples)

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        d: dict[str, Any] = {
            "schema": "piszeged.survey/1",
            "order": self.order,
            "total_graphs": self.total_graphs,
            "connected_graphs": self.connected_graphs,
            "theorems": {
                t: {"checked": s.checked, "held": s.held, "equality": s.equality,
                    "inconsistent": s.inconsistent}
                for t, s in self.theorems.items()
            },
            "counterexamples": list(self.counterexamples),
        }
        if self.shard is not None:
            d["shard"] = f"{self.shard[0]}/{self.shard[1]}"
        if timing:
            d["elapsed_seconds"] = round(self.elapsed, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


def _survey_chunk(args: tuple[int, list[tuple[int, ...]]]) -> EnumerationSummary:
    n, rows_list = args
    part = EnumerationSummary(n)
    for rows in rows_list:
        g = Graph._trusted(rows)
        part.total_graphs += 1
        if not is_connected(g):
            continue
        part.connected_graphs += 1
        bad = False
        for v in evaluate_all(profile(g)):
            if not v.applicable:
                continue
            s = part.theorems[v.theorem]
            s.checked += 1
            s.held += bool(v.holds)
            s.equality += bool(v.equality)
            s.inconsistent += not v.consistent
            bad |= not (v.holds and v.consistent)
        if bad:
            part.counterexamples.append(write_graph6(g))
    return part


def survey(
    n: int,
    workers: int = 1,
    allow_large: bool = False,
    shard: tuple[int, int] | None = None,
) -> EnumerationSummary:
    """Run every applicable theorem check on every connected graph of order ``n``."""
    _check_order(n, 3, MAX_ORDER, allow_large, DEFAULT_SURVEY_CAP)
    start = time.perf_counter()
    summary = EnumerationSummary(n, shard=shard)

    def flush(batch):
        size = max(1, min(512, len(batch) // (4 * max(workers, 1))))
        for part in _map_ordered(_survey_chunk, [(n, c) for c in _chunks(batch, size)], workers):
            summary.merge(part)

    batch: list[tuple[int, ...]] = []
    for rows, _ in _items(n, shard, workers):
        batch.append(rows)
        if len(batch) == SURVEY_BATCH:
            flush(batch)
            batch = []
    if batch:
        flush(batch)
    summary.elapsed = time.perf_counter() - start
    return summary


# ---------------------------------------------------------------------------
# Censuses

def is_piv_nm_extremal(g: Graph) -> bool:
    """``PI_v == n m - 3 t``."""
    inv = profile(g).invariants
    return inv.vertex_pi == g.n * g.m - 3 * inv.triangles


def extremal_graphs(n: int, workers: int = 1, allow_large: bool = False) -> list[Graph]:
    """Connected non-bipartite graphs of order n attaining ``PI_v = nm - 3t``."""
    _check_order(n, 3, MAX_ORDER, allow_large, DEFAULT_SURVEY_CAP)
    return [
        g for g in generate_graphs(n, connected=True, bipartite=False, workers=workers)
        if is_piv_nm_extremal(g)
    ]


def table1(n: int, workers: int = 1, allow_large: bool = False) -> int:
    return len(extremal_graphs(n, workers, allow_large))


def extremal_diameter_check(n: int) -> bool:
    """Every non-bipartite extremal graph of order n has diameter at most 2."""
    _check_order(n, 3, DEFAULT_SURVEY_CAP)
    return all(profile(g).invariants.diameter <= 2 for g in extremal_graphs(n))


def extremal_paw_free(n: int) -> bool:
    """No non-bipartite extremal graph of order n contains an induced paw."""
    return not any(has_induced(g, C3_PRIME) for g in extremal_graphs(n))


@dataclass(frozen=True)
class YnCensus:
    order: int
    brute_force: int
    formula: int
    generated: int
    sets_match: bool

    @property
    def ok(self) -> bool:
        return self.sets_match and self.brute_force == self.formula == self.generated


def yn_graphs(n: int, workers: int = 1) -> list[Graph]:
    """Connected graphs of order n, minimum degree >= 2, in Y_n, found exhaustively."""
    return [g for g in generate_graphs(n, connected=True, min_degree=2, workers=workers) if in_Yn(g)]


def yn_census(n: int, workers: int = 1) -> YnCensus:
    _check_order(n, 3, 9)
    found = yn_graphs(n, workers)
    built = generate_Yn(n)
    return YnCensus(
        n, len(found), yn_count_formula(n), len(built), same_up_to_isomorphism(found, built),
    )


@dataclass(frozen=True)
class OddHoleFinding:
    graph6: str
    order: int
    vertex_pi: int
    bound: int
    induced_c3_prime: bool


def odd_hole_free_probe(max_n: int = 7, min_n: int = 3) -> list[OddHoleFinding]:
    """Connected odd-hole-free graphs of order <= max_n that are strict in ``PI_v <= nm - 3t``."""
    out = []
    for n in range(min_n, max_n + 1):
        for g in generate_graphs(n, connected=True):
            if has_induced(g, ODD_HOLE):
                continue
            inv = profile(g).invariants
            bound = g.n * g.m - 3 * inv.triangles
            if inv.vertex_pi != bound:
                out.append(OddHoleFinding(
                    write_graph6(g), n, inv.vertex_pi, bound, has_induced(g, C3_PRIME),
                ))
    return out


def format_findings(findings: Iterable[OddHoleFinding]) -> str:
    findings = list(findings)
    lines = [
        "Connected odd-hole-free graphs with PI_v < nm - 3t",
        f"{len(findings)} graphs; "
        f"{sum(f.induced_c3_prime for f in findings)} contain an induced paw (C3')",
        "graph6\tn\tPI_v\tnm-3t\tinduced_paw",
    ]
    lines += [f"{f.graph6}\t{f.order}\t{f.vertex_pi}\t{f.bound}\t{int(f.induced_c3_prime)}" for f in findings]
    return "\n".join(lines) + "\n"
