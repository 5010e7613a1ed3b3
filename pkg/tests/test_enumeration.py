import json

import networkx as nx
import pytest

from piszeged.canon import certificate
from piszeged.enumeration import (
    TABLE1_EXPECTED,
    EnumerationError,
    extremal_diameter_check,
    extremal_graphs,
    extremal_paw_free,
    format_findings,
    generate_graphs,
    odd_hole_free_probe,
    survey,
    table1,
    yn_census,
)
from piszeged.graph import Graph, is_bipartite, is_connected, min_degree, triangles_total
from piszeged.graph6 import write_graph6
from piszeged.theorems import THEOREM_IDS

from oracles import all_labeled_graphs, isomorphism_class_count

ALL = [1, 2, 4, 11, 34, 156, 1044, 12346]
CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117]


@pytest.mark.parametrize("n", range(1, 9))
def test_known_class_counts(n):
    assert sum(1 for _ in generate_graphs(n)) == ALL[n - 1]
    assert sum(1 for _ in generate_graphs(n, connected=True)) == CONNECTED[n - 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_against_labeled_oracle(n):
    assert sum(1 for _ in generate_graphs(n)) == isomorphism_class_count(n)
    assert sum(1 for _ in generate_graphs(n, connected=True)) == isomorphism_class_count(n, True)


@pytest.mark.parametrize("n", range(1, 6))
def test_classes_cover_every_labeled_graph(n):
    reps = {certificate(g) for g in generate_graphs(n)}
    labeled = {certificate(Graph(n, e)) for e in all_labeled_graphs(n)}
    assert reps == labeled


def test_examples():
    assert sum(1 for _ in generate_graphs(4, connected=True)) == 6
    assert sum(1 for _ in generate_graphs(5, connected=True)) == 21
    assert sum(1 for _ in generate_graphs(3)) == 4


def test_filters():
    for g in generate_graphs(6, connected=True, min_degree=2, bipartite=False, triangle_free=True):
        assert is_connected(g) and min_degree(g) >= 2 and not is_bipartite(g)
        assert triangles_total(g) == 0
    # trees, forests and the like
    assert sum(1 for _ in generate_graphs(6, bipartite=True, connected=True)) == 17
    assert sum(1 for _ in generate_graphs(5, triangle_free=True, connected=True)) == 6


def test_no_duplicates_at_eight():
    certs = [certificate(g) for g in generate_graphs(8)]
    assert len(set(certs)) == len(certs)


def test_shards_partition_output():
    full = sorted(write_graph6(g) for g in generate_graphs(7))
    parts = []
    for i in range(3):
        parts += [write_graph6(g) for g in generate_graphs(7, shard=(i, 3))]
    assert sorted(parts) == full
    with pytest.raises(EnumerationError):
        list(generate_graphs(7, shard=(3, 3)))


def test_order_bounds():
    with pytest.raises(EnumerationError):
        list(generate_graphs(0))
    with pytest.raises(EnumerationError):
        list(generate_graphs(11))
    with pytest.raises(EnumerationError):
        survey(9)
    with pytest.raises(EnumerationError):
        survey(2)


@pytest.mark.parametrize("n,checked", [(3, 2), (4, 6), (5, 21), (6, 112)])
def test_survey_small(n, checked):
    s = survey(n)
    assert s.connected_graphs == checked
    assert s.counterexamples == []
    assert s.violations == 0 and s.inconsistencies == 0
    assert s.theorems["piv_le_sz_plus_m"].checked == checked
    assert set(s.theorems) == set(THEOREM_IDS)


def test_survey_shards_merge_to_full():
    full = survey(6).to_dict()
    merged = {t: dict(checked=0, held=0, equality=0, inconsistent=0) for t in THEOREM_IDS}
    connected = 0
    for i in range(4):
        part = survey(6, shard=(i, 4)).to_dict()
        assert part["shard"] == f"{i}/4"
        connected += part["connected_graphs"]
        for t, stats in part["theorems"].items():
            for k, v in stats.items():
                merged[t][k] += v
    assert connected == full["connected_graphs"]
    assert merged == full["theorems"]


def test_survey_json_is_stable():
    a = survey(5).to_json()
    b = survey(5, workers=2).to_json()
    assert a == b
    assert "elapsed_seconds" not in json.loads(a)
    assert "elapsed_seconds" in survey(5).to_dict(timing=True)


@pytest.mark.parametrize("n", range(3, 8))
def test_table1(n):
    assert table1(n) == TABLE1_EXPECTED[n]


def test_extremal_graphs_are_not_bipartite():
    assert all(not is_bipartite(g) for g in extremal_graphs(6))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_extremal_structure(n):
    assert extremal_diameter_check(n)
    assert extremal_paw_free(n)


@pytest.mark.parametrize("n,count", [(3, 1), (4, 1), (5, 2), (6, 2), (7, 3), (8, 2)])
def test_yn_census(n, count):
    c = yn_census(n)
    assert c.ok
    assert c.brute_force == c.formula == c.generated == count


def test_claim_oddholefree(tmp_path, named):
    findings = odd_hole_free_probe(max_n=7)
    report = format_findings(findings)
    path = tmp_path / "oddhole_findings.tsv"
    path.write_text(report)
    print(report)
    found = {f.graph6 for f in findings}
    assert write_graph6(named["bull"]) in found
    assert all(f.vertex_pi < f.bound for f in findings)
    # every strict odd-hole-free graph found so far carries an induced paw
    assert all(f.induced_c3_prime for f in findings)
    assert path.read_text().splitlines()[0].startswith("Connected odd-hole-free graphs")


def _labeled_yn_classes(n):
    """Y_n classes by brute force over labelled graphs, using networkx distances and isomorphism."""
    reps = []
    for edges in all_labeled_graphs(n):
        G = nx.Graph(edges)
        G.add_nodes_from(range(n))
        if min(d for _, d in G.degree()) < 2 or not nx.is_connected(G):
            continue
        dist = dict(nx.all_pairs_shortest_path_length(G))
        member = True
        for u, v in edges:
            mu = mv = 0
            for x, y in edges:
                du, dv = min(dist[u][x], dist[u][y]), min(dist[v][x], dist[v][y])
                mu += du < dv
                mv += dv < du
            if min(mu, mv) != 1:
                member = False
                break
        if member and not any(nx.is_isomorphic(G, H) for H in reps):
            reps.append(G)
    return len(reps)


@pytest.mark.parametrize("n", range(3, 7))
def test_yn_census_against_labeled_oracle(n):
    assert _labeled_yn_classes(n) == yn_census(n).brute_force


def test_top_order_streams_without_caching(monkeypatch):
    import piszeged.enumeration as enumeration

    full = sorted(rows for rows, _ in enumeration.level(7))
    monkeypatch.setattr(enumeration, "MAX_ORDER", 7)
    monkeypatch.setattr(enumeration, "_levels", {k: v for k, v in enumeration._levels.items() if k < 7})
    streamed = sorted(g.rows for g in generate_graphs(7))
    assert streamed == full
    assert 7 not in enumeration._levels
    assert survey(7).to_json() == survey(7, workers=2).to_json()
