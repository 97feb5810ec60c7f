import itertools
import math

import pytest

import cycram


def brute_has_cycle(g, n):
    adj = {v: set() for v in range(g.vertex_count)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    for combo in itertools.permutations(range(g.vertex_count), n):
        if combo[0] != min(combo) or combo[1] > combo[-1]:
            continue
        if all(combo[(i + 1) % n] in adj[combo[i]] for i in range(n)):
            return True
    return False


def test_graph_roundtrip(tmp_path):
    g = cycram.Graph.bipartite(2, 2, [(0, 2), (1, 3)])
    assert g.is_labeled and g.edge_count == 2
    path = tmp_path / "g.el"
    cycram.write_graph(g, str(path))
    assert cycram.read_graph(str(path)) == g


def test_errors_are_typed():
    with pytest.raises(cycram.DomainError):
        cycram.chernoff_bound(10, 2.0)
    with pytest.raises(cycram.Error):
        cycram.build_even_gadget(7, 2)


def test_samplers_are_seeded():
    a = cycram.sample_bipartite(4, 3, 1.5, seed=3)
    assert a == cycram.sample_bipartite(4, 3, 1.5, seed=3)
    assert a.vertex_count == 24
    assert cycram.sample_graph(4, 3, 3.0, seed=1).edge_count == 66


def test_chernoff_dominates_tail():
    for t in range(1, 10):
        assert cycram.chernoff_bound(6.0, t / 6.0) > cycram.binomial_two_sided_tail(20, 0.3, t)


def test_joined_and_expander():
    k = cycram.complete_bipartite(8, 8)
    assert cycram.is_alpha_joined(k, 0.25)["verdict"] == "joined"
    empty = cycram.Graph.bipartite(8, 8, [])
    res = cycram.is_alpha_joined(empty, 0.25)
    assert res["verdict"] == "not-joined" and res["witness"] is not None
    x = cycram.extract_expander(k, 0.25)
    assert x["log"]["claim1_holds"]
    rep = cycram.verify_expansion(x["expander"], 0.25, 8)
    assert rep["conclusion1"] and rep["conclusion2"] and rep["conclusion3"]


def test_even_cycle_is_real():
    g = cycram.complete_bipartite(12, 12)
    res = cycram.find_even_cycle(g, 6, 1 / 11, relaxed=True)
    assert res["status"] == "cycle"
    assert cycram.is_cycle_of_length(g, res["cycle"], 6)


def test_exact_oracles():
    pet = cycram.petersen()
    for n in range(3, 8):
        assert (cycram.find_cycle_exact(pet, n) is not None) == brute_has_cycle(pet, n)
    assert cycram.arrow_check(cycram.complete(6), 3, 2)["holds"]
    assert not cycram.arrow_check(cycram.complete(5), 3, 2)["holds"]


def test_adversarial_coloring():
    res = cycram.adversarial_color_odd(cycram.complete(5), 5, 2)
    assert res["guaranteed"] == (10 <= 8)


def test_bounds():
    assert cycram.claim2_aa_limit(0.017) < 1 < cycram.claim2_aa_limit(0.03)
    rows = cycram.claim2_scan(0.010, 0.030, 0.001)
    signs = [r["margin"] > 0 for r in rows]
    assert sum(a != b for a, b in zip(signs, signs[1:])) == 1
    assert cycram.even_upper_constant(3, 1000)["exponent"] == 120
    assert math.isclose(cycram.odd_upper_constant_log2(2), 64 + math.log2(32))
