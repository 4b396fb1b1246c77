"""Smoke tests for the python bindings.

Runs standalone (python3 test_smoke.py) and under pytest.
"""

import precolor as pc


def test_graph_basics():
    g = pc.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edge_count == 3
    assert pc.bfs_distances(g, 0) == [0, 1, 2, 3]
    assert pc.pairs_within(g, [0, 3], 3) == [(0, 3)]
    assert pc.pairs_within(g, [0, 3], 2) == []


def test_dimacs_round_trip():
    g = pc.load_dimacs("p edge 3 2\ne 1 2\ne 2 3\n")
    assert g.edges() == [(0, 1), (1, 2)]
    assert pc.load_dimacs(pc.save_dimacs(g)).edges() == g.edges()
    try:
        pc.load_dimacs("p edge 2 1\ne 1 1\n")
    except ValueError:
        pass
    else:
        raise AssertionError("self-loop accepted")


def test_oracles():
    k3 = pc.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert pc.exact_k_colorable(k3, 2) is None
    witness = pc.exact_k_colorable(k3, 3, {0: 1})
    assert witness is not None and witness[0] == 1
    colors, extension = pc.min_extension_colors(k3, {0: 1}, 5)
    assert colors == 3
    assert pc.is_proper(k3, extension) and pc.extends(extension, {0: 1})
    assert len(pc.max_matching_exact(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) == 2
    deficiency, witness_set = pc.berge_deficiency(4, [(0, 1), (0, 2), (0, 3)])
    assert deficiency == 2 and witness_set == [0]


def test_distance3_pipeline():
    g = pc.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    f = pc.extend_distance3(g, {0: 3, 3: 3}, [1, 2, 1, 2], 2, 1)
    assert pc.is_proper(g, f)
    assert f[0] == 3 and f[3] == 3
    assert pc.distinct_colors(f) <= 3


def test_distance2_pipeline_and_tightness():
    inst = pc.gen_sharpness_even(2, 2, 4)
    assert inst.d2_pairs == 6
    coloring, report = pc.extend_distance2(inst.graph, inst.d, inst.base, 2, 2)
    assert coloring is None
    assert report["theorem"] == "even" and report["bound"] == 6
    assert not report["hypothesis_satisfied"]
    assert pc.min_extension_colors(inst.graph, inst.d, 4) is None

    rnd = pc.gen_random(r=3, k=1, n=24, edge_prob=0.1, p_size=4, max_d2=5, seed=5)
    coloring, report = pc.extend_distance2(rnd.graph, rnd.d, rnd.base, 3, 1)
    assert coloring is not None
    assert pc.is_proper(rnd.graph, coloring) and pc.extends(coloring, rnd.d)
    assert pc.distinct_colors(coloring) <= 5


def test_colorgraph():
    assert len(pc.one_factorization(6)) == 5
    assert pc.max_edges_without_matching(10, 2) == 9
    g = pc.Graph.from_edges(3, [(0, 1), (1, 2)])
    part = pc.build_partition(g, {0: 1, 2: 2}, 3)
    assert part.phi_of(1, 2) == 1
    assert pc.partition_weight(part) == 1
    matching = pc.find_good_matching(part, 1)
    assert matching is not None and pc.is_good(matching, part)


def main():
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"{name}: ok")
            except Exception as exc:  # noqa: BLE001
                failures += 1
                print(f"{name}: FAILED ({exc})")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
