import pytest

import stablehit as sh


def test_blown_up_cycle_has_no_hitting_set():
    g = sh.gen_blown_up_cycle(5, 2)
    cs = sh.maximum_cliques(g)
    assert cs.omega == 4 and g.max_degree() == 5
    assert len(cs.cliques) == 5
    assert sh.brute_force_hitting(g) is None
    report = sh.hitting_stable_set(g)
    assert report.status == "NONE_EXISTS_PROVEN"


def test_linked_cliques_pipeline():
    g = sh.gen_linked_cliques(4, 2, True)
    report = sh.hitting_stable_set(g)
    assert report.hypothesis_met
    assert report.status == "FOUND_UNDER_HYPOTHESIS"
    assert sh.verify_hitting(g, report.stable_set)
    assert all(c.all_hold for c in report.proof_checks)


def test_hajnal_and_kostochka():
    g = sh.Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    cs = sh.maximum_cliques(g)
    assert cs.cliques == [[0, 1, 2], [0, 1, 3]]
    report = sh.check_hajnal(cs, [0, 1])
    assert (report.lhs, report.rhs, report.holds) == (6, 6, True)
    assert all(r.holds for r in sh.check_kostochka(g, cs))


def test_gadget_certificate():
    pg = sh.gen_haxell_gadget()
    assert sh.find_isr_exact(pg) is None
    cert = sh.find_certificate_exact(pg, 0)
    assert cert is not None and sh.verify_certificate(pg, cert).valid
    result = sh.find_isr_augmenting(pg, 0)
    assert result.kind == "certificate"
    assert sh.verify_certificate(pg, result.certificate).valid


def test_lopsided_isr_through_every_vertex():
    pg = sh.gen_random_lopsided(4, 2, 6, 0.8, 11)
    assert sh.lopsided_check(pg, 2).holds
    for v in range(pg.graph.n):
        picks = sh.find_isr_exact(pg, v)
        assert picks is not None and picks[pg.block_of(v)] == v
        assert sh.is_isr(pg, picks)
        assert sh.find_isr_augmenting(pg, v).isr is not None


def test_dimacs_round_trip_and_errors():
    g = sh.gen_random(10, 0.4, 3)
    assert sh.Graph.from_dimacs(g.to_dimacs()) == g
    with pytest.raises(sh.ParseError):
        sh.Graph.from_dimacs("e 1 2\n")
    with pytest.raises(sh.InputError):
        sh.PartitionedGraph(sh.Graph(3), [[0, 1]])
