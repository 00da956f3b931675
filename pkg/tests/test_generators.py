import pytest

from malleq import bdt as B
from malleq.bdt import Leaf
from malleq.classical import check_mall_proof
from malleq.equiv import proof_equiv, proof_equiv_oracle
from malleq.generators import (
    GenConfig, Xoshiro256, equivalent_pair, intro_template, distributivity_template,
    mall_pair, proof_corpus, random_bdt_pair, random_free_bdt, random_line, shannon_expand,
    splitmix64,
)
from malleq.proof import check_proof, show_proof
from malleq.reductions import LineGraph, ord_to_bdt_pair, ord_to_proof_pair


def test_splitmix_reference_values():
    # published first outputs for seed 0
    state, a = splitmix64(0)
    _, b = splitmix64(state)
    assert a == 0xE220A8397B1DCDAF
    assert b == 0x6E789E6AA1B965F4


def test_xoshiro_deterministic():
    r1, r2 = Xoshiro256(42), Xoshiro256(42)
    assert [r1.next64() for _ in range(5)] == [r2.next64() for _ in range(5)]
    assert Xoshiro256(1).next64() != Xoshiro256(2).next64()


def test_below_range():
    r = Xoshiro256(7)
    seen = {r.below(5) for _ in range(500)}
    assert seen == set(range(5))
    with pytest.raises(ValueError):
        r.below(0)


def test_depth_zero_is_leaf():
    assert isinstance(random_free_bdt(GenConfig(1, 4, 0)), Leaf)


def test_seed_42_reproducible():
    cfg = GenConfig(42, 4, 4)
    assert str(random_free_bdt(cfg)) == str(random_free_bdt(cfg))
    assert str(random_free_bdt(cfg)) == "(x1 ? (x4 ? (x3 ? (x2 ? 1 : 0) : (x2 ? 0 : 0)) : (x2 ? (x3 ? 1 : 1) : 0)) : (x4 ? (x2 ? (x3 ? 1 : 1) : (x3 ? 0 : 1)) : 0))"


def _depth(t):
    return 0 if isinstance(t, Leaf) else 1 + max(_depth(t.left), _depth(t.right))


def test_free_trees_valid():
    for seed in range(1000):
        cfg = GenConfig(seed, 5, 6)
        t = random_free_bdt(cfg)
        assert B.is_free(t)
        assert B.variables(t) <= {f"x{k}" for k in range(1, 6)}
        assert _depth(t) <= 6


def test_bdt_pairs_free():
    for seed in range(200):
        t, u = random_bdt_pair(GenConfig(seed, 4, 4))
        assert B.is_free(t) and B.is_free(u)


def test_shannon_expand():
    t = B.parse_bdt("(x1 ? 0 : (x2 ? 1 : 0))")
    u = shannon_expand(t, (), "x2")
    assert B.is_free(u) and B.equiv_oracle(t, u)
    with pytest.raises(ValueError):
        shannon_expand(t, (1,), "x1")


def test_zero_mutations():
    p, q, expected = equivalent_pair(GenConfig(3, 3, 3, 0))
    assert p is q and expected


def test_templates():
    r = Xoshiro256(5)
    for _ in range(10):
        for make in (intro_template, distributivity_template):
            p, q = make(r)
            assert check_proof(p) == check_proof(q)
            assert proof_equiv_oracle(p, q)


def test_expected_flags_match_oracle():
    flags = set()
    for p, q, expected in proof_corpus(99, 120, var_budget=3, depth_budget=3):
        check_proof(p), check_proof(q)
        assert proof_equiv_oracle(p, q) == expected
        flags.add(expected)
    assert flags == {True, False}


def test_pairs_deterministic():
    cfg = GenConfig(17, 3, 3, 3)
    a, b = equivalent_pair(cfg), equivalent_pair(cfg)
    assert [show_proof(x) for x in a[:2]] == [show_proof(x) for x in b[:2]] and a[2] == b[2]


def test_random_line():
    for seed in range(100):
        inst = random_line(GenConfig(seed, 4 + seed % 5))
        order = inst.graph.order()
        assert inst.f in order[1:-1] and inst.s in order[1:-1] and inst.f != inst.s
        ord_to_proof_pair(inst)
        ord_to_bdt_pair(inst)
    placements = {(random_line(GenConfig(s, 4)).f, random_line(GenConfig(s, 4)).s) for s in range(5)}
    assert placements
    with pytest.raises(ValueError):
        random_line(GenConfig(1, 3))


def test_line_reproducible():
    assert random_line(GenConfig(42, 6)) == random_line(GenConfig(42, 6))


def test_mall_pairs_check():
    for seed in range(50):
        p, q = mall_pair(GenConfig(seed, 3, 4))
        assert check_mall_proof(p) == check_mall_proof(q)


def test_bad_config():
    with pytest.raises(ValueError):
        GenConfig(1, -1, 2)
