import pytest

from malleq.bdt import ONE, parse_bdt
from malleq.classical import (
    MAtom, MDual, MPlus, MallSequent, Tensor, With, check_mall_proof, m_ax, m_ex, m_par,
    m_plus_l, m_plus_r, m_tensor, m_with, mall_bdt_slicing, mall_equiv, mall_equiv_oracle,
    mall_slicing, parse_mall_formula, parse_mall_proof, parse_mall_sequent, show_mall_proof,
)
from malleq.equiv import ConclusionMismatch, proof_equiv
from malleq.errors import ParseError, ProofError
from malleq.generators import GenConfig, mall_pair
from malleq.slicing import expand
from golden import TWO_SLICE

# one-sided mirror of the two-slice example: |- (a +[y] b), (~a &[x] ~b)
MIRROR = "(with x (ex 1 2 (plusL (a +[y] b) (ax a))) (ex 1 2 (plusR (a +[y] b) (ax b))))"


def test_axiom():
    p = m_ax("a")
    assert str(check_mall_proof(p)) == "|- ~a, a"
    assert mall_bdt_slicing(p).entries == {(0, 1): ONE}


def test_par():
    assert str(m_par(m_ax("a")).conclusion) == "|- (~a @ a)"


def test_tensor():
    p = m_tensor(m_ax("a"), m_ax("b"))
    assert str(p.conclusion) == "|- ~a, ~b, (a * b)"
    bs = mall_bdt_slicing(p)
    assert bs.entries == {(0, 2): ONE, (1, 3): ONE}
    assert bs[0, 1] == parse_bdt("0")


def test_errors():
    with pytest.raises(ProofError):
        m_par(m_ex(1, 3, m_ax("a")))
    with pytest.raises(ProofError):
        m_with("x", m_ax("a"), m_ax("b"))
    with pytest.raises(ProofError):
        m_plus_l(MPlus("y", MAtom("b"), MAtom("a")), m_ax("a"))
    with pytest.raises(ParseError):
        parse_mall_proof("(tensor (ax a))")


def test_mirror_slicing():
    p = parse_mall_proof(MIRROR)
    assert str(p.conclusion) == "|- (a +[y] b), (~a &[x] ~b)"
    bs = mall_bdt_slicing(p)
    assert bs[0, 2] == parse_bdt("(x ? 1 : 0)")
    assert bs[1, 3] == parse_bdt("(x ? 0 : 1)")
    assert expand(bs) == mall_slicing(p)
    # same verdicts as the intuitionistic original
    assert len(mall_slicing(p)) == 2
    assert proof_equiv(TWO_SLICE, TWO_SLICE).equivalent == mall_equiv(p, p).equivalent


def test_with_swap_asymmetric():
    a = MPlus("y", MAtom("a"), MAtom("a"))
    left = m_ex(1, 2, m_plus_l(a, m_ax("a")))
    right = m_ex(1, 2, m_plus_r(a, m_ax("a")))
    p, q = m_with("x", left, right), m_with("x", right, left)
    assert not mall_equiv(p, q).equivalent
    assert not mall_equiv_oracle(p, q)


def test_distributivity_mirror():
    # tensor below the with, and copied into both branches
    f = MPlus("y", MAtom("a"), MAtom("a"))
    pi = m_ex(1, 2, m_plus_l(f, m_ax("a")))  # |- (a + a), ~a
    mu = m_ex(1, 2, m_plus_r(f, m_ax("a")))
    below = m_tensor(m_ax("c"), m_ex(1, 2, m_with("x", pi, mu)))

    def side(p):
        return m_ex(2, 3, m_tensor(m_ax("c"), m_ex(1, 2, p)))

    above = m_ex(2, 3, m_with("x", side(pi), side(mu)))
    assert str(below.conclusion) == "|- ~c, (~a &[x] ~a), (c * (a +[y] a))"
    assert above.conclusion == below.conclusion
    assert mall_equiv(below, above).equivalent
    assert mall_equiv_oracle(below, above)


def test_conclusion_mismatch():
    with pytest.raises(ConclusionMismatch):
        mall_equiv(m_ax("a"), m_ax("b"))


def test_text_formats():
    f = parse_mall_formula("((a * ~b) &[x] (c @ (d +[y] e)))")
    assert isinstance(f, With) and isinstance(f.left, Tensor) and f.left.right == MDual("b")
    s = parse_mall_sequent("|- ~a, a")
    assert s == MallSequent((MDual("a"), MAtom("a")))
    p = parse_mall_proof(MIRROR)
    assert show_mall_proof(p) == MIRROR
    with pytest.raises(ParseError):
        parse_mall_formula("(a & b)")


@pytest.mark.parametrize("seed", range(30))
def test_random_pairs_agree_with_oracle(seed):
    p, q = mall_pair(GenConfig(seed, 3, 4))
    check_mall_proof(p), check_mall_proof(q)
    assert expand(mall_bdt_slicing(p)) == mall_slicing(p)
    assert mall_equiv(p, q).equivalent == mall_equiv_oracle(p, q)
