"""Worked examples shared by several test files."""
from malleq.bdt import parse_bdt
from malleq.core import Atom, Plus
from malleq.proof import ax, dplus, ex, imp_l, imp_r, parse_proof, plus_l, plus_r

XOR = parse_bdt("(y ? (x ? 0 : 1) : (x ? 1 : 0))")
OR_NOT_Y_1 = parse_bdt("(x ? (y ? 1 : 0) : 1)")
OR_NOT_Y_2 = parse_bdt("(y ? 1 : (x ? 0 : 1))")
PHI = parse_bdt("(x ? (t ? (z ? 0 : 1) : 0) : (y ? 0 : 0))")
PSI = parse_bdt("(t ? (x ? 1 : (z ? 1 : 0)) : (y ? 1 : 1))")
FREE_VARS_TREE = parse_bdt("(x ? (t ? (z ? 0 : 0) : 0) : (y ? 1 : 0))")

# (a +[x] b) |- (a +[y] b), one branch per disjunct
TWO_SLICE = parse_proof("(dplus x (plusL (a +[y] b) (ax a)) (plusR (a +[y] b) (ax b)))")
# same conclusion shape over a single atom, used for branch swaps
SYMMETRIC = parse_proof("(dplus x (plusL (a +[y] a) (ax a)) (plusR (a +[y] a) (ax a)))")


def intro_pair():
    """B + C |- A -o D: impR below the dplus, and lifted above it."""
    d = Plus("y", Atom("d"), Atom("e"))
    pi = plus_l(d, imp_l(ax("a"), ax("d")))
    mu = plus_r(d, imp_l(ax("a"), ax("e")))
    left = imp_r(ex(1, 2, dplus("x", pi, mu)))
    right = dplus("x", imp_r(ex(1, 2, pi)), imp_r(ex(1, 2, mu)))
    return left, right


def distributivity_pair():
    """(c -o c) -o e, (A +[x] B) |- C with nu below, and copied above the dplus."""
    nu = imp_r(ax("c"))
    c = Plus("y", Atom("f"), Atom("g"))
    pi = plus_l(c, imp_l(ax("e"), ax("f")))
    mu = plus_r(c, imp_l(ax("e"), ax("g")))
    left = imp_l(nu, dplus("x", pi, mu))
    right = dplus("x", imp_l(nu, pi), imp_l(nu, mu))
    return left, right


def two_slice(k):
    return dplus(
        f"x{k}",
        plus_l(Plus(f"y{k}", Atom("a"), Atom("b")), ax("a")),
        plus_r(Plus(f"y{k}", Atom("a"), Atom("b")), ax("b")),
    )


def product(n):
    """n two-slice proofs joined by impL: 2**n slices."""
    p = ax("c")
    for k in range(n, 0, -1):
        if k < n:
            p = ex(1, 2, p)
        p = imp_l(two_slice(k), p)
    return p

