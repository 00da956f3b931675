"""Seeded instance generators for the property suites.

Randomness comes from :class:`Xoshiro256`, the xoshiro256** generator
(Blackman and Vigna) whose 256-bit state is filled by four SplitMix64 steps
from the 64-bit seed.  Both algorithms are fully specified by a few lines of
64-bit integer arithmetic, so a corpus is reproducible from its seed by any
implementation.  Integers in ``[0, n)`` are drawn by rejection sampling on the
top bits, so there is no modulo bias.

Every generator creates its own generator object from ``GenConfig.seed``;
nothing is shared between calls.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import bdt as B
from .bdt import BDT, Leaf, Node
from .classical import (
    MAtom, MDual, MPlus, MallProof, With, m_ax, m_ex, m_par, m_plus_l, m_plus_r, m_tensor, m_with,
)
from .core import Atom, Imp, Plus
from .encode import encode_bdt
from .proof import (
    Proof, ax, dplus, distribute_impL_over_dplus, ex, imp_l, imp_r, insert_identity_exchange,
    nodes, permute_impR_over_dplus, plus_l, plus_r, swap_dplus_branches,
)
from .reductions import LineGraph, OrdInstance

MASK = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step: ``(new_state, output)``."""
    state = (state + 0x9E3779B97F4A7C15) & MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return state, z ^ (z >> 31)


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK


class Xoshiro256:
    """xoshiro256** seeded by SplitMix64."""

    def __init__(self, seed: int):
        sm = seed & MASK
        self.s = []
        for _ in range(4):
            sm, out = splitmix64(sm)
            self.s.append(out)

    def next64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & MASK, 7) * 9) & MASK
        t = (s[1] << 17) & MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        bits = max(1, (n - 1).bit_length())
        while True:
            r = self.next64() >> (64 - bits)
            if r < n:
                return r

    def coin(self) -> int:
        return self.next64() >> 63

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, xs: list) -> list:
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]
        return xs


@dataclass(frozen=True)
class GenConfig:
    seed: int = 42
    var_budget: int = 3
    depth_budget: int = 3
    mutation_count: int = 2

    def __post_init__(self):
        if self.var_budget < 0 or self.depth_budget < 0 or self.mutation_count < 0:
            raise ValueError("budgets must be non-negative")

    def rng(self) -> Xoshiro256:
        return Xoshiro256(self.seed)


def var_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{k}" for k in range(1, n + 1))


# -- trees ------------------------------------------------------------------

def _tree(rng, names, depth, top=True) -> BDT:
    # one leaf in four below the root, so trees vary in shape
    if depth == 0 or not names or (not top and rng.below(4) == 0):
        return B.leaf(rng.coin())
    var = rng.choice(names)
    rest = tuple(x for x in names if x != var)
    return Node(var, _tree(rng, rest, depth - 1, False), _tree(rng, rest, depth - 1, False))


def random_free_bdt(cfg: GenConfig, rng=None) -> BDT:
    rng = rng or cfg.rng()
    return _tree(rng, var_names(cfg.var_budget), cfg.depth_budget)


def _paths_to(t, pred):
    return [path for path, u in B.positions(t) if pred(u)]


def shannon_expand(t: BDT, path, var: str) -> BDT:
    """Equivalent tree testing ``var`` at ``path`` first (``var`` must be untested above)."""
    u = B.subtree(t, path)
    above = {t_var for t_var, _ in _path_vars(t, path)}
    if var in above:
        raise ValueError(f"{var} is already tested above {tuple(path)}")
    return B.replace_subtree(t, path, Node(var, B.restrict(u, var, 0), B.restrict(u, var, 1)))


def _path_vars(t, path):
    out = []
    for b in path:
        out.append((t.var, b))
        t = t.right if b else t.left
    return out


def _equivalent_tree(rng, t: BDT, names) -> BDT:
    spots = []
    for path, _ in B.positions(t):
        above = {x for x, _ in _path_vars(t, path)}
        spots += [(path, x) for x in names if x not in above]
    if not spots:
        return t
    path, var = rng.choice(spots)
    return shannon_expand(t, path, var)


def _flip_leaf(rng, t: BDT) -> BDT:
    path = rng.choice(_paths_to(t, lambda u: isinstance(u, Leaf)))
    return B.replace_subtree(t, path, B.leaf(1 - B.subtree(t, path).bit))


def _swap_children(t: BDT, path) -> BDT:
    u = B.subtree(t, path)
    return B.replace_subtree(t, path, Node(u.var, u.right, u.left))


def random_bdt_pair(cfg: GenConfig) -> tuple[BDT, BDT]:
    """A pair of free trees; about half are related by an equivalence or a single edit."""
    rng = cfg.rng()
    t = random_free_bdt(cfg, rng)
    names = var_names(cfg.var_budget)
    mode = rng.below(4)
    if mode == 0:
        return t, random_free_bdt(cfg, rng)
    if mode == 1:
        u = t
        for _ in range(1 + rng.below(3)):
            u = _equivalent_tree(rng, u, names)
        return t, u
    if mode == 2:
        return t, _flip_leaf(rng, _equivalent_tree(rng, t, names))
    # small independent trees collide often
    small = GenConfig(rng.next64(), min(cfg.var_budget, 2), min(cfg.depth_budget, 2))
    return random_free_bdt(small), random_free_bdt(GenConfig(rng.next64(), small.var_budget, small.depth_budget))


# -- proofs -----------------------------------------------------------------

def _exchange_spots(p: Proof):
    return [(path, len(q.conclusion.context)) for path, q in nodes(p) if len(q.conclusion.context) >= 2]


def identity_exchange_mutation(rng, p: Proof) -> Proof:
    spots = _exchange_spots(p)
    if not spots:
        return p
    path, n = rng.choice(spots)
    i = 1 + rng.below(n)
    j = 1 + rng.below(n - 1)
    if j >= i:
        j += 1
    return insert_identity_exchange(p, path, i, j)


def _node_dplus_paths(p: Proof):
    """Paths of encoder dplus nodes that come from tree nodes, in tree preorder."""
    return [
        path for path, q in nodes(p)
        if q.rule == "dplus" and not all(r.rule == "ax" for r in q.premises)
    ]


def intro_template(rng) -> tuple[Proof, Proof]:
    """``B + C |- A -o D`` by impR over ex over dplus, and its permuted form."""
    a, d, e = "a", "d", rng.choice(["d", "e"])
    A = Atom(a)
    B_, C_ = Imp(A, Atom(d)), Imp(A, Atom(e))
    D = Plus("y", Atom(d), Atom(e))
    pi = plus_l(D, imp_l(ax(a), ax(d)))
    if e == d and rng.coin():
        mu = plus_l(D, imp_l(ax(a), ax(e)))
    else:
        mu = plus_r(D, imp_l(ax(a), ax(e)))
    p = imp_r(ex(1, 2, dplus("x", pi, mu)))
    assert p.conclusion.context == (Plus("x", B_, C_),)
    return p, permute_impR_over_dplus(p)


def distributivity_template(rng) -> tuple[Proof, Proof]:
    """``impL(nu, dplus x P M)`` and its distributed form with ``nu`` copied."""
    if rng.coin():
        nu = imp_r(ax("c"))  # |- (c -o c)
    else:
        nu = ax("c")  # c |- c
    g = rng.choice(["f", "g"])
    C = Plus("y", Atom("f"), Atom(g))
    pi = plus_l(C, imp_l(ax("e"), ax("f")))
    if g == "f" and rng.coin():
        mu = plus_l(C, imp_l(ax("e"), ax(g)))
    else:
        mu = plus_r(C, imp_l(ax("e"), ax(g)))
    p = imp_l(nu, dplus("x", pi, mu))
    return p, distribute_impL_over_dplus(p)


def _symmetric_dplus(p: Proof):
    return [
        path for path, q in nodes(p)
        if q.rule == "dplus" and q.premises[0].conclusion.context[-1] == q.premises[1].conclusion.context[-1]
    ]


def equivalent_pair(cfg: GenConfig) -> tuple[Proof, Proof, bool]:
    """``(p, q, expected)`` where ``expected`` says whether ``p`` and ``q`` are equivalent.

    The base is either an encoded random tree or one of the two permutation
    templates.  Equivalence is kept by identity exchanges, by the template's
    permutation, or by an equivalent re-encoding; it is broken (or not, when
    the swapped branches agree) by one leaf flip or one dplus branch swap.
    """
    rng = cfg.rng()
    family = rng.below(4)
    names = var_names(cfg.var_budget)
    t = None
    if family < 2:
        t = random_free_bdt(cfg, rng)
        p = encode_bdt(cfg.var_budget, t, names)
    elif family == 2:
        p, permuted = intro_template(rng)
    else:
        p, permuted = distributivity_template(rng)
    if cfg.mutation_count == 0:
        return p, p, True

    rounds = cfg.mutation_count
    inject = rng.below(3) == 0
    expected = True
    if t is not None:
        u = t
        if inject:
            internal = _paths_to(t, lambda v: isinstance(v, Node))
            if internal and rng.coin():
                k = rng.below(len(internal))
                u = _swap_children(t, internal[k])
                q = swap_dplus_branches(p, _node_dplus_paths(p)[k])
            else:
                u = _flip_leaf(rng, t)
                q = encode_bdt(cfg.var_budget, u, names)
            expected = B.equiv_oracle(t, u)
            rounds -= 1
        else:
            tree_rounds = rng.below(rounds + 1)
            for _ in range(tree_rounds):
                u = _equivalent_tree(rng, u, names)
            rounds -= tree_rounds
            q = encode_bdt(cfg.var_budget, u, names) if tree_rounds else p
    else:
        q = permuted
        rounds -= 1
        spots = _symmetric_dplus(q)
        if inject and spots:
            path = rng.choice(spots)
            before = nodes_at(q, path)
            q = swap_dplus_branches(q, path)
            expected = before.premises[0] == before.premises[1]
    for _ in range(max(rounds, 0)):
        q = identity_exchange_mutation(rng, q)
    return p, q, expected


def nodes_at(p: Proof, path):
    for b in path:
        p = p.premises[b]
    return p


def proof_corpus(seed: int, count: int, var_budget=4, depth_budget=4, mutation_count=3):
    """``count`` generated triples with seeds derived from ``seed`` by SplitMix64."""
    out, state = [], seed & MASK
    for k in range(count):
        state, s = splitmix64(state)
        cfg = GenConfig(s, 1 + k % var_budget, depth_budget, 1 + (k // var_budget) % mutation_count)
        out.append(equivalent_pair(cfg))
    return out


# -- lines ------------------------------------------------------------------

def random_line(cfg: GenConfig) -> OrdInstance:
    n = cfg.var_budget
    if n < 4:
        raise ValueError("a line needs at least 4 vertices to place f and s away from its ends")
    rng = cfg.rng()
    order = rng.shuffle([f"v{k}" for k in range(1, n + 1)])
    interior = order[1:-1]
    f = rng.choice(interior)
    s = rng.choice([v for v in interior if v != f])
    return OrdInstance(LineGraph.from_order(order), f, s)


# -- classical proofs ----------------------------------------------------------

class _Labels:
    def __init__(self):
        self.k = 0

    def fresh(self, prefix):
        self.k += 1
        return f"{prefix}{self.k}"


def _mall(rng, depth, labels, atoms) -> MallProof:
    if depth == 0 or rng.below(5) == 0:
        return m_ax(rng.choice(atoms))
    op = rng.below(5)
    if op == 0:
        p = _mall(rng, depth - 1, labels, atoms)
        return m_par(p) if len(p.conclusion.formulas) >= 2 else p
    if op == 1:
        return m_tensor(_mall(rng, depth - 1, labels, atoms), _mall(rng, depth - 1, labels, atoms))
    if op == 2:
        p = _mall(rng, depth - 1, labels, atoms)
        a = p.conclusion.formulas[-1]
        if rng.coin():
            other = _rename_formula(a, {l: labels.fresh(l[0]) for l in a.labels})
        else:
            other = MAtom(rng.choice(atoms))
        if rng.coin():
            return m_plus_l(MPlus(labels.fresh("y"), a, other), p)
        return m_plus_r(MPlus(labels.fresh("y"), other, a), p)
    if op == 3:
        p = _mall(rng, depth - 1, labels, atoms)
        q = mall_variant(rng, p)
        fresh = {l: labels.fresh(l[0]) for l in q.conclusion.formulas[-1].labels}
        return m_with(labels.fresh("x"), p, rename_mall(q, fresh))
    p = _mall(rng, depth - 1, labels, atoms)
    n = len(p.conclusion.formulas)
    if n < 2:
        return p
    i = 1 + rng.below(n)
    j = 1 + rng.below(n - 1)
    return m_ex(i, j + (j >= i), p)


def mall_variant(rng, p: MallProof) -> MallProof:
    """Same conclusion; plus rules on ``A + A`` and branches of ``A & A`` may be flipped."""
    prem = [mall_variant(rng, q) for q in p.premises]
    r = p.rule
    if r == "ax":
        return p
    if r == "par":
        return m_par(prem[0])
    if r == "tensor":
        return m_tensor(*prem)
    if r in ("plusL", "plusR"):
        f = p.formula
        if f.left == f.right and rng.coin():
            r = "plusR" if r == "plusL" else "plusL"
        return (m_plus_l if r == "plusL" else m_plus_r)(f, prem[0])
    if r == "with":
        a, b = prem
        if a.conclusion.formulas[-1] == b.conclusion.formulas[-1] and rng.coin():
            a, b = b, a
        return m_with(p.label, a, b)
    return m_ex(*p.positions, prem[0])


def _rename_formula(f, m):
    if isinstance(f, (MAtom, MDual)):
        return f
    if isinstance(f, (MPlus, With)):
        return type(f)(m.get(f.label, f.label), _rename_formula(f.left, m), _rename_formula(f.right, m))
    return type(f)(_rename_formula(f.left, m), _rename_formula(f.right, m))


def rename_mall(p: MallProof, m: dict) -> MallProof:
    """Rename ``+`` and ``&`` labels throughout ``p``."""
    prem = [rename_mall(q, m) for q in p.premises]
    r = p.rule
    if r == "ax":
        return p
    if r == "par":
        return m_par(prem[0])
    if r == "tensor":
        return m_tensor(*prem)
    if r == "plusL":
        return m_plus_l(_rename_formula(p.formula, m), prem[0])
    if r == "plusR":
        return m_plus_r(_rename_formula(p.formula, m), prem[0])
    if r == "with":
        return m_with(m.get(p.label, p.label), *prem)
    return m_ex(*p.positions, prem[0])


def random_mall_proof(cfg: GenConfig, rng=None) -> MallProof:
    rng = rng or cfg.rng()
    return _mall(rng, cfg.depth_budget, _Labels(), ["a", "b"])


def mall_pair(cfg: GenConfig) -> tuple[MallProof, MallProof]:
    rng = cfg.rng()
    p = random_mall_proof(cfg, rng)
    return p, mall_variant(rng, p)
