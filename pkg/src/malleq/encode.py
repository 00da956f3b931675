"""Encoding of free BDTs as proofs of ``cont(n, {}) |- (b +[b0] b)``.

Variable ``x_k`` of the tree (``k = 1..n``) owns the atom ``a{k}``.  A point
of the tree whose root path has tested the variable set ``I`` is encoded by a
proof of ``cont(n, I)``, whose context lists the tested atoms ``a{k}`` in
ascending order, then ``(a{k} +[x_k] a{k})`` for every untested ``k`` in
ascending order, and finally ``a{n} -o ... -o a{1} -o b``.

The ``+`` labels are the tree's own variable names, so the BDT found on the
pair (``b`` of the implication tower, left ``b`` of the succedent) is the
input tree itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import bdt as B
from .bdt import BDT, Leaf, Node
from .core import LABEL_RE, Atom, Imp, Plus, Sequent
from .errors import MalleqError, NotFreeError
from .proof import Proof, ax, dplus, ex, imp_l, plus_l, plus_r
from .slicing import bdt_slicing

BETA = Atom("b")
RESERVED_LABEL = "b0"
BOOL = Plus(RESERVED_LABEL, BETA, BETA)


class EncodingError(MalleqError):
    pass


def alpha(k: int) -> Atom:
    return Atom(f"a{k}")


def tower(k: int):
    """``a{k} -o ... -o a{1} -o b``."""
    f = BETA
    for i in range(1, k + 1):
        f = Imp(alpha(i), f)
    return f


@dataclass(frozen=True)
class EncodingContext:
    n: int
    tested: frozenset = frozenset()  # indices 1..n
    names: tuple = field(default=())

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{k}" for k in range(1, self.n + 1)))

    def keys(self) -> list:
        """Symbolic layout of the context: ("a", k), ("p", k), then ("F", n)."""
        out = [("a", k) for k in sorted(self.tested)]
        out += [("p", k) for k in range(1, self.n + 1) if k not in self.tested]
        return out + [("F", self.n)]

    def formula(self, key):
        kind, k = key
        if kind == "a":
            return alpha(k)
        if kind == "p":
            return Plus(self.names[k - 1], alpha(k), alpha(k))
        return tower(k)

    def context(self) -> tuple:
        return tuple(self.formula(key) for key in self.keys())

    def sequent(self) -> Sequent:
        return Sequent(self.context(), BOOL)


def default_names(t: BDT, n: int) -> tuple[str, ...]:
    """First-occurrence preorder variable order, padded with fresh ``x{k}``."""
    names = []
    for _, u in B.positions(t):
        if isinstance(u, Node) and u.var not in names:
            names.append(u.var)
    k = 1
    while len(names) < n:
        if f"x{k}" not in names:
            names.append(f"x{k}")
        k += 1
    return tuple(names)


def free_vars_at(t: BDT, path) -> list[str]:
    """Variables tested on the way from the root to the point at ``path``."""
    out = []
    for b in path:
        if not isinstance(t, Node) or b not in (0, 1):
            raise EncodingError(f"invalid tree path {tuple(path)}")
        out.append(t.var)
        t = t.right if b else t.left
    return out


# -- exchange plumbing ------------------------------------------------------

def _rotate(p: Proof, order: list, src: int, dst: int) -> Proof:
    """Move the formula at 1-based ``src`` to ``dst`` by adjacent exchanges."""
    step = 1 if dst > src else -1
    for k in range(src, dst, step):
        p = ex(k, k + step, p)
        order[k - 1], order[k + step - 1] = order[k + step - 1], order[k - 1]
    return p


def _permute(p: Proof, order: list, target: list) -> Proof:
    """Reach ``target`` with at most ``len(target) - 1`` (non-adjacent) exchanges."""
    for q in range(len(target)):
        if order[q] != target[q]:
            r = order.index(target[q], q + 1)
            p = ex(q + 1, r + 1, p)
            order[q], order[r] = order[r], order[q]
    return p


# -- the encoding -----------------------------------------------------------

def _plus_k(x: str, k: int) -> Proof:
    return dplus(x, ax(f"a{k}"), ax(f"a{k}"))


def _leaf(ctx: EncodingContext, bit: int) -> Proof:
    p = plus_l(BOOL, ax("b")) if bit else plus_r(BOOL, ax("b"))
    order = [("F", 0)]
    for k in range(1, ctx.n + 1):
        if k > 1:
            p = ex(1, 2, p)
            order[0], order[1] = order[1], order[0]
        if k in ctx.tested:
            nu, key = ax(f"a{k}"), ("a", k)
        else:
            nu, key = _plus_k(ctx.names[k - 1], k), ("p", k)
        p = imp_l(nu, p)
        order = [key, ("F", k)] + order[1:]
    return _permute(p, order, ctx.keys())


def _encode(t: BDT, ctx: EncodingContext, index: dict) -> Proof:
    if isinstance(t, Leaf):
        return _leaf(ctx, t.bit)
    k = index[t.var]
    if k in ctx.tested:
        raise NotFreeError(f"variable {t.var!r} tested twice on a path")
    inner = EncodingContext(ctx.n, ctx.tested | {k}, ctx.names)
    m = ctx.n + 1
    branches = []
    for sub in (t.left, t.right):
        p = _encode(sub, inner, index)
        order = inner.keys()
        branches.append(_rotate(p, order, order.index(("a", k)) + 1, m))
    p = dplus(t.var, *branches)
    order = order[:-1] + [("p", k)]
    return _rotate(p, order, m, ctx.keys().index(("p", k)) + 1)


def encode_bdt(n: int, t: BDT, names=None) -> Proof:
    """Proof of ``cont(n, {}) |- (b +[b0] b)`` whose BDT slicing carries ``t``.

    ``names[k-1]`` is the tree variable playing ``x_k``; by default the
    tree's variables in first-occurrence preorder.
    """
    if not B.is_free(t):
        raise NotFreeError(f"tree is not free: {t}")
    names = tuple(default_names(t, n) if names is None else names)
    if len(names) != n or len(set(names)) != n:
        raise EncodingError(f"need {n} distinct variable names, got {names}")
    for x in names:
        if not LABEL_RE.fullmatch(x) or x == RESERVED_LABEL:
            raise EncodingError(f"variable name {x!r} cannot be used as a label")
    missing = B.variables(t) - set(names)
    if missing:
        raise EncodingError(f"variables {sorted(missing)} are outside x1..x{n}")
    index = {x: k for k, x in enumerate(names, start=1)}
    return _encode(t, EncodingContext(n, frozenset(), names), index)


# -- representation check ---------------------------------------------------

def occurrence_layout(n: int) -> dict:
    """Occurrence indices in ``cont(n, {}) |- (b +[b0] b)``."""
    layout = {"beta": 3 * n, "beta_l": 3 * n + 1, "beta_r": 3 * n + 2}
    for i in range(1, n + 1):
        layout[("alpha_l", i)] = 2 * (i - 1)
        layout[("alpha_r", i)] = 2 * (i - 1) + 1
        layout[("alpha_imp", i)] = 2 * n + (n - i)
    return layout


@dataclass
class RepresentationReport:
    checks: list = field(default_factory=list)  # (name, passed, detail)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def __str__(self):
        head = "ok" if self.ok else "failed"
        lines = [head] + [
            f"{'pass' if passed else 'FAIL'} {name}: {detail}" for name, passed, detail in self.checks
        ]
        return "\n".join(lines)


def check_representation(n: int, t: BDT, names=None) -> RepresentationReport:
    names = tuple(default_names(t, n) if names is None else names)
    proof = encode_bdt(n, t, names)
    bs = bdt_slicing(proof)
    lay = occurrence_layout(n)
    rep = RepresentationReport()
    got = bs[lay["beta"], lay["beta_l"]]
    rep.checks.append(("[b, b^l] == tree", got == t, str(got)))
    got = bs[lay["beta"], lay["beta_r"]]
    rep.checks.append(("[b, b^r] == negated tree", got == B.negate(t), str(got)))
    for i in range(1, n + 1):
        x = names[i - 1]
        for side, want in (("l", B.ite(x, B.ONE, B.ZERO)), ("r", B.ite(x, B.ZERO, B.ONE))):
            got = bs[lay[(f"alpha_{side}", i)], lay[("alpha_imp", i)]]
            rep.checks.append(
                (f"[a{i}^{side}, a{i}^-o] ~ {want}", B.equiv(got, want), str(got))
            )
    return rep
