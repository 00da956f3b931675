"""Proof trees of the intuitionistic calculus and their rule checker.

Rules (premises above, conclusion below)::

    ax a        a |- a
    impR        G, A |- B                    =>  G |- (A -o B)
    impL        G |- A  and  B, D |- C       =>  G, (A -o B), D |- C
    ex i j      G |- C                       =>  G with positions i, j swapped |- C
    plusL F     G |- A                       =>  G |- F        where F = (A +[y] B)
    plusR F     G |- B                       =>  G |- F
    dplus x     G, A |- C  and  G, B |- C    =>  G, (A +[x] B) |- C

Every node stores its conclusion.  The constructors below infer it on the
spot when all premises already carry theirs, so trees assembled from checked
parts are checked as they are built.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Iterator

from ._lexer import Lexer
from .core import (
    ATOM_RE,
    LABEL_RE,
    Atom,
    Formula,
    Imp,
    LabelCollision,
    Plus,
    Sequent,
    read_formula,
)
from .errors import ProofError, ShapeMismatch

RULES = ("ax", "impR", "impL", "ex", "plusL", "plusR", "dplus")
_ARITY = {"ax": 0, "impR": 1, "impL": 2, "ex": 1, "plusL": 1, "plusR": 1, "dplus": 2}


@dataclass(frozen=True)
class Proof:
    rule: str
    premises: tuple[Proof, ...] = ()
    atom: str | None = None
    label: str | None = None
    formula: Formula | None = None
    positions: tuple[int, int] | None = None
    conclusion: Sequent | None = field(default=None, compare=False, repr=False)

    def __str__(self):
        return show_proof(self)

    # -- interface used by the slicing interpreters --------------------

    @property
    def clause(self) -> str:
        return {
            "ax": "axiom",
            "impL": "split",
            "dplus": "branch",
        }.get(self.rule, "pass")

    def embedding(self, slot: int) -> tuple[int, ...]:
        """Conclusion index of every premise occurrence for premise ``slot``."""
        return _embedding(self, slot)

    def branch_sides(self) -> tuple[range, range]:
        """Conclusion indices of the left and right disjunct introduced by dplus."""
        s = self.conclusion
        start = s.offsets[len(s.context) - 1]
        plus = s.context[-1]
        mid = start + len(plus.left.atoms)
        return range(start, mid), range(mid, mid + len(plus.right.atoms))


# -- constructors ---------------------------------------------------------

def _node(rule, premises=(), **kw):
    p = Proof(rule, tuple(premises), **kw)
    if all(q.conclusion is not None for q in p.premises):
        p = replace(p, conclusion=_conclude(p, [q.conclusion for q in p.premises]))
    return p


def ax(atom: str) -> Proof:
    return _node("ax", atom=atom)


def imp_r(p: Proof) -> Proof:
    return _node("impR", (p,))


def imp_l(p: Proof, q: Proof) -> Proof:
    return _node("impL", (p, q))


def ex(i: int, j: int, p: Proof) -> Proof:
    return _node("ex", (p,), positions=(i, j))


def plus_l(f: Formula, p: Proof) -> Proof:
    return _node("plusL", (p,), formula=f)


def plus_r(f: Formula, p: Proof) -> Proof:
    return _node("plusR", (p,), formula=f)


def dplus(label: str, p: Proof, q: Proof) -> Proof:
    return _node("dplus", (p, q), label=label)


# -- rule clauses ---------------------------------------------------------

def _checked(seq, path):
    try:
        return seq.validate()
    except LabelCollision as e:
        raise ProofError(f"label collision: {e}", path) from None


def _conclude(p: Proof, prem: list[Sequent], path=()) -> Sequent:
    """Conclusion of node ``p`` given its premises' conclusions (local check only)."""
    rule = p.rule
    if rule not in _ARITY:
        raise ProofError(f"unknown rule {rule!r}", path)
    if len(prem) != _ARITY[rule]:
        raise ProofError(f"{rule} expects {_ARITY[rule]} premises, got {len(prem)}", path)

    if rule == "ax":
        if not isinstance(p.atom, str) or not ATOM_RE.fullmatch(p.atom):
            raise ProofError(f"axiom must be on an atom, got {p.atom!r}", path)
        return Sequent((Atom(p.atom),), Atom(p.atom))

    if rule == "impR":
        (s,) = prem
        if not s.context:
            raise ProofError("impR: premise context is empty, no formula to discharge", path)
        return _checked(Sequent(s.context[:-1], Imp(s.context[-1], s.succedent)), path)

    if rule == "impL":
        left, right = prem
        if not right.context:
            raise ProofError("impL: right premise must have B as first context formula", path)
        a, b = left.succedent, right.context[0]
        ctx = left.context + (Imp(a, b),) + right.context[1:]
        return _checked(Sequent(ctx, right.succedent), path)

    if rule == "ex":
        (s,) = prem
        if p.positions is None or len(p.positions) != 2:
            raise ProofError("ex needs two positions", path)
        i, j = p.positions
        n = len(s.context)
        for k in (i, j):
            if not isinstance(k, int) or not 1 <= k <= n:
                raise ProofError(
                    f"exchange index {k} out of range (context has {n} formula{'s' * (n != 1)})",
                    path,
                )
        if i == j:
            raise ProofError(f"exchange positions must differ, got ({i},{j})", path)
        ctx = list(s.context)
        ctx[i - 1], ctx[j - 1] = ctx[j - 1], ctx[i - 1]
        return Sequent(tuple(ctx), s.succedent)

    if rule in ("plusL", "plusR"):
        (s,) = prem
        f = p.formula
        if not isinstance(f, Plus):
            raise ProofError(f"{rule}: result formula must be a '+' formula, got {f}", path)
        kept = f.left if rule == "plusL" else f.right
        if s.succedent != kept:
            side = "left" if rule == "plusL" else "right"
            raise ProofError(
                f"{rule}: premise succedent {s.succedent} is not the {side} disjunct of {f}",
                path,
            )
        return _checked(Sequent(s.context, f), path)

    # dplus
    left, right = prem
    x = p.label
    if not isinstance(x, str) or not LABEL_RE.fullmatch(x):
        raise ProofError(f"dplus: invalid label {x!r}", path)
    if not left.context or not right.context:
        raise ProofError("dplus: premises need a last context formula", path)
    if left.context[:-1] != right.context[:-1]:
        raise ProofError(
            "dplus: context mismatch between premises "
            f"({', '.join(map(str, left.context[:-1]))} vs {', '.join(map(str, right.context[:-1]))})",
            path,
        )
    if left.succedent != right.succedent:
        raise ProofError(
            f"dplus: succedent mismatch ({left.succedent} vs {right.succedent})", path
        )
    a, b = left.context[-1], right.context[-1]
    concl = Sequent(left.context[:-1] + (Plus(x, a, b),), left.succedent)
    if x in left.labels() or x in right.labels():
        raise ProofError(f"dplus: label collision, {x!r} is not fresh", path)
    return _checked(concl, path)


def infer_conclusion(p: Proof, _path=()) -> Proof:
    """Rebuild ``p`` with every node's conclusion inferred bottom-up."""
    prem = tuple(infer_conclusion(q, _path + (k,)) for k, q in enumerate(p.premises))
    if len(prem) != _ARITY.get(p.rule, -1):
        raise ProofError(f"{p.rule} expects {_ARITY.get(p.rule)} premises, got {len(prem)}", _path)
    concl = _conclude(p, [q.conclusion for q in prem], _path)
    return replace(p, premises=prem, conclusion=concl)


def check_proof(p: Proof, _path=()) -> Sequent:
    """Raise :class:`ProofError` unless every node is a correct rule instance.

    Returns the root conclusion.
    """
    for k, q in enumerate(p.premises):
        check_proof(q, _path + (k,))
    if p.conclusion is None:
        raise ProofError("missing stored conclusion", _path)
    inferred = _conclude(p, [q.conclusion for q in p.premises], _path)
    if inferred != p.conclusion:
        raise ProofError(
            f"stored conclusion {p.conclusion} differs from inferred {inferred}", _path
        )
    return p.conclusion


def is_well_formed(p: Proof) -> bool:
    try:
        check_proof(p)
    except ProofError:
        return False
    return True


# -- occurrence embeddings ------------------------------------------------

def _embedding(p: Proof, slot: int) -> tuple[int, ...]:
    if not 0 <= slot < len(p.premises):
        raise IndexError(f"{p.rule} has no premise slot {slot}")
    prem = p.premises[slot].conclusion
    concl = p.conclusion
    k = prem.size
    rule = p.rule

    if rule in ("impR", "plusL"):
        return tuple(range(k))
    if rule == "impL":
        if slot == 0:
            return tuple(range(k))
        shift = p.premises[0].conclusion.size
        return tuple(range(shift, shift + k))
    if rule == "plusR":
        cut = prem.offsets[-2]
        shift = len(p.formula.left.atoms)
        return tuple(i if i < cut else i + shift for i in range(k))
    if rule == "ex":
        i, j = p.positions
        sigma = list(range(len(prem.context) + 1))
        sigma[i - 1], sigma[j - 1] = j - 1, i - 1
        out = []
        for pos in range(len(prem.formulas)):
            start, stop = prem.offsets[pos], prem.offsets[pos + 1]
            target = concl.offsets[sigma[pos]]
            out.extend(range(target, target + stop - start))
        return tuple(out)
    if rule == "dplus":
        last = prem.offsets[-3]  # start of the discharged disjunct
        plus = concl.context[-1]
        na, nb = len(plus.left.atoms), len(plus.right.atoms)
        succ = prem.offsets[-2]
        if slot == 0:
            return tuple(i if i < succ else i + nb for i in range(k))
        return tuple(i if i < last else i + na for i in range(k))
    raise ValueError(f"{rule} has no premises")


def subproof(p: Proof, path) -> Proof:
    for k in path:
        if not 0 <= k < len(p.premises):
            raise ShapeMismatch(f"invalid node path {tuple(path)}")
        p = p.premises[k]
    return p


def premise_embedding(p: Proof, path, slot: int) -> tuple[int, ...]:
    node = subproof(p, path)
    if not 0 <= slot < len(node.premises):
        raise ShapeMismatch(f"node {tuple(path)} ({node.rule}) has no premise slot {slot}")
    if node.conclusion is None:
        node = infer_conclusion(node)
    return _embedding(node, slot)


def replace_at(p: Proof, path, new: Proof) -> Proof:
    path = tuple(path)
    if not path:
        return new
    k = path[0]
    if not 0 <= k < len(p.premises):
        raise ShapeMismatch(f"invalid node path {path}")
    prem = list(p.premises)
    prem[k] = replace_at(prem[k], path[1:], new)
    return _node(p.rule, prem, atom=p.atom, label=p.label, formula=p.formula,
                 positions=p.positions)


def nodes(p: Proof, path=()) -> Iterator[tuple[tuple[int, ...], Proof]]:
    """Preorder walk yielding ``(path, node)``."""
    stack = [(path, p)]
    while stack:
        path, q = stack.pop()
        yield path, q
        for k in reversed(range(len(q.premises))):
            stack.append((path + (k,), q.premises[k]))


def node_count(p: Proof) -> int:
    return sum(1 for _ in nodes(p))


# -- equivalence-preserving rewrites -----------------------------------------

def permute_impR_over_dplus(p: Proof) -> Proof:
    """``impR(ex 1 2 (dplus x P M))``  ->  ``dplus x (impR(ex 1 2 P)) (impR(ex 1 2 M))``."""
    if p.rule != "impR" or p.premises[0].rule != "ex":
        raise ShapeMismatch("expected impR over ex 1 2 over dplus")
    e = p.premises[0]
    d = e.premises[0]
    if sorted(e.positions) != [1, 2] or d.rule != "dplus":
        raise ShapeMismatch("expected impR over ex 1 2 over dplus")
    if len(d.conclusion.context) != 2:
        raise ShapeMismatch("the dplus conclusion must have exactly two context formulas")
    pi, mu = d.premises
    return dplus(d.label, imp_r(ex(1, 2, pi)), imp_r(ex(1, 2, mu)))


def distribute_impL_over_dplus(p: Proof) -> Proof:
    """``impL N (dplus x P M)``  ->  ``dplus x (impL N P) (impL N M)``; N is copied."""
    if p.rule != "impL" or p.premises[1].rule != "dplus":
        raise ShapeMismatch("expected impL whose right premise is a dplus")
    nu, d = p.premises
    if len(d.conclusion.context) < 2:
        raise ShapeMismatch("the discharged formula of impL is the '+' formula itself")
    pi, mu = d.premises
    return dplus(d.label, imp_l(nu, pi), imp_l(nu, mu))


def insert_identity_exchange(p: Proof, path, i: int, j: int) -> Proof:
    node = subproof(p, path)
    n = len(node.conclusion.context)
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ShapeMismatch(f"cannot exchange positions ({i},{j}) in a context of {n}")
    return replace_at(p, path, ex(i, j, ex(i, j, node)))


def swap_dplus_branches(p: Proof, path) -> Proof:
    node = subproof(p, path)
    if node.rule != "dplus":
        raise ShapeMismatch(f"node {tuple(path)} is {node.rule}, not dplus")
    pi, mu = node.premises
    a, b = pi.conclusion.context[-1], mu.conclusion.context[-1]
    if a != b:
        raise ShapeMismatch(f"swapped proof would be ill-formed: disjuncts {a} and {b} differ")
    return replace_at(p, path, dplus(node.label, mu, pi))


# -- text format ------------------------------------------------------------

_NAT = re.compile(r"[0-9]+")


def read_proof(lx: Lexer) -> Proof:
    lx.expect("(")
    _, rule, pos = lx.peek()
    rule = lx.word("rule name")
    if rule == "ax":
        node = Proof("ax", atom=lx.word("atom", ATOM_RE))
    elif rule in ("impR",):
        node = Proof(rule, (read_proof(lx),))
    elif rule == "impL":
        node = Proof(rule, (read_proof(lx), read_proof(lx)))
    elif rule == "ex":
        i, j = lx.nat(), lx.nat()
        node = Proof(rule, (read_proof(lx),), positions=(i, j))
    elif rule in ("plusL", "plusR"):
        f = read_formula(lx)
        node = Proof(rule, (read_proof(lx),), formula=f)
    elif rule == "dplus":
        x = lx.word("label", LABEL_RE)
        node = Proof(rule, (read_proof(lx), read_proof(lx)), label=x)
    else:
        lx.error(f"unknown rule {rule!r}", pos)
    lx.expect(")")
    return node


def parse_proof(text: str, source=None, infer=True) -> Proof:
    """Parse the s-expression proof format; by default also infer conclusions."""
    lx = Lexer(text, source)
    p = read_proof(lx)
    lx.end()
    return infer_conclusion(p) if infer else p


def show_proof(p: Proof) -> str:
    out = []

    def go(q):
        out.append(f"({q.rule}")
        if q.rule == "ax":
            out.append(f" {q.atom}")
        elif q.rule == "ex":
            out.append(f" {q.positions[0]} {q.positions[1]}")
        elif q.rule in ("plusL", "plusR"):
            out.append(f" {q.formula}")
        elif q.rule == "dplus":
            out.append(f" {q.label}")
        for r in q.premises:
            out.append(" ")
            go(r)
        out.append(")")

    go(p)
    return "".join(out)
