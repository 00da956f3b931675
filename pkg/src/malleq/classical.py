"""The one-sided classical calculus: atoms, dual atoms, ``*``, ``@``, ``+``, ``&``.

Rules::

    ax a         |- ~a, a
    par          |- G, A, B               =>  |- G, (A @ B)
    tensor       |- G, A  and  |- D, B    =>  |- G, D, (A * B)
    plusL F      |- G, A                  =>  |- G, F        F = (A +[y] B)
    plusR F      |- G, B                  =>  |- G, F
    with x       |- G, A  and  |- G, B    =>  |- G, (A &[x] B)
    ex i j       |- G                     =>  |- G with positions i, j swapped

``&`` labels are the decision variables.  ``+`` labels are required by the
grammar but carry no meaning.  Nodes expose the same slicing interface as the
intuitionistic proofs, so :mod:`malleq.slicing` interprets both.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property

from ._lexer import Lexer
from .core import ATOM_RE, LABEL_RE
from .equiv import ConclusionMismatch, EquivVerdict, slicing_equiv
from .errors import ProofError
from .slicing import bdt_slicing, slicing


@dataclass(frozen=True)
class MAtom:
    name: str

    def __str__(self):
        return self.name

    @cached_property
    def atoms(self):
        return (self.name,)

    labels = ()


@dataclass(frozen=True)
class MDual:
    name: str

    def __str__(self):
        return f"~{self.name}"

    @cached_property
    def atoms(self):
        return ("~" + self.name,)

    labels = ()


@dataclass(frozen=True)
class _Binary:
    left: object
    right: object

    @cached_property
    def atoms(self):
        return self.left.atoms + self.right.atoms

    @cached_property
    def labels(self):
        return self.left.labels + self.right.labels


@dataclass(frozen=True)
class Tensor(_Binary):
    def __str__(self):
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Par(_Binary):
    def __str__(self):
        return f"({self.left} @ {self.right})"


@dataclass(frozen=True)
class MPlus:
    label: str
    left: object
    right: object

    def __str__(self):
        return f"({self.left} +[{self.label}] {self.right})"

    atoms = _Binary.atoms

    @cached_property
    def labels(self):
        return (self.label,) + self.left.labels + self.right.labels


@dataclass(frozen=True)
class With:
    label: str
    left: object
    right: object

    def __str__(self):
        return f"({self.left} &[{self.label}] {self.right})"

    atoms = _Binary.atoms
    labels = MPlus.labels


MallFormula = MAtom | MDual | Tensor | Par | MPlus | With


@dataclass(frozen=True)
class MallSequent:
    formulas: tuple

    def __post_init__(self):
        object.__setattr__(self, "formulas", tuple(self.formulas))

    def __str__(self):
        return "|- " + ", ".join(map(str, self.formulas))

    @cached_property
    def offsets(self):
        out = [0]
        for f in self.formulas:
            out.append(out[-1] + len(f.atoms))
        return tuple(out)

    @property
    def size(self):
        return self.offsets[-1]

    def labels(self):
        return tuple(l for f in self.formulas for l in f.labels)


def with_labels(s: MallSequent) -> set[str]:
    out = set()

    def go(f):
        if isinstance(f, With):
            out.add(f.label)
        if hasattr(f, "left"):
            go(f.left)
            go(f.right)

    for f in s.formulas:
        go(f)
    return out


# -- proofs ---------------------------------------------------------------

_ARITY = {"ax": 0, "par": 1, "tensor": 2, "plusL": 1, "plusR": 1, "with": 2, "ex": 1}


@dataclass(frozen=True)
class MallProof:
    rule: str
    premises: tuple = ()
    atom: str | None = None
    label: str | None = None
    formula: object = None
    positions: tuple | None = None
    conclusion: MallSequent | None = field(default=None, compare=False, repr=False)

    def __str__(self):
        return show_mall_proof(self)

    @property
    def clause(self):
        return {"ax": "axiom", "tensor": "split", "with": "branch"}.get(self.rule, "pass")

    def embedding(self, slot):
        prem = self.premises[slot].conclusion
        k = prem.size
        rule = self.rule
        if rule in ("par", "plusL") or (rule == "with" and slot == 0):
            return tuple(range(k))
        last = prem.offsets[-2]
        if rule == "plusR":
            return tuple(i if i < last else i + len(self.formula.left.atoms) for i in range(k))
        if rule == "with":
            shift = len(self.conclusion.formulas[-1].left.atoms)
            return tuple(i if i < last else i + shift for i in range(k))
        if rule == "tensor":
            g = self.premises[0].conclusion.offsets[-2]
            d = self.premises[1].conclusion.offsets[-2]
            a = self.premises[0].conclusion.size - g
            if slot == 0:
                return tuple(i if i < g else i + d for i in range(k))
            return tuple(i + g if i < d else i + g + a for i in range(k))
        if rule == "ex":
            i, j = self.positions
            concl = self.conclusion
            sigma = list(range(len(prem.formulas)))
            sigma[i - 1], sigma[j - 1] = j - 1, i - 1
            out = []
            for pos in range(len(prem.formulas)):
                target = concl.offsets[sigma[pos]]
                out.extend(range(target, target + prem.offsets[pos + 1] - prem.offsets[pos]))
            return tuple(out)
        raise ValueError(f"{rule} has no premises")

    def branch_sides(self):
        s = self.conclusion
        start = s.offsets[-2]
        w = s.formulas[-1]
        mid = start + len(w.left.atoms)
        return range(start, mid), range(mid, mid + len(w.right.atoms))


def _checked(s: MallSequent, path):
    seen = set()
    for l in s.labels():
        if l in seen:
            raise ProofError(f"label collision: {l!r} occurs twice in {s}", path)
        seen.add(l)
    return s


def _conclude(p: MallProof, prem, path=()) -> MallSequent:
    rule = p.rule
    if rule not in _ARITY:
        raise ProofError(f"unknown rule {rule!r}", path)
    if len(prem) != _ARITY[rule]:
        raise ProofError(f"{rule} expects {_ARITY[rule]} premises, got {len(prem)}", path)
    if rule == "ax":
        if not isinstance(p.atom, str) or not ATOM_RE.fullmatch(p.atom):
            raise ProofError(f"axiom must be on an atom, got {p.atom!r}", path)
        return MallSequent((MDual(p.atom), MAtom(p.atom)))
    if rule == "par":
        (s,) = prem
        if len(s.formulas) < 2:
            raise ProofError("par needs two formulas to fuse", path)
        return MallSequent(s.formulas[:-2] + (Par(s.formulas[-2], s.formulas[-1]),))
    if rule == "tensor":
        l, r = prem
        if not l.formulas or not r.formulas:
            raise ProofError("tensor: premises need a last formula", path)
        f = Tensor(l.formulas[-1], r.formulas[-1])
        return _checked(MallSequent(l.formulas[:-1] + r.formulas[:-1] + (f,)), path)
    if rule in ("plusL", "plusR"):
        (s,) = prem
        f = p.formula
        if not isinstance(f, MPlus):
            raise ProofError(f"{rule}: result formula must be a '+' formula, got {f}", path)
        kept = f.left if rule == "plusL" else f.right
        if not s.formulas or s.formulas[-1] != kept:
            side = "left" if rule == "plusL" else "right"
            raise ProofError(f"{rule}: last premise formula is not the {side} disjunct of {f}", path)
        return _checked(MallSequent(s.formulas[:-1] + (f,)), path)
    if rule == "with":
        l, r = prem
        x = p.label
        if not isinstance(x, str) or not LABEL_RE.fullmatch(x):
            raise ProofError(f"with: invalid label {x!r}", path)
        if not l.formulas or not r.formulas:
            raise ProofError("with: premises need a last formula", path)
        if l.formulas[:-1] != r.formulas[:-1]:
            raise ProofError("with: context mismatch between premises", path)
        if x in l.labels() or x in r.labels():
            raise ProofError(f"with: label collision, {x!r} is not fresh", path)
        f = With(x, l.formulas[-1], r.formulas[-1])
        return _checked(MallSequent(l.formulas[:-1] + (f,)), path)
    (s,) = prem
    if p.positions is None or len(p.positions) != 2:
        raise ProofError("ex needs two positions", path)
    i, j = p.positions
    n = len(s.formulas)
    for k in (i, j):
        if not isinstance(k, int) or not 1 <= k <= n:
            raise ProofError(f"exchange index {k} out of range (sequent has {n} formulas)", path)
    if i == j:
        raise ProofError(f"exchange positions must differ, got ({i},{j})", path)
    fs = list(s.formulas)
    fs[i - 1], fs[j - 1] = fs[j - 1], fs[i - 1]
    return MallSequent(tuple(fs))


def _node(rule, premises=(), **kw):
    p = MallProof(rule, tuple(premises), **kw)
    if all(q.conclusion is not None for q in p.premises):
        p = replace(p, conclusion=_conclude(p, [q.conclusion for q in p.premises]))
    return p


def m_ax(a):
    return _node("ax", atom=a)


def m_par(p):
    return _node("par", (p,))


def m_tensor(p, q):
    return _node("tensor", (p, q))


def m_plus_l(f, p):
    return _node("plusL", (p,), formula=f)


def m_plus_r(f, p):
    return _node("plusR", (p,), formula=f)


def m_with(x, p, q):
    return _node("with", (p, q), label=x)


def m_ex(i, j, p):
    return _node("ex", (p,), positions=(i, j))


def infer_mall_conclusion(p: MallProof, _path=()) -> MallProof:
    prem = tuple(infer_mall_conclusion(q, _path + (k,)) for k, q in enumerate(p.premises))
    return replace(p, premises=prem, conclusion=_conclude(p, [q.conclusion for q in prem], _path))


def check_mall_proof(p: MallProof, _path=()) -> MallSequent:
    for k, q in enumerate(p.premises):
        check_mall_proof(q, _path + (k,))
    if p.conclusion is None:
        raise ProofError("missing stored conclusion", _path)
    inferred = _conclude(p, [q.conclusion for q in p.premises], _path)
    if inferred != p.conclusion:
        raise ProofError(f"stored conclusion {p.conclusion} differs from inferred {inferred}", _path)
    return p.conclusion


def mall_bdt_slicing(p: MallProof):
    return bdt_slicing(p)


def mall_slicing(p: MallProof, max_slices=None):
    return slicing(p, max_slices)


def _same(p, q):
    check_mall_proof(p)
    check_mall_proof(q)
    if p.conclusion != q.conclusion:
        raise ConclusionMismatch(f"conclusions differ: {p.conclusion} vs {q.conclusion}")


def mall_equiv(p: MallProof, q: MallProof) -> EquivVerdict:
    _same(p, q)
    return slicing_equiv(bdt_slicing(p), bdt_slicing(q))


def mall_equiv_oracle(p: MallProof, q: MallProof, max_slices=None) -> bool:
    _same(p, q)
    return slicing(p, max_slices) == slicing(q, max_slices)


# -- text formats -----------------------------------------------------------

def read_mall_formula(lx: Lexer):
    if lx.at("~"):
        lx.next()
        return MDual(lx.word("atom", ATOM_RE))
    if not lx.at("("):
        return MAtom(lx.word("atom", ATOM_RE))
    lx.next()
    left = read_mall_formula(lx)
    kind, op, pos = lx.next()
    if op in ("*", "@"):
        right = read_mall_formula(lx)
        lx.expect(")")
        return Tensor(left, right) if op == "*" else Par(left, right)
    if op in ("+", "&"):
        if not lx.at("["):
            lx.error(f"missing label: '{op}' must be followed by '[label]'")
        lx.next()
        label = lx.word("label", LABEL_RE)
        lx.expect("]")
        right = read_mall_formula(lx)
        lx.expect(")")
        return MPlus(label, left, right) if op == "+" else With(label, left, right)
    lx.error(f"expected '*', '@', '+[' or '&[', found {op or 'end of input'!r}", pos)


def parse_mall_formula(text, source=None):
    lx = Lexer(text, source)
    f = read_mall_formula(lx)
    lx.end()
    return f


def parse_mall_sequent(text, source=None) -> MallSequent:
    lx = Lexer(text, source)
    lx.expect("|-")
    fs = [read_mall_formula(lx)]
    while lx.at(","):
        lx.next()
        fs.append(read_mall_formula(lx))
    lx.end()
    return _checked(MallSequent(tuple(fs)), ())


def read_mall_proof(lx: Lexer) -> MallProof:
    lx.expect("(")
    pos = lx.peek()[2]
    rule = lx.word("rule name")
    if rule == "ax":
        node = MallProof("ax", atom=lx.word("atom", ATOM_RE))
    elif rule == "par":
        node = MallProof(rule, (read_mall_proof(lx),))
    elif rule == "tensor":
        node = MallProof(rule, (read_mall_proof(lx), read_mall_proof(lx)))
    elif rule in ("plusL", "plusR"):
        f = read_mall_formula(lx)
        node = MallProof(rule, (read_mall_proof(lx),), formula=f)
    elif rule == "with":
        x = lx.word("label", LABEL_RE)
        node = MallProof(rule, (read_mall_proof(lx), read_mall_proof(lx)), label=x)
    elif rule == "ex":
        i, j = lx.nat(), lx.nat()
        node = MallProof(rule, (read_mall_proof(lx),), positions=(i, j))
    else:
        lx.error(f"unknown rule {rule!r}", pos)
    lx.expect(")")
    return node


def parse_mall_proof(text, source=None, infer=True) -> MallProof:
    lx = Lexer(text, source)
    p = read_mall_proof(lx)
    lx.end()
    return infer_mall_conclusion(p) if infer else p


def show_mall_proof(p: MallProof) -> str:
    head = {
        "ax": lambda q: f" {q.atom}",
        "ex": lambda q: f" {q.positions[0]} {q.positions[1]}",
        "plusL": lambda q: f" {q.formula}",
        "plusR": lambda q: f" {q.formula}",
        "with": lambda q: f" {q.label}",
    }.get(p.rule, lambda q: "")(p)
    return f"({p.rule}{head}" + "".join(" " + show_mall_proof(q) for q in p.premises) + ")"
