"""Formulas and sequents of the intuitionistic calculus, with atom-occurrence indexing.

Every ``+`` carries a label.  Only labels of ``+`` occurrences in negative
position (the antecedent side, flipped by the left of ``-o``) are ever used as
decision variables; succedent labels are kept for uniformity of the grammar.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from ._lexer import Lexer
from .errors import MalleqError

ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")
LABEL_RE = re.compile(r"[a-zA-Z0-9_]+")


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name

    @cached_property
    def atoms(self) -> tuple[str, ...]:
        return (self.name,)

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return ()


@dataclass(frozen=True)
class Imp:
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} -o {self.right})"

    @cached_property
    def atoms(self):
        return self.left.atoms + self.right.atoms

    @cached_property
    def labels(self):
        return self.left.labels + self.right.labels


@dataclass(frozen=True)
class Plus:
    label: str
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} +[{self.label}] {self.right})"

    @cached_property
    def atoms(self):
        return self.left.atoms + self.right.atoms

    @cached_property
    def labels(self):
        return (self.label,) + self.left.labels + self.right.labels


Formula = Atom | Imp | Plus


class LabelCollision(MalleqError):
    pass


@dataclass(frozen=True)
class Sequent:
    context: tuple[Formula, ...]
    succedent: Formula

    def __post_init__(self):
        object.__setattr__(self, "context", tuple(self.context))

    def __str__(self):
        ctx = ", ".join(map(str, self.context))
        return f"{ctx} |- {self.succedent}" if ctx else f"|- {self.succedent}"

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return self.context + (self.succedent,)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        """Start index of each context formula, then of the succedent, then the total."""
        out = [0]
        for f in self.formulas:
            out.append(out[-1] + len(f.atoms))
        return tuple(out)

    @property
    def size(self) -> int:
        return self.offsets[-1]

    def labels(self) -> tuple[str, ...]:
        return tuple(l for f in self.formulas for l in f.labels)

    def validate(self):
        seen = set()
        for label in self.labels():
            if label in seen:
                raise LabelCollision(f"label {label!r} occurs twice in {self}")
            seen.add(label)
        return self


class Occurrence(NamedTuple):
    index: int
    atom: str
    position: int  # 1-based context position, 0 for the succedent
    path: tuple[str, ...]  # "l"/"r" steps inside the formula


def formula_occurrences(f: Formula, path=()):
    """Yield ``(atom, path)`` depth-first, left to right."""
    if isinstance(f, Atom):
        yield f.name, path
    else:
        yield from formula_occurrences(f.left, path + ("l",))
        yield from formula_occurrences(f.right, path + ("r",))


def occurrences(s: Sequent) -> list[Occurrence]:
    out = []
    slots = [(i + 1, f) for i, f in enumerate(s.context)] + [(0, s.succedent)]
    for position, f in slots:
        for atom, path in formula_occurrences(f):
            out.append(Occurrence(len(out), atom, position, path))
    return out


def _collect_plus(f, positive, acc):
    if isinstance(f, Imp):
        _collect_plus(f.left, not positive, acc)
        _collect_plus(f.right, positive, acc)
    elif isinstance(f, Plus):
        if not positive:
            acc.add(f.label)
        _collect_plus(f.left, positive, acc)
        _collect_plus(f.right, positive, acc)


def negative_plus_labels(s: Sequent) -> set[str]:
    acc: set[str] = set()
    for f in s.context:
        _collect_plus(f, False, acc)
    _collect_plus(s.succedent, True, acc)
    return acc


def plus_sides(s: Sequent, label: str) -> tuple[range, range]:
    """Occurrence index ranges of the two disjuncts of the ``+`` labelled ``label``."""

    def find(f, start):
        if isinstance(f, Atom):
            return None
        if isinstance(f, Plus) and f.label == label:
            mid = start + len(f.left.atoms)
            return range(start, mid), range(mid, mid + len(f.right.atoms))
        return find(f.left, start) or find(f.right, start + len(f.left.atoms))

    for f, start in zip(s.formulas, s.offsets):
        hit = find(f, start)
        if hit:
            return hit
    raise KeyError(label)


def formula_ranges(s: Sequent) -> list[range]:
    """Occurrence index range of every formula, context first, succedent last."""
    return [range(a, b) for a, b in zip(s.offsets, s.offsets[1:])]


def canonical_pair(i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise ValueError(f"a pair needs two distinct occurrences, got ({i},{j})")
    return (i, j) if i < j else (j, i)


# --- parsing ---------------------------------------------------------------

def read_formula(lx: Lexer) -> Formula:
    if lx.at("("):
        lx.next()
        left = read_formula(lx)
        if lx.at("-o"):
            lx.next()
            right = read_formula(lx)
            lx.expect(")")
            return Imp(left, right)
        if lx.at("+"):
            lx.next()
            if not lx.at("["):
                lx.error("missing label: '+' must be followed by '[label]'")
            lx.next()
            label = lx.word("label", LABEL_RE)
            lx.expect("]")
            right = read_formula(lx)
            lx.expect(")")
            return Plus(label, left, right)
        lx.error("expected '-o' or '+['")
    return Atom(lx.word("atom", ATOM_RE))


def read_sequent(lx: Lexer) -> Sequent:
    context = []
    if not lx.at("|-"):
        context.append(read_formula(lx))
        while lx.at(","):
            lx.next()
            context.append(read_formula(lx))
    lx.expect("|-")
    succ = read_formula(lx)
    return Sequent(tuple(context), succ)


def parse_formula(text: str, source=None) -> Formula:
    lx = Lexer(text, source)
    f = read_formula(lx)
    lx.end()
    return f


def parse_sequent(text: str, source=None) -> Sequent:
    lx = Lexer(text, source)
    s = read_sequent(lx)
    lx.end()
    return s.validate()


def show_formula(f: Formula) -> str:
    return str(f)


def show_sequent(s: Sequent) -> str:
    return str(s)
