"""Free binary decision trees.

A node ``(x ? L : R)`` takes the left subtree ``L`` when ``x = 0`` and the
right subtree ``R`` when ``x = 1``.  Equivalence is decided by looking for a
pair of compatible leaves carrying different values; a truth-table oracle
backed by numpy is kept alongside for cross-checking.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, NamedTuple

import numpy as np

from ._lexer import Lexer
from .errors import BudgetExceeded, NotFreeError, UnboundVariableError

VAR_RE = re.compile(r"[a-zA-Z0-9_]+")
DEFAULT_ORACLE_BUDGET = 24


def oracle_budget() -> int:
    """Largest variable count the brute-force oracles will enumerate."""
    raw = os.environ.get("MALLEQ_ORACLE_BUDGET")
    return int(raw) if raw else DEFAULT_ORACLE_BUDGET


@dataclass(frozen=True)
class Leaf:
    bit: int

    def __post_init__(self):
        if self.bit not in (0, 1):
            raise ValueError(f"leaf value must be 0 or 1, got {self.bit!r}")

    def __str__(self):
        return str(self.bit)

    @cached_property
    def size(self):
        return 1


@dataclass(frozen=True)
class Node:
    var: str
    left: BDT
    right: BDT

    def __str__(self):
        return f"({self.var} ? {self.left} : {self.right})"

    @cached_property
    def size(self):
        return 1 + self.left.size + self.right.size


BDT = Leaf | Node

ZERO = Leaf(0)
ONE = Leaf(1)


def ite(var: str, left: BDT, right: BDT) -> Node:
    return Node(var, left, right)


def leaf(bit: int) -> Leaf:
    return ONE if bit else ZERO


class LeafPath(NamedTuple):
    value: int
    path: tuple[tuple[str, int], ...]  # (variable, branch taken) from the root


def evaluate(t: BDT, v: Mapping[str, int]) -> int:
    while isinstance(t, Node):
        try:
            b = v[t.var]
        except KeyError:
            raise UnboundVariableError(f"variable {t.var!r} has no value") from None
        t = t.right if b else t.left
    return t.bit


def negate(t: BDT) -> BDT:
    if isinstance(t, Leaf):
        return leaf(1 - t.bit)
    return Node(t.var, negate(t.left), negate(t.right))


def variables(t: BDT) -> set[str]:
    out = set()
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Node):
            out.add(u.var)
            stack += (u.left, u.right)
    return out


def is_free(t: BDT) -> bool:
    def go(u, seen):
        if isinstance(u, Leaf):
            return True
        if u.var in seen:
            return False
        seen = seen | {u.var}
        return go(u.left, seen) and go(u.right, seen)

    return go(t, frozenset())


def leaves(t: BDT) -> list[LeafPath]:
    out = []

    def go(u, path):
        if isinstance(u, Leaf):
            out.append(LeafPath(u.bit, path))
        else:
            go(u.left, path + ((u.var, 0),))
            go(u.right, path + ((u.var, 1),))

    go(t, ())
    return out


def compatible(p: LeafPath, q: LeafPath) -> bool:
    taken = dict(p.path)
    return all(taken.get(var, b) == b for var, b in q.path)


def _require_free(*trees):
    for t in trees:
        if not is_free(t):
            raise NotFreeError(f"tree is not free (a variable repeats on a path): {t}")


def equiv_witness(t1: BDT, t2: BDT) -> tuple[LeafPath, LeafPath] | None:
    """First pair of compatible leaves with different values, or ``None``.

    Leaves of ``t1`` are scanned left to right, and for each the leaves of
    ``t2``; the first hit is returned.
    """
    _require_free(t1, t2)
    right = leaves(t2)
    for p in leaves(t1):
        taken = dict(p.path)
        for q in right:
            if q.value != p.value and all(taken.get(var, b) == b for var, b in q.path):
                return p, q
    return None


def equiv(t1: BDT, t2: BDT) -> bool:
    return equiv_witness(t1, t2) is None


def truth_table(t: BDT, order: list[str]) -> np.ndarray:
    """Values of ``t`` on all ``2**len(order)`` valuations.

    Entry ``k`` is the value under the valuation giving ``order[i]`` the
    ``i``-th bit of ``k``.
    """
    pos = {v: i for i, v in enumerate(order)}
    idx = np.arange(1 << len(order), dtype=np.int64)

    def go(u):
        if isinstance(u, Leaf):
            return np.full(idx.shape, bool(u.bit))
        if u.var not in pos:
            raise UnboundVariableError(f"variable {u.var!r} not in the valuation domain")
        bit = ((idx >> pos[u.var]) & 1).astype(bool)
        return np.where(bit, go(u.right), go(u.left))

    return go(t)


def equiv_oracle(t1: BDT, t2: BDT, budget: int | None = None) -> bool:
    order = sorted(variables(t1) | variables(t2))
    budget = oracle_budget() if budget is None else budget
    if len(order) > budget:
        raise BudgetExceeded(f"{len(order)} variables exceed the oracle budget of {budget}")
    return bool(np.array_equal(truth_table(t1, order), truth_table(t2, order)))


def restrict(t: BDT, var: str, bit: int) -> BDT:
    """Cofactor: every test of ``var`` replaced by its ``bit`` branch."""
    if isinstance(t, Leaf):
        return t
    if t.var == var:
        return restrict(t.right if bit else t.left, var, bit)
    return Node(t.var, restrict(t.left, var, bit), restrict(t.right, var, bit))


def subtree(t: BDT, path) -> BDT:
    """Follow a sequence of 0/1 branch choices from the root."""
    for b in path:
        if not isinstance(t, Node) or b not in (0, 1):
            raise ValueError(f"invalid tree path {tuple(path)}")
        t = t.right if b else t.left
    return t


def replace_subtree(t: BDT, path, new: BDT) -> BDT:
    if not path:
        return new
    if not isinstance(t, Node):
        raise ValueError("path runs past a leaf")
    b, rest = path[0], tuple(path[1:])
    if b:
        return Node(t.var, t.left, replace_subtree(t.right, rest, new))
    return Node(t.var, replace_subtree(t.left, rest, new), t.right)


def positions(t: BDT):
    """Preorder ``(path, subtree)`` pairs."""
    stack = [((), t)]
    while stack:
        path, u = stack.pop()
        yield path, u
        if isinstance(u, Node):
            stack.append((path + (1,), u.right))
            stack.append((path + (0,), u.left))


# -- text format ------------------------------------------------------------

def read_bdt(lx: Lexer) -> BDT:
    if lx.at("("):
        lx.next()
        var = lx.word("variable", VAR_RE)
        lx.expect("?")
        left = read_bdt(lx)
        lx.expect(":")
        right = read_bdt(lx)
        lx.expect(")")
        return Node(var, left, right)
    _, v, pos = lx.peek()
    if v not in ("0", "1"):
        lx.error(f"expected 0, 1 or '(', found {v or 'end of input'!r}", pos)
    lx.next()
    return leaf(int(v))


def parse_bdt(text: str, source=None, require_free=True) -> BDT:
    lx = Lexer(text, source)
    t = read_bdt(lx)
    lx.end()
    if require_free:
        _require_free(t)
    return t


def show_bdt(t: BDT) -> str:
    return str(t)
