"""Proof interpretations: explicit slicings and BDT slicings.

Both interpreters only look at four things on a proof node: its ``clause``
(``axiom``, ``pass``, ``split`` or ``branch``), its premises, the occurrence
embedding of each premise, and for ``branch`` nodes the label and the index
ranges of the two disjuncts.  The classical calculus exposes the same
interface, so everything here serves both.

BDT slicings are stored sparsely: a pair absent from ``entries`` maps to the
leaf ``0``.  Anything else, including trees such as ``(x ? 0 : 0)``, is
stored exactly as the inductive definition produces it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

import numpy as np

from . import bdt as B
from .bdt import BDT, ZERO, Node
from .core import canonical_pair
from .errors import BudgetExceeded, MalleqError

Pair = tuple[int, int]
Slice = frozenset  # of Pair
Slicing = frozenset  # of Slice


@dataclass(frozen=True)
class BDTSlicing:
    conclusion: object  # Sequent or MallSequent
    entries: Mapping[Pair, BDT] = field(default_factory=dict)

    def __getitem__(self, pair) -> BDT:
        i, j = pair
        return self.entries.get(canonical_pair(i, j), ZERO)

    def pairs(self) -> list[Pair]:
        return sorted(self.entries)

    def variables(self) -> set[str]:
        out = set()
        for t in self.entries.values():
            out |= B.variables(t)
        return out

    def __str__(self):
        return format_bdt_slicing(self)


def _pairs_of(n):
    return combinations(range(n), 2)


def _map_pair(emb, pair):
    return canonical_pair(emb[pair[0]], emb[pair[1]])


def _check_pair(node, pair):
    n = node.conclusion.size
    i, j = pair
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise MalleqError(f"invalid occurrence pair ({i},{j}) for a sequent with {n} atoms")
    return canonical_pair(i, j)


# -- BDT slicing ------------------------------------------------------------

def _branch(node, left: dict, right: dict) -> dict:
    x = node.label
    a_side, b_side = node.branch_sides()
    a_set, b_set = set(a_side), set(b_side)
    out = {}
    for pr in _pairs_of(node.conclusion.size):
        in_a = pr[0] in a_set or pr[1] in a_set
        in_b = pr[0] in b_set or pr[1] in b_set
        if in_a and in_b:
            continue  # a link between the two disjuncts never exists
        if in_a:
            out[pr] = Node(x, left.get(pr, ZERO), ZERO)
        elif in_b:
            out[pr] = Node(x, ZERO, right.get(pr, ZERO))
        else:
            out[pr] = Node(x, left.get(pr, ZERO), right.get(pr, ZERO))
    return out


def _bdt_entries(node) -> dict:
    clause = node.clause
    if clause == "axiom":
        return {(0, 1): B.ONE}
    mapped = []
    for slot, prem in enumerate(node.premises):
        emb = node.embedding(slot)
        mapped.append({_map_pair(emb, pr): t for pr, t in _bdt_entries(prem).items()})
    if clause == "pass":
        return mapped[0]
    if clause == "split":
        # premises occupy disjoint occurrence sets; cross pairs stay absent (0)
        return {**mapped[0], **mapped[1]}
    return _branch(node, mapped[0], mapped[1])


def bdt_slicing(p) -> BDTSlicing:
    """BDT slicing of a checked proof (either calculus)."""
    return BDTSlicing(p.conclusion, _bdt_entries(p))


def bdt_slicing_pair(p, pair) -> BDT:
    """One entry of the BDT slicing, found by walking only the relevant branches."""
    pr = _check_pair(p, pair)
    return _pair_walk(p, pr)


def _pull_back(emb, pr):
    """Premise pair mapped onto ``pr`` by ``emb``; None if either end is missing."""
    inv = {c: k for k, c in enumerate(emb)}
    if pr[0] in inv and pr[1] in inv:
        return canonical_pair(inv[pr[0]], inv[pr[1]])
    return None


def _pair_walk(node, pr) -> BDT:
    clause = node.clause
    if clause == "axiom":
        return B.ONE  # an axiom conclusion has exactly one pair
    if clause == "pass":
        sub = _pull_back(node.embedding(0), pr)
        return ZERO if sub is None else _pair_walk(node.premises[0], sub)
    if clause == "split":
        for slot in (0, 1):
            sub = _pull_back(node.embedding(slot), pr)
            if sub is not None:
                return _pair_walk(node.premises[slot], sub)
        return ZERO
    a_side, b_side = node.branch_sides()
    in_a = pr[0] in a_side or pr[1] in a_side
    in_b = pr[0] in b_side or pr[1] in b_side
    if in_a and in_b:
        return ZERO

    def side(slot):
        sub = _pull_back(node.embedding(slot), pr)
        return ZERO if sub is None else _pair_walk(node.premises[slot], sub)

    left = ZERO if in_b else side(0)
    right = ZERO if in_a else side(1)
    return Node(node.label, left, right)


# -- explicit slicing -------------------------------------------------------

def slicing(p, max_slices: int | None = None) -> Slicing:
    """Explicit set-of-slices interpretation (exponential in general)."""
    limit = (1 << B.oracle_budget()) if max_slices is None else max_slices

    def go(node) -> set:
        clause = node.clause
        if clause == "axiom":
            return {frozenset({(0, 1)})}
        parts = []
        for slot, prem in enumerate(node.premises):
            emb = node.embedding(slot)
            parts.append({frozenset(_map_pair(emb, pr) for pr in s) for s in go(prem)})
        if clause == "pass":
            out = parts[0]
        elif clause == "split":
            if len(parts[0]) * len(parts[1]) > limit:
                raise BudgetExceeded(f"slicing exceeds {limit} slices")
            out = {s | t for s in parts[0] for t in parts[1]}
        else:
            out = parts[0] | parts[1]
        if len(out) > limit:
            raise BudgetExceeded(f"slicing exceeds {limit} slices")
        return out

    return frozenset(go(p))


def valuation_slice(bs: BDTSlicing, v: Mapping[str, int]) -> Slice:
    out = set()
    for pr, t in bs.entries.items():
        if B.evaluate(t, v):
            out.add(pr)
    return frozenset(out)


def expand(bs: BDTSlicing, budget: int | None = None) -> Slicing:
    """Set of valuation slices over all valuations of the slicing's variables."""
    order = sorted(bs.variables())
    budget = B.oracle_budget() if budget is None else budget
    if len(order) > budget:
        raise BudgetExceeded(f"{len(order)} variables exceed the oracle budget of {budget}")
    pairs = bs.pairs()
    if not pairs:
        return frozenset({frozenset()})
    table = np.stack([B.truth_table(bs.entries[pr], order) for pr in pairs])
    columns = np.unique(table.T, axis=0)
    return frozenset(
        frozenset(pr for pr, bit in zip(pairs, col) if bit) for col in columns
    )


# -- text formats -----------------------------------------------------------

def format_slice(s: Slice) -> str:
    return "{" + ",".join(f"({i},{j})" for i, j in sorted(s)) + "}"


def format_slicing(S: Slicing) -> str:
    return "\n".join(format_slice(s) for s in sorted(S, key=lambda s: sorted(s)))


def format_bdt_slicing(bs: BDTSlicing) -> str:
    return "\n".join(f"({i},{j}): {bs.entries[(i, j)]}" for i, j in bs.pairs())

