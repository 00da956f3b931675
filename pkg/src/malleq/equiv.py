"""Proof equivalence: pairwise BDT equivalence of the two BDT slicings.

``proof_equiv_oracle`` compares explicit slicings instead and is meant for
cross-checking on small inputs only.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import bdt as B
from .bdt import LeafPath
from .errors import MalleqError
from .slicing import bdt_slicing, slicing


class ConclusionMismatch(MalleqError):
    pass


@dataclass(frozen=True)
class Witness:
    pair: tuple[int, int]
    left: LeafPath  # leaf of the first proof's tree for ``pair``
    right: LeafPath  # compatible leaf of the second proof's tree, other value


@dataclass(frozen=True)
class EquivVerdict:
    equivalent: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.equivalent


def _same_conclusion(p, q, check):
    check(p)
    check(q)
    if p.conclusion != q.conclusion:
        raise ConclusionMismatch(
            f"conclusions differ: {p.conclusion} vs {q.conclusion}"
        )


def slicing_equiv(bp, bq) -> EquivVerdict:
    """Compare two BDT slicings of the same sequent pair by pair, ascending."""
    for pr in sorted(set(bp.entries) | set(bq.entries)):
        w = B.equiv_witness(bp[pr], bq[pr])
        if w is not None:
            return EquivVerdict(False, Witness(pr, *w))
    return EquivVerdict(True)


def proof_equiv(p, q) -> EquivVerdict:
    from .proof import check_proof

    _same_conclusion(p, q, check_proof)
    return slicing_equiv(bdt_slicing(p), bdt_slicing(q))


def proof_equiv_oracle(p, q, max_slices: int | None = None) -> bool:
    from .proof import check_proof

    _same_conclusion(p, q, check_proof)
    return slicing(p, max_slices) == slicing(q, max_slices)
