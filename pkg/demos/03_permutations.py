"""Rule permutations keep the meaning of a proof; a branch swap may not."""
from malleq.core import Atom, Plus
from malleq.equiv import proof_equiv, proof_equiv_oracle
from malleq.proof import (
    ax, distribute_impL_over_dplus, dplus, ex, imp_l, imp_r, node_count, parse_proof,
    permute_impR_over_dplus, plus_l, plus_r, swap_dplus_branches,
)

d = Plus("y", Atom("d"), Atom("e"))
pi = plus_l(d, imp_l(ax("a"), ax("d")))
mu = plus_r(d, imp_l(ax("a"), ax("e")))
low = imp_r(ex(1, 2, dplus("x", pi, mu)))
high = permute_impR_over_dplus(low)
print("impR below the case split:", low)
print("impR lifted into branches:", high)
print("equivalent:", proof_equiv(low, high).equivalent)

c = Plus("y", Atom("f"), Atom("g"))
nu = imp_r(ax("c"))
before = imp_l(nu, dplus("x", plus_l(c, imp_l(ax("e"), ax("f"))), plus_r(c, imp_l(ax("e"), ax("g")))))
after = distribute_impL_over_dplus(before)
print(f"\ndistributing impL copies its left proof: {node_count(before)} -> {node_count(after)} nodes")
print("equivalent:", proof_equiv(before, after).equivalent)

sym = parse_proof("(dplus x (plusL (a +[y] a) (ax a)) (plusR (a +[y] a) (ax a)))")
swapped = swap_dplus_branches(sym, ())
v = proof_equiv(sym, swapped)
print("\nswapping unequal branches:", "equivalent" if v else "inequivalent")
print("first differing pair:", v.witness.pair)
print("explicit slicings agree:", proof_equiv_oracle(sym, swapped) == v.equivalent)
