"""Deciding vertex order on a line through both gadget constructions."""
from malleq import bdt as B
from malleq.equiv import proof_equiv
from malleq.reductions import LineGraph, OrdInstance, ord_solve, ord_to_bdt_pair, ord_to_proof_pair

line = LineGraph.from_order(["b", "u", "f", "v", "s", "e"])
for f, s in (("f", "s"), ("s", "f")):
    inst = OrdInstance(line, f, s)
    p, q = ord_to_proof_pair(inst)
    t, u = ord_to_bdt_pair(inst)
    print(f"f={f} s={s}: walk says {ord_solve(inst)}")
    print(f"  exchange gadget: {proof_equiv(p, q).equivalent}")
    print(f"  tree gadget:     {B.equiv(t, u)} ({t.size} and {u.size} tree nodes)")
