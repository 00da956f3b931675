"""Trees become proofs, and the tree can be read back off the proof."""
from malleq import bdt as B
from malleq.encode import check_representation, encode_bdt
from malleq.equiv import proof_equiv
from malleq.proof import node_count

t = B.parse_bdt("(x ? (y ? 1 : 0) : 1)")
p = encode_bdt(2, t, ("x", "y"))
print("tree:      ", t)
print("conclusion:", p.conclusion)
print("proof size:", node_count(p), "nodes")
print("\nrepresentation report:")
print(check_representation(2, t, ("x", "y")))

u = B.parse_bdt("(y ? 1 : (x ? 0 : 1))")
q = encode_bdt(2, u, ("x", "y"))
print("\nan equivalent tree encodes to an equivalent proof:", proof_equiv(p, q).equivalent)

print("\nsize against the number of variables, same tree:")
for n in (2, 4, 8, 16):
    names = ("x", "y") + tuple(f"w{k}" for k in range(n - 2))
    print(f"  n={n:>2}: {node_count(encode_bdt(n, t, names))} nodes")
