"""Free decision trees: evaluation, equivalence and the leaf test behind it."""
import itertools

from malleq import bdt as B

xor = B.parse_bdt("(y ? (x ? 0 : 1) : (x ? 1 : 0))")
print("tree:", xor)
for x, y in itertools.product((0, 1), repeat=2):
    print(f"  x={x} y={y} -> {B.evaluate(xor, {'x': x, 'y': y})}")

# two shapes for "x or not y"
t1 = B.parse_bdt("(x ? (y ? 1 : 0) : 1)")
t2 = B.parse_bdt("(y ? 1 : (x ? 0 : 1))")
print("\n", t1, "vs", t2)
print("equivalent by leaf compatibility:", B.equiv(t1, t2))
print("equivalent by truth table:      ", B.equiv_oracle(t1, t2))

# an inequivalent pair comes with two compatible leaves of opposite value
u = B.parse_bdt("(y ? 0 : (x ? 0 : 1))")
p, q = B.equiv_witness(t1, u)
print("\n", t1, "vs", u)
print("witness leaves:", p, q)
