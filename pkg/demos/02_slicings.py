"""A proof read two ways: as a set of slices and as a map from pairs to trees."""
from malleq.proof import parse_proof
from malleq.slicing import bdt_slicing, expand, format_bdt_slicing, format_slicing, slicing

p = parse_proof("(dplus x (plusL (a +[y] b) (ax a)) (plusR (a +[y] b) (ax b)))")
print("proof:     ", p)
print("conclusion:", p.conclusion)

print("\nslices (one per line):")
print(format_slicing(slicing(p)))

bs = bdt_slicing(p)
print("\ntree for every occurrence pair:")
print(format_bdt_slicing(bs))

# each valuation of x picks one slice back out
print("\nexpanding the trees gives the same slices:", expand(bs) == slicing(p))
