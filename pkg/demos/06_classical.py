"""The one-sided classical calculus gets the same treatment."""
from malleq.classical import mall_bdt_slicing, mall_equiv, mall_equiv_oracle, mall_slicing, parse_mall_proof
from malleq.generators import GenConfig, mall_pair
from malleq.slicing import format_bdt_slicing, format_slicing

p = parse_mall_proof("(with x (ex 1 2 (plusL (a +[y] b) (ax a))) (ex 1 2 (plusR (a +[y] b) (ax b))))")
print("conclusion:", p.conclusion)
print(format_bdt_slicing(mall_bdt_slicing(p)))
print(format_slicing(mall_slicing(p)))

agree = 0
for seed in range(20):
    a, b = mall_pair(GenConfig(seed, 3, 4))
    agree += mall_equiv(a, b).equivalent == mall_equiv_oracle(a, b)
print(f"\nrandom pairs where trees and slices agree: {agree}/20")
