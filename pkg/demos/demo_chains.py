"""
Chains of covers up from a quotient singularity
===============================================

Walks the subgroup lattice of a cyclic quotient singularity through
quotient covers, watching the F-signature at least double at every
etale-in-codimension-one step until it stabilizes at the regular ring.
"""

from fsig import chain_simulation, compose_covers, quotient_singularity

ring = quotient_singularity(n=8, weights=(1, 7), p=3)
print(f"start: {ring.label}, s = 1/8")

chain = chain_simulation(ring)
print(f"steps: {len(chain.steps)}, chain verified: {chain.ok}")
print(f"s along the chain: {[str(s) for s in chain.s_values]}")
print(f"stabilization index: {chain.stabilization_index}")

for cover, s_lo, s_hi in zip(chain.steps, chain.s_values, chain.s_values[1:]):
    print(f"  {cover.lower.label} -> {cover.upper.label}: "
          f"degree {cover.degree}, etale in codim 1: {cover.etale_in_codim1}, "
          f"s {s_lo} -> {s_hi} (x{s_hi / s_lo})")
    assert s_hi >= 2 * s_lo

# Composition of the whole tower: one cover of degree 8, still
# etale in codimension one, landing in the regular ring.
tower = chain.steps[0]
for step in chain.steps[1:]:
    tower = compose_covers(tower, step)
print(f"composed tower: degree {tower.degree}, "
      f"Ram = {[str(c) for c in tower.ram.coefficients]}, "
      f"etale in codim 1: {tower.etale_in_codim1}")
assert tower.degree == 8 and tower.ram.is_zero()

# 1/s bounds the length of any such chain: here 1/s = 8 allows at most
# log2(8) = 3 doubling steps, and the chain uses exactly 3.
assert len(chain.steps) == 3
