"""Closed-form parameters of the two infinite design families.

The ovoid family lives on q^2+1 points for q = 2^(2a+1) and asks q-1 to
be a Mersenne prime; the even-q coset-geometry family lives on
q^3(q^3-1)/2 points and asks q+1 to be a Fermat prime.  The orbit
forcing shows how the point-stabilizer orbit 1-designs pin down every
intersection number.

Run:  python demos/family_arithmetic.py
"""
from ftdesigns.families import (g2_orbit_forcing, g2_params,
                                lemma38_block_stabilizer_order, suzuki_params)

print("ovoid family:")
for q in (8, 32, 128, 512):
    fam = suzuki_params(q)
    mark = "prime" if fam.condition_holds else "composite"
    print(f"  q={q:4d}: {fam.params}   q-1 = {q-1} is {mark}")

print("\neven-q family:")
for q in (4, 8, 16):
    fam = g2_params(q)
    mark = "prime" if fam.condition_holds else "composite"
    print(f"  q={q:3d}: {fam.params}   q+1 = {q+1} is {mark}")

print("\norbit forcing at q = 4:")
forcing = g2_orbit_forcing(4)
print(f"  orbit lengths {forcing.orbit_lengths}")
print(f"  k_j = {forcing.k_j}, r_j = {forcing.r_j}, b_j = {forcing.b_j}")
for length, k, r in zip(forcing.orbit_lengths, forcing.k_j, forcing.r_j):
    print(f"  1-design identity: {forcing.b_j} * {k} = {length} * {r} = {forcing.b_j * k}")

print("\nblock stabilizer orders (f1 dividing the field exponent):")
for q, f1 in [(4, 1), (4, 2), (16, 1)]:
    print(f"  q={q}, f1={f1}: {lemma38_block_stabilizer_order(q, f1)}")
value = lemma38_block_stabilizer_order(4, 1)
b = g2_params(4).params.b
print(f"  consistency: {value} * {b} = {value * b} (the full group order at q=4)")
