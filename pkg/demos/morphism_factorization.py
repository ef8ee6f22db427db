#!/usr/bin/env python3
"""Factor a morphism of monoid actions through its quotient and image.

The running example is the rotation action of the cyclic group of order 4
mapped onto the rotation action of order 2 by reduction mod 2.  The morphism
splits into surjection, bijection and inclusion parts whose composite is the
original pair of maps.
"""

from skewlin import (
    RepMorphism,
    check_morphism,
    classify,
    compose_morphisms,
    decompose_morphism,
    reduced_action,
    rotation_representation,
    validate_representation,
)

f = rotation_representation(4)
g = rotation_representation(2)
print("source: order-4 rotations;", classify(f))
print("target: order-2 rotations;", classify(g))

morphism = RepMorphism(
    f, g, tuple(a % 2 for a in range(4)), tuple(x % 2 for x in range(4))
)
print("\nalgebra map:", morphism.algebra_map)
print("carrier map:", morphism.carrier_map)
print("is a morphism:", check_morphism(morphism))

d = decompose_morphism(morphism)
print("\nkernel congruence classes on the algebra:", d.algebra_classes)
print("kernel equivalence classes on the carrier:", d.carrier_classes)
print("quotient action table:", d.quotient.action)
print("image action table:   ", d.image.action)

to_quotient, across, into_target = d.factor_morphisms(morphism)
for name, piece in (
    ("projection", to_quotient),
    ("bijection", across),
    ("inclusion", into_target),
):
    assert check_morphism(piece)
    print(f"{name}: algebra {piece.algebra_map}, carrier {piece.carrier_map}")

composed = compose_morphisms(compose_morphisms(to_quotient, across), into_target)
assert composed.algebra_map == morphism.algebra_map
assert composed.carrier_map == morphism.carrier_map
print("\ncomposite of the three factors reproduces the morphism exactly")

# The original algebra acting through the quotient has the same set of
# transformations as the quotient action itself.
reduced = reduced_action(d, morphism)
assert validate_representation(reduced)
assert set(reduced.action) == set(d.quotient.action)
print("reduced action shares the quotient's transformation set")
