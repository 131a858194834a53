"""Words in the mapping class group and their action on homology.

On the four-punctured torus the point-pushing generators commute on H_1,
so a word's action depends only on the exponent sum of each generator.
"""

from __future__ import annotations

from fibersym.exactla import jordan_census
from fibersym.surfaces import (
    SPHERE4,
    SPHERICAL_MONODROMY,
    TOROIDAL_MONODROMY_1,
    TOROIDAL_MONODROMY_2,
    evaluate_word,
    expand_relations,
    parse_word,
    push_rho_matrix,
)

print("Push(rho_1) on (a0, a1, a2, a3, b0):")
print(push_rho_matrix(1))

for text in (TOROIDAL_MONODROMY_1, TOROIDAL_MONODROMY_2):
    w = parse_word(text)
    fstar = evaluate_word(w).on_h1_dual
    print(f"\nword {w}")
    print("f* - 1 =")
    print(fstar - fstar.identity(5))
    print("blocks at 1:", dict(jordan_census(fstar, 1).blocks_of_size))

f = evaluate_word(parse_word(TOROIDAL_MONODROMY_1)).on_h1
g = evaluate_word(parse_word(TOROIDAL_MONODROMY_2)).on_h1
print("\nsecond toroidal word acts as the inverse of the first:", (f * g).is_identity())

braid = parse_word(SPHERICAL_MONODROMY, SPHERE4)
print(f"\nspherical word {braid} acts trivially:", evaluate_word(braid).on_h1.is_identity())

print("\nC12 expands to", expand_relations(parse_word("C12")))
