"""Walk through the six-dimensional example: tiling test, a distance-3 path
between the two pair facets, and the normal form of a disguised copy."""

import random
from fractions import Fraction

from zonobelt import catalog
from zonobelt.belts import belt_diameter, shortest_belt_path
from zonobelt.conjugate import ConjugatedPair, normal_form, pair_facets
from zonobelt.venkov import venkov_test


def main(seed=0):
    V = catalog.paper_example_6d().generators
    verdict = venkov_test(V)
    worst = max(c for _, c in verdict.ridge_reports)
    print(f"space-filling: {bool(verdict)} (max directions per ridge: {worst})")
    P, Q = pair_facets(V, 5)
    path = shortest_belt_path(V, P, Q)
    print(f"belt distance between the pair facets: {path.length}")
    for i, fc in enumerate(path.facets):
        print("  facet", [V.label(j) for j in fc.indices])
        if i < len(path.belts):
            print("    via belt of ridge", [V.label(j) for j in path.belts[i].ridge.indices])
    print(f"belt diameter: {belt_diameter(V)}")

    rng = random.Random(seed)
    M = [[Fraction(rng.randint(-4, 4)) + (r == c) * 9 for c in range(6)] for r in range(6)]
    move = lambda v: tuple(sum(M[r][c] * v[c] for c in range(6)) for r in range(6))
    pair = ConjugatedPair.from_generators(V, range(5), range(5, 10))
    disguised = ConjugatedPair.of([move(e) for e in pair.E], [move(f) for f in pair.F])
    nf = normal_form(disguised)
    print("normal form of a linearly transformed copy:")
    for row in nf.A:
        print("  ", " ".join(map(str, row)))


if __name__ == "__main__":
    main()
