"""Named generator sets: cubes, permutahedra, the Fedorov solids and the
six-dimensional conjugated zonotope of belt diameter 3."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .conjugate import assemble
from .errors import BadSubset
from .zonotope import FacetClass, GeneratorSet, facet_by_indices, reduce_to_full_rank


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    generators: GeneratorSet
    expected_diameter: int | None
    source: str


def cube(d: int) -> CatalogEntry:
    cols = [[int(r == i) for r in range(d)] for i in range(d)]
    gens = GeneratorSet.from_columns(cols, d, [f"e{i + 1}" for i in range(d)])
    return CatalogEntry(f"cube{d}", gens, 1 if d >= 2 else 0, "unit cube; any two non-opposite facets share a ridge")


def _permutahedron_pairs(d: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, d + 2), 2))


def permutahedron_raw(d: int) -> GeneratorSet:
    """Generators ``e_i - e_j`` (i < j) in ambient dimension ``d + 1``."""
    cols = []
    for i, j in _permutahedron_pairs(d):
        v = [0] * (d + 1)
        v[i - 1], v[j - 1] = 1, -1
        cols.append(v)
    return GeneratorSet.from_columns(cols, d + 1, [f"e{i}-e{j}" for i, j in _permutahedron_pairs(d)])


def permutahedron(d: int) -> CatalogEntry:
    gens = reduce_to_full_rank(permutahedron_raw(d))
    return CatalogEntry(
        f"permutahedron{d}", gens, 2 if d >= 3 else (1 if d == 2 else 0),
        "Minkowski sum of segments e_i - e_j, reduced to its d-dimensional span",
    )


def hexagonal_prism() -> CatalogEntry:
    gens = GeneratorSet.from_columns([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], 3,
                                     ["e1", "e2", "e1+e2", "e3"])
    return CatalogEntry("hexagonal_prism", gens, 1, "Fedorov solid")


_RD = [(1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)]


def rhombic_dodecahedron() -> CatalogEntry:
    gens = GeneratorSet.from_columns(_RD, 3, ["a", "b", "c", "d"])
    return CatalogEntry("rhombic_dodecahedron", gens, 2, "Fedorov solid")


def elongated_dodecahedron() -> CatalogEntry:
    gens = GeneratorSet.from_columns(_RD + [(0, 0, 1)], 3, ["a", "b", "c", "d", "e3"])
    return CatalogEntry("elongated_dodecahedron", gens, 2, "Fedorov solid")


def truncated_octahedron() -> CatalogEntry:
    entry = permutahedron(3)
    return CatalogEntry("truncated_octahedron", entry.generators, 2, "Fedorov solid (the permutahedron of dimension 3)")


PAPER_A = (
    (1, 1, 0, 0, 0),
    (0, 1, 1, 0, 0),
    (0, 0, 1, 1, 0),
    (0, 0, 0, 1, 1),
    (1, 0, 0, 0, 1),
)


def paper_example_6d() -> CatalogEntry:
    """Conjugated zonotope in dimension 6 with belt diameter 3.

    Columns 0-4 are ``e1..e5``, columns 5-9 are ``f1..f5``.
    """
    return CatalogEntry("paper6d", assemble(PAPER_A), 3, "sharp six-dimensional example, [I | A ; 0 | 1] with circulant A")


def partition_facet(d: int, A: Iterable[int]) -> FacetClass:
    """Facet class of ``Pi_d`` for the bipartition ``(A, complement)``.

    Its flat is the set of generators ``e_i - e_j`` with both ends on the same
    side.  ``A`` and its complement give the same class.
    """
    A = set(A)
    ground = set(range(1, d + 2))
    if not A or not A < ground:
        raise BadSubset(f"{sorted(A)} is not a nonempty proper subset of 1..{d + 1}")
    B = ground - A
    idx = [k for k, (i, j) in enumerate(_permutahedron_pairs(d)) if {i, j} <= A or {i, j} <= B]
    V = permutahedron(d).generators
    fc = facet_by_indices(V, idx)
    if list(fc.indices) != idx:
        raise BadSubset(f"bipartition {sorted(A)} does not give a closed facet flat")
    return fc


_NAMED: dict[str, Callable[[], CatalogEntry]] = {
    "hexagonal_prism": hexagonal_prism,
    "rhombic_dodecahedron": rhombic_dodecahedron,
    "elongated_dodecahedron": elongated_dodecahedron,
    "truncated_octahedron": truncated_octahedron,
    "paper6d": paper_example_6d,
}


def names() -> list[str]:
    return [f"cube{d}" for d in range(2, 7)] + [f"permutahedron{d}" for d in range(2, 6)] + list(_NAMED)


def get(name: str) -> CatalogEntry:
    """Look an entry up by name (``cube<d>`` and ``permutahedron<d>`` take any d)."""
    if name in _NAMED:
        return _NAMED[name]()
    for prefix, fn in (("cube", cube), ("permutahedron", permutahedron)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return fn(int(name[len(prefix):]))
    raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(names())}")


def all_entries(max_dim: int = 6) -> list[CatalogEntry]:
    out = [get(n) for n in names()]
    return [e for e in out if e.generators.dim <= max_dim]
