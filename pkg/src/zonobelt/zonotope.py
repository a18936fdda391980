"""Zonotopes given by generators, and the flats of their generator matroid.

A facet pair of ``Z(V)`` is a closed generator subset spanning a hyperplane,
a ridge class is a closed subset of rank ``d-2``.  Everything is computed
from the matroid; no convex hulls are taken.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import RankDeficient, ZeroGenerator
from .exactlin import (
    DirectionClass,
    RVector,
    Subspace,
    closure,
    det,
    int_rank,
    members_of,
    primitive,
    vec,
)


@dataclass(frozen=True)
class GeneratorSet:
    """Columns of a ``dim x n`` rational matrix; one zonotope."""

    dim: int
    gens: tuple[RVector, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    _memo: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if any(len(g) != self.dim for g in self.gens):
            raise ValueError("every generator must have length dim")
        if self.labels is not None and len(self.labels) != len(self.gens):
            raise ValueError("one label per generator")

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence], dim: int | None = None, labels=None) -> "GeneratorSet":
        cols = tuple(vec(c) for c in columns)
        if dim is None:
            if not cols:
                raise ValueError("dimension needed for an empty generator set")
            dim = len(cols[0])
        return cls(dim, cols, tuple(labels) if labels is not None else None)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], labels=None) -> "GeneratorSet":
        rows = [vec(r) for r in rows]
        if not rows:
            raise ValueError("at least one row needed")
        n = len(rows[0])
        return cls.from_columns([[r[j] for r in rows] for j in range(n)], len(rows), labels)

    @property
    def n(self) -> int:
        return len(self.gens)

    def rows(self) -> list[RVector]:
        return [tuple(g[i] for g in self.gens) for i in range(self.dim)]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"v{i}"

    @cached_property
    def int_gens(self) -> tuple[tuple[int, ...], ...]:
        """Primitive integer multiples of the generators (same lines, same matroid)."""
        return tuple(primitive(g) for g in self.gens)

    @cached_property
    def rank(self) -> int:
        return int_rank(self.int_gens) if self.gens else 0

    def subset(self, indices: Iterable[int]) -> "GeneratorSet":
        idx = sorted(indices)
        labels = tuple(self.label(i) for i in idx)
        return GeneratorSet(self.dim, tuple(self.gens[i] for i in idx), labels)

    def transformed(self, matrix: Sequence[Sequence]) -> "GeneratorSet":
        """Apply a square linear map (given by rows) to every generator."""
        m = [vec(r) for r in matrix]
        gens = tuple(tuple(sum(a * b for a, b in zip(row, g)) for row in m) for g in self.gens)
        return GeneratorSet(len(m), gens, self.labels)

    def scaled(self, index: int, alpha) -> "GeneratorSet":
        alpha = Fraction(alpha)
        if alpha == 0:
            raise ValueError("scaling factor must be nonzero")
        gens = list(self.gens)
        gens[index] = tuple(alpha * x for x in gens[index])
        return GeneratorSet(self.dim, tuple(gens), self.labels)


@dataclass(frozen=True, order=True)
class Flat:
    """A closed generator subset together with its span."""

    indices: tuple[int, ...]
    space: Subspace = field(compare=False)

    @property
    def k(self) -> int:
        return self.space.dim

    @cached_property
    def mask(self) -> int:
        m = 0
        for i in self.indices:
            m |= 1 << i
        return m


@dataclass(frozen=True)
class FacetClass:
    """One pair of opposite facets."""

    id: int
    flat: Flat

    @property
    def indices(self) -> tuple[int, ...]:
        return self.flat.indices


@dataclass(frozen=True)
class RidgeClass:
    """One parallel class of ridges (codimension-2 faces)."""

    id: int
    flat: Flat

    @property
    def indices(self) -> tuple[int, ...]:
        return self.flat.indices


def validate(V: GeneratorSet) -> GeneratorSet:
    for i, g in enumerate(V.gens):
        if not any(g):
            raise ZeroGenerator(i)
    if V.rank != V.dim:
        raise RankDeficient(V.rank, V.dim)
    return V


def reduce_to_full_rank(V: GeneratorSet) -> GeneratorSet:
    """Rewrite the generators in coordinates of their own span.

    With the span's RREF basis, the coordinates of a vector in the span are
    its entries at the pivot positions.
    """
    if not V.gens:
        return GeneratorSet(0, (), V.labels)
    space = Subspace.span(V.gens, V.dim)
    if space.dim == V.dim:
        return V
    gens = tuple(tuple(g[p] for p in space.pivots) for g in V.gens)
    return GeneratorSet(space.dim, gens, V.labels)


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _enumerate_flats(V: GeneratorSet, k: int) -> tuple[Flat, ...]:
    ints = V.int_gens
    found: list[int] = []
    flats = []
    for combo in combinations(range(V.n), k):
        m = _mask(combo)
        if any(m & f == m for f in found):
            continue
        if int_rank([ints[i] for i in combo]) != k:
            continue
        space = Subspace.span([V.gens[i] for i in combo], V.dim)
        closed = members_of(V, space)
        found.append(_mask(closed))
        flats.append(Flat(tuple(sorted(closed)), space))
    return tuple(sorted(flats))


def flats_of_dim(V: GeneratorSet, k: int) -> tuple[Flat, ...]:
    """Every closed generator subset of rank ``k``, in lexicographic order."""
    if not 0 <= k <= V.dim:
        raise ValueError(f"flat dimension {k} outside 0..{V.dim}")
    key = ("flats", k)
    if key not in V._memo:
        V._memo[key] = _enumerate_flats(V, k)
    return V._memo[key]


def facet_classes(V: GeneratorSet) -> tuple[FacetClass, ...]:
    key = "facets"
    if key not in V._memo:
        V._memo[key] = tuple(FacetClass(i, f) for i, f in enumerate(flats_of_dim(V, V.dim - 1)))
    return V._memo[key]


def ridge_classes(V: GeneratorSet) -> tuple[RidgeClass, ...]:
    key = "ridges"
    if key not in V._memo:
        if V.dim < 2:
            V._memo[key] = ()
        else:
            V._memo[key] = tuple(RidgeClass(i, f) for i, f in enumerate(flats_of_dim(V, V.dim - 2)))
    return V._memo[key]


def facet_by_indices(V: GeneratorSet, indices: Iterable[int]) -> FacetClass:
    """Facet class whose flat is the closure of ``indices``."""
    target = tuple(sorted(closure(V, indices)))
    for fc in facet_classes(V):
        if fc.indices == target:
            return fc
    raise KeyError(f"closure {target} is not a facet flat")


def ridge_by_indices(V: GeneratorSet, indices: Iterable[int]) -> RidgeClass:
    target = tuple(sorted(closure(V, indices)))
    for rc in ridge_classes(V):
        if rc.indices == target:
            return rc
    raise KeyError(f"closure {target} is not a ridge flat")


def face_generators(V: GeneratorSet, flat: Flat) -> GeneratorSet:
    """The face's own zonotope, in coordinates of its span (a point if empty)."""
    return reduce_to_full_rank(V.subset(flat.indices))


def hyperplane_normal(vectors: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    """Generalized cross product of ``dim-1`` vectors (zero if dependent)."""
    normal = []
    for j in range(dim):
        minor = [[v[c] for c in range(dim) if c != j] for v in vectors]
        normal.append((-1) ** j * det(minor))
    return primitive(normal)


def facets_via_support(V: GeneratorSet) -> set[tuple[DirectionClass, frozenset[int]]]:
    """Facet pairs found from supporting hyperplanes (independent check).

    For every ``d-1`` generators with a nonzero normal ``u``, the facet
    maximizing ``u`` is a translate of the zonotope of the generators
    orthogonal to ``u``.
    """
    d = V.dim
    ints = V.int_gens
    out: dict[DirectionClass, frozenset[int]] = {}
    for combo in combinations(range(V.n), d - 1):
        u = hyperplane_normal([ints[i] for i in combo], d)
        if not any(u):
            continue
        cls = DirectionClass(u)
        if cls in out:
            continue
        out[cls] = frozenset(i for i in range(V.n) if sum(a * b for a, b in zip(u, ints[i])) == 0)
    return set(out.items())
