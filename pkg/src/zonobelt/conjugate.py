"""Conjugated vector sets and their 0/1 normal form.

Two sets ``E, F`` of ``d-1`` vectors in ``R^d`` are conjugated when adding
any single vector of one set to the other set spans ``R^d``.  A space-filling
conjugated zonotope can be brought, by a change of basis and rescaling of
generators, to the matrix ``[I | A ; 0 | 1]`` with a 0/1 block ``A`` whose
rows are at least half zeros.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateAllEqual,
    InternalInconsistency,
    NotConjugated,
    NotParallelohedron,
    SameClass,
    SizeMismatch,
)
from .belts import project_along
from .exactlin import RVector, Subspace, closure, det, int_rank, rref, vec
from .zonotope import FacetClass, Flat, GeneratorSet, facet_by_indices


@dataclass(frozen=True)
class ConjugacyCheck:
    ok: bool
    failing: tuple[str, int] | None = None  # ("E", i): E plus f_i is degenerate

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ConjugatedPair:
    d: int
    E: tuple[RVector, ...]
    F: tuple[RVector, ...]

    @classmethod
    def of(cls, E: Sequence[Sequence], F: Sequence[Sequence]) -> "ConjugatedPair":
        E = tuple(vec(v) for v in E)
        F = tuple(vec(v) for v in F)
        d = len(E) + 1
        return cls(d, E, F)

    @classmethod
    def from_generators(cls, V: GeneratorSet, e_idx: Sequence[int], f_idx: Sequence[int]) -> "ConjugatedPair":
        return cls(V.dim, tuple(V.gens[i] for i in e_idx), tuple(V.gens[i] for i in f_idx))

    def generators(self) -> GeneratorSet:
        m = len(self.E)
        labels = [f"e{i + 1}" for i in range(m)] + [f"f{i + 1}" for i in range(m)]
        return GeneratorSet(self.d, self.E + self.F, tuple(labels))


def is_conjugated(E: Sequence[Sequence], F: Sequence[Sequence]) -> ConjugacyCheck:
    """Run the ``2(d-1)`` full-rank checks; report the first failure."""
    if len(E) != len(F):
        raise SizeMismatch(f"|E| = {len(E)} but |F| = {len(F)}")
    d = len(E) + 1
    if any(len(v) != d for v in list(E) + list(F)):
        raise SizeMismatch(f"sets of {d - 1} vectors must live in dimension {d}")
    E, F = list(E), list(F)
    for i in range(d - 1):
        if det(E + [F[i]]) == 0:
            return ConjugacyCheck(False, ("E", i))
    for i in range(d - 1):
        if det(F + [E[i]]) == 0:
            return ConjugacyCheck(False, ("F", i))
    return ConjugacyCheck(True)


def assemble(A: Sequence[Sequence[int]]) -> GeneratorSet:
    """Generator set ``[I | A ; 0...0 | 1...1]`` in dimension ``len(A) + 1``."""
    m = len(A)
    if any(len(row) != m for row in A):
        raise SizeMismatch("A must be square")
    d = m + 1
    cols = []
    for i in range(m):
        cols.append(tuple(Fraction(int(r == i)) for r in range(d)))
    for j in range(m):
        cols.append(tuple(Fraction(A[r][j]) for r in range(m)) + (Fraction(1),))
    labels = [f"e{i + 1}" for i in range(m)] + [f"f{j + 1}" for j in range(m)]
    return GeneratorSet(d, tuple(cols), tuple(labels))


def _inverse(M: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(M[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, r, piv = rref(aug)
    if r < n or piv[n - 1] != n - 1:
        raise ValueError("matrix is singular")
    return [list(row[n:]) for row in red]


def _matvec(M, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def _columns_to_rows(cols):
    return [[c[i] for c in cols] for i in range(len(cols[0]))]


@dataclass(frozen=True)
class NormalForm:
    """``transform @ (scalings[k] * v_k)`` is column ``k`` of ``assemble(A)``."""

    A: tuple[tuple[int, ...], ...]
    transform: tuple[tuple[Fraction, ...], ...]
    scalings: tuple[Fraction, ...]
    flipped_rows: tuple[int, ...] = ()

    @property
    def d(self) -> int:
        return len(self.A) + 1

    def generators(self) -> GeneratorSet:
        return assemble(self.A)

    def apply(self, pair: ConjugatedPair) -> GeneratorSet:
        """Image of the original pair under the recorded scalings and map."""
        gens = pair.E + pair.F
        cols = tuple(_matvec(self.transform, tuple(s * x for x in v)) for s, v in zip(self.scalings, gens))
        return GeneratorSet(self.d, cols, pair.generators().labels)

    def row_zero_bound_holds(self) -> bool:
        m = len(self.A)
        need = (m + 1) // 2
        return all(row.count(0) >= need for row in self.A)


def normal_form(pair: ConjugatedPair) -> NormalForm:
    """Bring a space-filling conjugated pair to ``[I | A ; 0 | 1]``.

    Steps: take ``E`` plus one standard vector as a basis; scale every
    ``f_j`` to last coordinate 1; each of the first ``d-1`` coordinates of
    the ``f_j`` then takes exactly two values ``a_i < b_i``; rescale
    ``g_i`` by ``b_i - a_i`` and shift ``g_d`` by ``sum a_i g_i``; finally
    complement every row of ``A`` in which ones outnumber zeros.
    """
    d = pair.d
    if d <= 2:
        raise ValueError("normal form is defined for d > 2")
    check = is_conjugated(pair.E, pair.F)
    if not check:
        raise NotConjugated(check.failing)
    m = d - 1

    span_e = Subspace.span(pair.E, d)
    extra = next(j for j in range(d) if j not in span_e.pivots)
    g_cols = [list(e) for e in pair.E] + [[Fraction(int(r == extra)) for r in range(d)]]
    M = _columns_to_rows(g_cols)
    Minv = _inverse(M)

    f_scale = []
    z = []
    for f in pair.F:
        y = _matvec(Minv, f)
        t = 1 / y[m]
        f_scale.append(t)
        z.append(tuple(t * x for x in y))

    lo, hi = [], []
    for i in range(m):
        values = sorted({zj[i] for zj in z})
        if len(values) >= 3:
            raise NotParallelohedron(i, values)
        if len(values) == 1:
            raise DegenerateAllEqual(i)
        lo.append(values[0])
        hi.append(values[1])

    e_scale = [hi[i] - lo[i] for i in range(m)]
    # new basis vectors in original coordinates
    basis = [[e_scale[i] * x for x in g_cols[i]] for i in range(m)]
    last = list(g_cols[m])
    for i in range(m):
        last = [a + lo[i] * b for a, b in zip(last, g_cols[i])]
    basis.append(last)
    A = [[int((z[j][i] - lo[i]) / e_scale[i]) for j in range(m)] for i in range(m)]

    flipped = []
    for i in range(m):
        if A[i].count(1) > A[i].count(0):
            flipped.append(i)
            A[i] = [1 - x for x in A[i]]
            e_scale[i] = -e_scale[i]
            basis[m] = [a + b for a, b in zip(basis[m], basis[i])]
            basis[i] = [-x for x in basis[i]]

    T = _inverse(_columns_to_rows(basis))
    nf = NormalForm(
        tuple(tuple(r) for r in A),
        tuple(tuple(r) for r in T),
        tuple(e_scale) + tuple(f_scale),
        tuple(flipped),
    )
    if nf.apply(pair).gens != assemble(nf.A).gens:
        raise InternalInconsistency("recorded transform does not reproduce the normal form")
    return nf


def pair_facets(V: GeneratorSet, m: int | None = None) -> tuple[FacetClass, FacetClass]:
    """Facet classes spanned by the first ``m`` and the last ``m`` generators."""
    if m is None:
        m = V.n // 2
    return facet_by_indices(V, range(m)), facet_by_indices(V, range(m, 2 * m))


def _greedy_basis(V: GeneratorSet, indices: Sequence[int]) -> list[int]:
    chosen: list[int] = []
    for i in sorted(indices):
        if int_rank([V.int_gens[j] for j in chosen + [i]]) == len(chosen) + 1:
            chosen.append(i)
    return chosen


@dataclass(frozen=True)
class Reduction:
    """How ``conjugate_reduction`` got from ``Z(V)`` to ``Z(E u F)``.

    ``projected`` lists, per projection step, the original generator indices
    collapsed by that step.  ``e_indices``/``f_indices`` are original indices.
    """

    dims: tuple[int, ...]
    projected: tuple[tuple[int, ...], ...]
    e_indices: tuple[int, ...]
    f_indices: tuple[int, ...]
    reduced: GeneratorSet = field(repr=False)


def conjugate_reduction(V: GeneratorSet, P, Q) -> tuple[ConjugatedPair, Reduction]:
    """Reduce a facet pair of ``Z(V)`` to a conjugated pair.

    While the two facets share a generator, project along (the parallel class
    of) the lowest shared one.  Then take the lexicographically first bases
    of the two facet flats.
    """
    if P.id == Q.id:
        raise SameClass(f"facet class {P.id} given twice")
    cur = V
    p_idx, q_idx = list(P.indices), list(Q.indices)
    orig = list(range(V.n))
    dims = [V.dim]
    projected = []
    while True:
        shared = sorted(set(p_idx) & set(q_idx))
        if not shared:
            break
        cl = tuple(sorted(closure(cur, [shared[0]])))
        W = Flat(cl, Subspace.span([cur.gens[i] for i in cl], cur.dim))
        proj = project_along(cur, W)
        inv = {src: i for i, src in enumerate(proj.index_map)}
        projected.append(tuple(orig[i] for i in cl))
        p_idx = [inv[i] for i in p_idx if i in inv]
        q_idx = [inv[i] for i in q_idx if i in inv]
        orig = [orig[s] for s in proj.index_map]
        cur = proj.image
        dims.append(cur.dim)
    e = _greedy_basis(cur, p_idx)
    f = _greedy_basis(cur, q_idx)
    pair = ConjugatedPair.from_generators(cur, e, f)
    if len(e) != cur.dim - 1 or len(f) != cur.dim - 1 or not is_conjugated(pair.E, pair.F):
        raise InternalInconsistency("reduction did not end in a conjugated pair")
    return pair, Reduction(
        tuple(dims), tuple(projected), tuple(orig[i] for i in e), tuple(orig[i] for i in f), cur
    )
