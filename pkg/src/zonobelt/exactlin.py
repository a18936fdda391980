"""Exact rational linear algebra used by every other module.

Vectors are plain tuples of :class:`fractions.Fraction`.  Nothing here ever
rounds, so rank and collinearity answers are decisions, not estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction
RVector = tuple  # tuple[Fraction, ...]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3"`` or ``"-1/2"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def vec(entries: Iterable) -> RVector:
    return tuple(as_rational(x) for x in entries)


def rref(rows: Sequence[Sequence]) -> tuple[tuple[RVector, ...], int, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns ``(reduced, rank, pivots)`` where ``reduced`` holds only the
    nonzero rows, each with a leading 1.  Two inputs with the same row span
    give identical output.
    """
    m = [list(vec(r)) for r in rows]
    if not m:
        return (), 0, ()
    width = len(m[0])
    if any(len(r) != width for r in m):
        raise ValueError("rows have different lengths")
    pivots = []
    r = 0
    for c in range(width):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(x) for x in m[:r]), r, tuple(pivots)


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    if all(isinstance(x, int) for v in vectors for x in v):
        return int_rank(vectors)
    return rref(vectors)[1]


def int_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(v) for v in vectors]
    if not m:
        return 0
    width = len(m[0])
    r = 0
    for c in range(width):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                row = [pv * a - f * b for a, b in zip(m[i], prow)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                if g > 1:
                    row = [x // g for x in row]
                m[i] = row
        r += 1
        if r == len(m):
            break
    return r


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant (Bareiss elimination; exact for ints and Fractions)."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num // prev if type(num) is int and type(prev) is int else num / prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1])


def primitive(v: Sequence) -> tuple[int, ...]:
    """Integer-primitive multiple of ``v`` whose first nonzero entry is positive.

    The zero vector maps to the zero tuple.
    """
    fr = [as_rational(x) for x in v]
    den = 1
    for x in fr:
        q = x.denominator
        if q != 1:
            den = den * q // gcd(den, q)
    ints = [x.numerator * (den // x.denominator) for x in fr]
    return _int_primitive(ints)


def _int_primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


@dataclass(frozen=True, order=True)
class DirectionClass:
    """A line through the origin, keyed by its primitive integer representative."""

    representative: tuple[int, ...]

    @classmethod
    def of(cls, v: Sequence) -> "DirectionClass":
        if all(isinstance(x, int) for x in v):
            rep = _int_primitive(v)
        else:
            rep = primitive(v)
        if not any(rep):
            raise ValueError("the zero vector has no direction")
        return cls(rep)


def direction_classes(vectors: Iterable[Sequence]) -> set[DirectionClass]:
    """Distinct directions among ``vectors``; zero vectors are ignored."""
    out = set()
    for v in vectors:
        if any(v):
            out.add(DirectionClass.of(v))
    return out


@dataclass(frozen=True)
class Subspace:
    """Linear subspace stored by its canonical RREF basis.

    Equality of two instances is equality of spans because the basis is
    canonical.
    """

    ambient: int
    basis: tuple[RVector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Sequence[Sequence], ambient: int | None = None) -> "Subspace":
        if ambient is None:
            if not vectors:
                raise ValueError("ambient dimension needed for an empty span")
            ambient = len(vectors[0])
        basis, _, pivots = rref(vectors) if vectors else ((), 0, ())
        return cls(ambient, basis, pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def annihilator(self) -> tuple[tuple[int, ...], ...]:
        """Integer basis of the orthogonal complement, one row per free column."""
        free = [j for j in range(self.ambient) if j not in self.pivots]
        rows = []
        for j in free:
            x = [Fraction(0)] * self.ambient
            x[j] = Fraction(1)
            for row, p in zip(self.basis, self.pivots):
                x[p] = -row[j]
            rows.append(primitive(x))
        return tuple(rows)

    def contains(self, v: Sequence) -> bool:
        return all(sum(a * b for a, b in zip(w, v)) == 0 for w in self.annihilator)

    def intersection(self, other: "Subspace") -> "Subspace":
        # U ∩ W is cut out by the union of both sets of linear constraints
        constraints = list(self.annihilator) + list(other.annihilator)
        if not constraints:
            return self
        kernel = Subspace.span(constraints, self.ambient).annihilator
        if not kernel:
            return Subspace(self.ambient, (), ())
        return Subspace.span(list(kernel), self.ambient)

    def coordinates_modulo(self, v: Sequence) -> RVector:
        """Canonical quotient coordinates of ``v``.

        The basis is extended to the whole space by the standard vectors at
        the non-pivot positions (lowest first); the returned tuple holds the
        coefficients on those standard vectors.
        """
        v = vec(v)
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j in range(self.ambient):
                    if row[j]:
                        out[j] -= c * row[j]
        piv = set(self.pivots)
        return tuple(out[j] for j in range(self.ambient) if j not in piv)


def members_of(V, space: Subspace) -> frozenset[int]:
    """Indices of the generators of ``V`` lying in ``space``."""
    ann = space.annihilator
    return frozenset(
        i for i, g in enumerate(V.int_gens)
        if all(sum(a * b for a, b in zip(w, g)) == 0 for w in ann)
    )


def closure(V, S: Iterable[int]) -> frozenset[int]:
    """Indices of all generators of ``V`` lying in the span of the ones in ``S``."""
    S = frozenset(S)
    if not S:
        return S
    return members_of(V, Subspace.span([V.gens[i] for i in sorted(S)], V.dim))


def quotient_project(V, flat, targets: Iterable[int]) -> list[RVector]:
    """Images of the chosen generators in ``R^d / flat`` (canonical coordinates).

    ``flat`` may be a :class:`Subspace` or anything with a ``space`` attribute.
    A target maps to the zero vector exactly when it lies in the flat.
    """
    space = getattr(flat, "space", flat)
    return [space.coordinates_modulo(V.gens[i]) for i in targets]
