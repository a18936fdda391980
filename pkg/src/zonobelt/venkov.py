"""Space-filling test for zonotopes and its closure properties.

``Z(V)`` tiles space iff, for every closed generator subset ``U`` of rank
``d-2``, the generators outside ``U`` project to at most three directions
modulo ``lin U``.  The projection depends only on ``lin U``, so scanning
ridge flats covers every rank-``d-2`` subset.

Central symmetry of the facets is not tested separately: every face of a
zonotope is a zonotope and therefore centrally symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InternalInconsistency, NegativeVerdict
from .exactlin import direction_classes, quotient_project
from .zonotope import (
    Flat,
    GeneratorSet,
    RidgeClass,
    reduce_to_full_rank,
    ridge_classes,
    validate,
)


@dataclass(frozen=True)
class VenkovVerdict:
    is_parallelohedron: bool
    ridge_reports: tuple[tuple[RidgeClass, int], ...]
    witness: RidgeClass | None = None

    def __bool__(self) -> bool:
        return self.is_parallelohedron

    @property
    def witness_count(self) -> int | None:
        if self.witness is None:
            return None
        return dict((r.id, c) for r, c in self.ridge_reports)[self.witness.id]


def ridge_direction_count(V: GeneratorSet, ridge: RidgeClass) -> int:
    members = set(ridge.indices)
    outside = [i for i in range(V.n) if i not in members]
    return len(direction_classes(quotient_project(V, ridge.flat.space, outside)))


def venkov_test(V: GeneratorSet) -> VenkovVerdict:
    if "venkov" in V._memo:
        return V._memo["venkov"]
    if V.dim < 2:
        raise ValueError("the space-filling test needs dimension at least 2")
    reports = []
    witness = None
    for ridge in ridge_classes(V):
        count = ridge_direction_count(V, ridge)
        reports.append((ridge, count))
        if count > 3 and witness is None:
            witness = ridge
    verdict = VenkovVerdict(witness is None, tuple(reports), witness)
    V._memo["venkov"] = verdict
    return verdict


def is_parallelohedron(V: GeneratorSet) -> bool:
    """Short-circuiting variant of :func:`venkov_test`."""
    if "venkov" in V._memo:
        return V._memo["venkov"].is_parallelohedron
    return all(ridge_direction_count(V, r) <= 3 for r in ridge_classes(V))


def _require_positive(V: GeneratorSet) -> None:
    verdict = venkov_test(V)
    if not verdict:
        raise NegativeVerdict(
            f"input is not space-filling (ridge {verdict.witness.indices} "
            f"has {verdict.witness_count} directions)"
        )


def _sub_verdict(W: GeneratorSet, what: str) -> VenkovVerdict:
    W = validate(reduce_to_full_rank(W))
    if W.dim < 2:
        # segments and points tile trivially
        return VenkovVerdict(True, ())
    verdict = venkov_test(W)
    if not verdict:
        raise InternalInconsistency(
            f"{what} is not space-filling although the source zonotope is "
            f"(ridge {verdict.witness.indices}, {verdict.witness_count} directions)"
        )
    return verdict


def check_subset_closure(V: GeneratorSet, S: Iterable[int]) -> VenkovVerdict:
    """Verdict for ``Z(S)``; a sub-zonotope of a parallelohedron must tile."""
    _require_positive(V)
    S = sorted(set(S))
    if not S:
        return VenkovVerdict(True, ())
    return _sub_verdict(V.subset(S), f"sub-zonotope {S}")


def check_scaling(V: GeneratorSet, index: int, alpha) -> VenkovVerdict:
    """Verdict after rescaling one generator; must agree with ``V``'s."""
    base = venkov_test(V)
    verdict = venkov_test(V.scaled(index, alpha))
    if bool(verdict) != bool(base):
        raise InternalInconsistency(f"rescaling generator {index} by {alpha} changed the verdict")
    return verdict


def check_projection(V: GeneratorSet, flat: Flat) -> VenkovVerdict:
    """Verdict for the projection of ``Z(V)`` along one of its faces."""
    _require_positive(V)
    members = set(flat.indices)
    keep = [i for i in range(V.n) if i not in members]
    if not keep:
        return VenkovVerdict(True, ())
    gens = quotient_project(V, flat.space, keep)
    image = GeneratorSet(V.dim - flat.k, tuple(gens), tuple(V.label(i) for i in keep))
    return _sub_verdict(image, f"projection along {flat.indices}")
