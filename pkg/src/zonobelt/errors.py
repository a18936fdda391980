"""Exception hierarchy.  The CLI maps these onto exit codes."""


class ZonobeltError(Exception):
    exit_code = 1


class ParseError(ZonobeltError):
    exit_code = 2

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ValidationError(ZonobeltError):
    exit_code = 3


class ZeroGenerator(ValidationError):
    def __init__(self, index: int):
        super().__init__(f"generator {index} is the zero vector")
        self.index = index


class RankDeficient(ValidationError):
    def __init__(self, rank: int, dim: int):
        super().__init__(f"generators have rank {rank} in dimension {dim}")
        self.rank = rank
        self.dim = dim


class SizeMismatch(ValidationError):
    pass


class BadSubset(ValidationError):
    pass


class SameClass(ValidationError):
    pass


class NotAFlat(ValidationError):
    pass


class NegativeVerdict(ZonobeltError):
    """A positive parallelohedron verdict was required and not obtained."""

    exit_code = 4


class NotConjugated(NegativeVerdict):
    def __init__(self, failing):
        super().__init__(f"sets are not conjugated (failing check {failing})")
        self.failing = failing


class NotParallelohedron(NegativeVerdict):
    def __init__(self, coordinate: int, values=()):
        super().__init__(
            f"coordinate {coordinate} shows {len(values)} distinct values {sorted(values)}; "
            "the zonotope is not space-filling"
        )
        self.coordinate = coordinate
        self.values = tuple(values)


class DegenerateAllEqual(NegativeVerdict):
    def __init__(self, coordinate: int):
        super().__init__(
            f"all F-vectors share coordinate {coordinate}; input cannot be a conjugated pair"
        )
        self.coordinate = coordinate


class Disconnected(ZonobeltError):
    exit_code = 5

    def __init__(self, source: int, target: int):
        super().__init__(f"no belt path between facet classes {source} and {target}")
        self.source = source
        self.target = target


class InternalInconsistency(ZonobeltError):
    exit_code = 5


class BoundViolation(ZonobeltError):
    exit_code = 5

    def __init__(self, message: str, matrix=None):
        super().__init__(message)
        self.matrix = matrix
