"""Exception types raised across the package."""


class SplitkitError(Exception):
    """Base class for every error raised by this package."""


class OrderOutOfRange(SplitkitError):
    """Graph order outside the range supported by the operation."""


class LoopEdge(SplitkitError):
    """An edge (v, v) was supplied; loops are not representable."""


class VertexOutOfRange(SplitkitError):
    """A vertex id outside 0..n-1."""


class NotAnEdge(SplitkitError):
    """The given pair is not an edge of the graph."""


class EmptySet(SplitkitError):
    """An operation requiring a nonempty vertex set received an empty one."""


class OrderTooLargeForIsomorphism(SplitkitError):
    """Brute-force isomorphism testing is capped at order 12."""


class MalformedGraph6(SplitkitError):
    """The text is not a valid graph6 line."""


class UnsupportedOrder(SplitkitError):
    """graph6 order outside 1..64."""


class MalformedCorpus(SplitkitError):
    """A line of a graph6 corpus failed to parse."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class OrderTooLargeForColoring(SplitkitError):
    """Exact chromatic number is capped at order 12."""


class OrderTooLargeForPerfection(SplitkitError):
    """The perfection test is capped at order 12."""


class NotSplit(SplitkitError):
    """The graph admits no partition into a clique and an independent set."""


class InvalidPartition(SplitkitError):
    """The supplied clique/independent-set partition is not valid for the graph."""


class UnclassifiablePartition(SplitkitError):
    """A valid partition whose sizes match none of the three admissible cases.

    Can never fire for a correct implementation; the verification harness
    asserts its absence over every graph it sweeps.
    """


class NotPseudoSplit(SplitkitError):
    """The graph has an induced 2K2 or C4."""


class NoInducedC4(SplitkitError):
    """Witness search requires an induced C4 in the input."""


class NoInduced2K2(SplitkitError):
    """Witness search requires an induced 2K2 in the input."""


class IsStar(SplitkitError):
    """Operation undefined on stars and on the one-vertex graph."""
