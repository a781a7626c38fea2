"""Exception types shared across the toolkit."""


class HypergraphError(Exception):
    """Base class for all errors raised by this package."""


class EmptyFamily(HypergraphError):
    """The edge family is empty."""


class EmptyEdge(HypergraphError):
    """A hyperedge has no vertices."""


class EmptyFile(HypergraphError):
    """An input file contains no hyperedge lines."""


class EmptySet(HypergraphError):
    """A set-distance query received an empty vertex set."""


class SpernerViolation(HypergraphError):
    """One hyperedge contains another while the Sperner gate is on."""

    def __init__(self, inner: int, outer: int):
        self.inner = inner
        self.outer = outer
        super().__init__(
            f"edge {inner + 1} is contained in edge {outer + 1}; "
            "pass allow_non_sperner to accept this input"
        )


class NotSperner(HypergraphError):
    """An operation whose correctness needs the Sperner property was given
    a hypergraph that violates it."""


class Disconnected(HypergraphError):
    """The operation is undefined on disconnected hypergraphs."""


class VertexOutOfRange(HypergraphError):
    """A vertex id does not exist in the hypergraph."""


class NotAPartition(HypergraphError):
    """The given class list does not partition the vertex set."""


class CapExceeded(HypergraphError):
    """Instance size exceeds a solver or recognition cap; raise the cap to
    proceed (the solvers refuse rather than approximate)."""


class InvalidSpec(HypergraphError):
    """A family generator received out-of-range parameters."""


class HypothesisNotMet(HypergraphError):
    """A closed-form value was requested outside the hypothesis under which
    the formula is known to hold; the message names the failed condition."""
