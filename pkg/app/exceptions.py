class ImmersionError(Exception):
    """Base class for every error raised by the immersion toolkit"""

    def __init__(self, message):
        super().__init__(message)


class InvalidParameterError(ImmersionError):
    """Exception raised when a numeric parameter is out of range"""

    def __init__(self, name, value, expected):
        super().__init__(f"Invalid {name}={value!r}: expected {expected}")


class GraphError(ImmersionError):
    """Exception raised when a graph violates the multigraph invariants"""


class GraphFormatError(GraphError):
    """Base class for graph file parse errors"""

    def __init__(self, line_number, detail):
        self.line_number = line_number
        super().__init__(f"Line {line_number}: {detail}")


class MalformedHeaderError(GraphFormatError):
    """Missing, repeated, or inconsistent 'p mg' header"""


class MalformedLineError(GraphFormatError):
    """A line that is neither a comment, the header, nor a valid edge line"""


class VertexOutOfRangeError(GraphFormatError):
    """Edge endpoint outside 1..n"""


class LoopEdgeError(GraphFormatError):
    """Edge line whose endpoints coincide"""


class BudgetExceededError(ImmersionError):
    """Exception raised when an exact search runs out of branch nodes"""

    def __init__(self, limit, what="search"):
        self.limit = limit
        super().__init__(f"Budget of {limit} branch nodes exceeded during {what}")


class NotClassTwoError(ImmersionError):
    """Exception raised when an operation needs chromatic index Δ+1 but got Δ"""

    def __init__(self, max_degree, chromatic_index):
        super().__init__(
            f"Graph is class 1 (Δ={max_degree}, χ'={chromatic_index}); "
            f"an edge-critical subgraph needs χ'=Δ+1"
        )


class ThomassenPreconditionError(ImmersionError):
    """Exception raised when thomassen_system is called outside Δ=d, χ'=d+1"""

    def __init__(self, d, max_degree, chromatic_index):
        super().__init__(
            f"Path system needs Δ=d and χ'=d+1 with d={d}, "
            f"got Δ={max_degree}, χ'={chromatic_index}"
        )


class NoThomassenSystemError(ImmersionError):
    """Exception raised when no pair of vertices carries d edge-disjoint paths"""

    def __init__(self, d):
        super().__init__(f"No pair of vertices is joined by {d} edge-disjoint paths")


class ClaimViolatedError(ImmersionError):
    """Exception raised when no third edge exists next to a lifted path"""

    def __init__(self, path_index, detail):
        self.path_index = path_index
        where = f" on path {path_index}" if path_index is not None else ""
        super().__init__(f"Third-neighbor claim violated{where}: {detail}")


class InvariantPanicError(ImmersionError):
    """Exception raised when a construction invariant fails inside a case"""

    def __init__(self, case, detail):
        self.case = case
        super().__init__(f"Invariant broken in case {case}: {detail}")


class UnreachableCaseError(InvariantPanicError):
    """Exception raised when the case classification matches no handler"""


class UnrepairableError(ImmersionError):
    """Exception raised when neither rerouting nor the oracle fixes a certificate"""

    def __init__(self, case, diagnostics):
        self.case = case
        self.diagnostics = diagnostics
        super().__init__(f"Certificate from case {case} unrepairable at budget: {diagnostics}")


class HostMismatchError(ImmersionError):
    """Exception raised when a certificate names a different host graph"""

    def __init__(self, detail):
        super().__init__(f"Certificate host does not match the graph: {detail}")


class UnsupportedHostError(ImmersionError):
    """Exception raised when the verifier is handed a multigraph host"""

    def __init__(self, detail):
        super().__init__(f"Unsupported host graph: {detail}")


class UnverifiedCertificateError(ImmersionError):
    """Exception raised when an input certificate fails verification"""

    def __init__(self, failed_checks):
        super().__init__(f"Certificate failed verification: {', '.join(failed_checks)}")


class EventPublishingError(ImmersionError):
    """Exception raised when an in-process event handler fails"""

    def __init__(self, event_type, original_exception):
        self.event_type = event_type
        super().__init__(f"Failed to publish event '{event_type}': {original_exception}")
