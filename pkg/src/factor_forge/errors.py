"""Exception hierarchy shared by every module."""


class FactorForgeError(Exception):
    """Base class for all library errors."""


class GraphError(FactorForgeError, ValueError):
    """Invalid simple-graph construction (loop, parallel edge, bad index)."""


class EmptyGraphError(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OutOfScopeError(FactorForgeError, ValueError):
    """Parameters outside the domain a formula is stated for."""


class SearchExhaustedError(FactorForgeError):
    pass


class NotBipartiteError(FactorForgeError, ValueError):
    pass


class ConditionViolatedError(FactorForgeError, ValueError):
    """Two adjacent vertices both have degree divisible by the colour count."""

    def __init__(self, message, witness):
        self.witness = witness
        super().__init__(f"{message}: witness edge {witness}")


class BalancingFailedError(FactorForgeError):
    pass


class InvalidFactorCountError(FactorForgeError, ValueError):
    pass


class XOutOfRangeError(FactorForgeError, ValueError):
    pass


class ConstructionFailedError(FactorForgeError):
    pass


class TooLargeError(FactorForgeError):
    """Exhaustive search refused because the instance exceeds its edge cap."""


class InvalidParamsError(FactorForgeError, ValueError):
    pass


class InfeasibleParamsError(InvalidParamsError):
    pass


class CertificateFailedError(FactorForgeError):
    pass


class InfeasibleError(FactorForgeError, ValueError):
    """A requested random corpus cannot be generated."""
