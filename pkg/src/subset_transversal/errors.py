"""Exception hierarchy shared by every module of the package."""


class TransversalError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoop(TransversalError):
    def __init__(self, u):
        super().__init__(f"self-loop on vertex {u}")
        self.vertex = u


class VertexOutOfRange(TransversalError):
    def __init__(self, u, n):
        super().__init__(f"vertex {u} out of range for a graph on {n} vertices")
        self.vertex = u
        self.n = n


class FormatError(TransversalError):
    """Malformed instance or solution text; ``line`` is 1-indexed."""

    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class NotInClass(TransversalError):
    """The input is outside the graph class a solver requires.

    ``witness`` maps the pattern's vertices to graph vertices (a list indexed by
    pattern vertex), so it can be re-checked with ``find_induced``.
    """

    def __init__(self, pattern_name, witness=None):
        msg = f"graph is not {pattern_name}-free"
        if witness is not None:
            msg += f" (induced copy on {sorted(witness)})"
        super().__init__(msg)
        self.pattern_name = pattern_name
        self.witness = witness


class NotCograph(NotInClass):
    def __init__(self, witness):
        super().__init__("P4", witness)


class PatternTooLarge(TransversalError):
    pass


class InstanceTooLarge(TransversalError):
    pass


class NotATree(TransversalError):
    pass


class PreconditionViolated(TransversalError):
    pass


class GiveUp(TransversalError):
    """Rejection sampling ran out of draws."""

    def __init__(self, message, draws, last_witness=None):
        super().__init__(message)
        self.draws = draws
        self.last_witness = last_witness


class UnknownFixture(TransversalError):
    pass
