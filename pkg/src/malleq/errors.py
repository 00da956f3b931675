"""Exception hierarchy shared by every module."""


class MalleqError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MalleqError):
    def __init__(self, message, text="", pos=0, source=None):
        self.pos = pos
        self.source = source
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.col = line, col
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{col}: {message}")


class ProofError(MalleqError):
    """A rule application that violates its clause.

    ``path`` is the tuple of premise indices leading from the root to the
    offending node.
    """

    def __init__(self, message, path=()):
        self.path = tuple(path)
        super().__init__(f"at node {format_path(self.path)}: {message}")


class NotFreeError(MalleqError):
    pass


class UnboundVariableError(MalleqError):
    pass


class BudgetExceeded(MalleqError):
    pass


class ShapeMismatch(MalleqError):
    """A rewrite was asked to act on a proof of the wrong shape."""


class GraphError(MalleqError):
    pass


def format_path(path):
    return "root" + "".join(f".{i}" for i in path)
