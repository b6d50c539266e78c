"""Exception hierarchy shared by every formlab module."""


class FormlabError(Exception):
    """Base class; the CLI maps it to exit code 1."""


class ParseError(FormlabError):
    def __init__(self, message, line=None, position=None):
        self.message = message
        self.line = line
        self.position = position
        where = ""
        if line is not None and position is not None:
            where = f"line {line}, position {position}: "
        elif line is not None:
            where = f"line {line}: "
        elif position is not None:
            where = f"position {position}: "
        super().__init__(where + message)


class CapacityError(FormlabError):
    """A computation would exceed a documented size bound."""


class DomainError(FormlabError):
    """An operation was applied outside the domain where it is defined."""


class IntegrityError(FormlabError):
    """A post-condition check failed (e.g. a predicate is not N0-closed)."""
