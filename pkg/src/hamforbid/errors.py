"""Exception types shared across the package."""


class HamforbidError(Exception):
    """Base class for all package errors."""


class Graph6Error(HamforbidError):
    """Malformed graph6 record; ``offset`` is the byte position at fault."""

    def __init__(self, offset: int, message: str) -> None:
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


class ResourceLimitError(HamforbidError):
    """An exhaustive computation was asked to exceed its vertex cap."""


class PreconditionError(HamforbidError):
    """A checked precondition failed; ``condition`` names which one."""

    def __init__(self, condition: str, message: str = "") -> None:
        super().__init__(f"{condition}: {message}" if message else condition)
        self.condition = condition


class ContextError(HamforbidError):
    """A surgery context could not be assembled from the given pieces."""


class HypothesisError(HamforbidError):
    """The input graph does not satisfy the hypotheses a routine requires."""


class InternalConsistencyError(HamforbidError):
    """A structural deduction failed on a longest cycle.

    This is never a valid end state: it means either the cycle handed in
    was not actually longest, or some earlier hypothesis check is buggy.
    ``step`` names the deduction that failed.
    """

    def __init__(self, step: str, message: str = "") -> None:
        super().__init__(f"{step}: {message}" if message else step)
        self.step = step


class AssemblyError(HamforbidError):
    """A final-structure check failed; ``check`` names the equality."""

    def __init__(self, check: str, message: str = "") -> None:
        super().__init__(f"{check}: {message}" if message else check)
        self.check = check
