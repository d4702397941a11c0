"""Exception hierarchy shared by the library and the command line."""


class FuzzyPNError(Exception):
    """Base class for every error raised by fuzzypn."""


class DegreeError(FuzzyPNError, ValueError):
    """A membership, threshold or truth value outside its allowed interval."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class UniverseMismatch(FuzzyPNError, ValueError):
    """Two fuzzy sets over different universes were combined."""


class UnknownReference(FuzzyPNError, LookupError):
    """A place, transition, state or word name that does not exist."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class DisabledTransition(FuzzyPNError):
    """Attempt to fire a transition that is not enabled at the given marking."""


class BudgetExceeded(FuzzyPNError):
    """Reachability exploration exceeded its marking budget."""


class ModelError(FuzzyPNError, ValueError):
    """A model document is malformed or fails validation."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
