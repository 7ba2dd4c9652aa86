class NormlabError(Exception):
    """Base class for engine errors."""


class ZeroVector(NormlabError):
    pass


class NonBracketable(NormlabError):
    pass


class DomainError(NormlabError, ValueError):
    pass


class EmptySliceSearch(NormlabError):
    pass


class BudgetExceeded(NormlabError):
    pass


class SymmetryViolation(NormlabError):
    pass
