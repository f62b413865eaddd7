"""Exception types shared across the package."""


class HomlabError(Exception):
    pass


class MalformedInputError(HomlabError):
    """Bad vertex ids, unparsable files, invalid constructor arguments."""


class ContractViolationError(HomlabError):
    """An operation was called with input violating its precondition."""


class DialectError(MalformedInputError):
    """A CNF formula does not satisfy the dialect required by a generator."""


class WeightOverflowError(HomlabError):
    """Extended-weight arithmetic left the signed 64-bit range."""


class ReductionFidelityError(HomlabError):
    """A generated arrangement does not realize the abstract instance graph."""


class BudgetExceededError(HomlabError):
    """A search or enumeration exceeded its configured budget.

    Distinct from a definitive negative answer.
    """

    def __init__(self, message, partial_bound=None):
        super().__init__(message)
        self.partial_bound = partial_bound
