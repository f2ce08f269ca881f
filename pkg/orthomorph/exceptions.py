"""
Simple submodule that enumerates the exceptions raised by the orthomorph
library. Invalid arguments also derive from ValueError so that callers
outside the package can catch them generically.
"""


class OrthomorphError(Exception):
    """ Base class for all library errors """


class DomainError(OrthomorphError, ValueError):
    """ An argument lies outside the domain of the operation """


class GroupMismatchError(DomainError):
    """ Elements from two different groups were combined """


class GroupSpecError(DomainError):
    """ A group description could not be parsed """


class PreconditionError(OrthomorphError, ValueError):
    """ A mathematical precondition of the operation does not hold """


class IdentityPresentError(PreconditionError):
    """ The identity element appears in a set that must avoid it """


class SumNonzeroError(PreconditionError):
    """ A set does not have the sum required by the operation """


class DivisibilityError(PreconditionError):
    """ Block sizes do not divide (or add up to) the size of the ground set """


class BudgetExceededError(OrthomorphError):
    """ A search or enumeration ran out of its node or time budget """

    def __init__(self, message, nodes=0):
        self.nodes = nodes
        super(BudgetExceededError, self).__init__(message)


class CertificateError(OrthomorphError, ValueError):
    """ A certificate document does not follow the expected schema """
