"""Exception hierarchy shared by every module of the package."""


class TokenGraphError(Exception):
    """Base class for all errors raised by tokengraphs."""


class ParameterError(TokenGraphError, ValueError):
    """Bad input: parameter below a family minimum, vertex out of range,
    degree mismatch between permutations, malformed file, and so on."""


class CapacityError(TokenGraphError):
    """The requested object exceeds the configured size budget."""


class ElementCapError(TokenGraphError):
    """Full enumeration of a group ran past ``element_cap`` elements."""


class ContractViolation(TokenGraphError):
    """A checked precondition or postcondition failed, e.g. a permutation
    handed in as an automorphism does not preserve adjacency."""


class DisconnectedError(ContractViolation):
    """Two vertices expected to be connected are not."""


class SearchTimeout(TokenGraphError):
    """The automorphism search ran past its time budget."""
