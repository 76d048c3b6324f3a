"""Exception hierarchy shared by all modules.

Every domain error carries a stable ``code`` (its class name) so the CLI
can report it without string matching.
"""


class GriessError(Exception):
    @property
    def code(self):
        return type(self).__name__


class ZeroDenominator(GriessError, ZeroDivisionError):
    pass


class SingularMatrix(GriessError):
    pass


class ParseError(GriessError, ValueError):
    pass


class DataFileMissing(GriessError, FileNotFoundError):
    pass


class ChecksumMismatch(GriessError):
    pass


class DegreeUnderflow(GriessError):
    pass


class DegreeMismatch(GriessError):
    pass


class UnsupportedDegree(GriessError):
    pass


class SingularGram(SingularMatrix):
    pass


class NotDivisible(GriessError):
    """Exact polynomial division left a remainder."""


class IrreducibleTerm(GriessError):
    pass


class MissingInvariant(GriessError, KeyError):
    pass


class NonHalfInteger(GriessError, ValueError):
    pass


class UnsupportedTopWeight(GriessError):
    pass


class NotCoprime(GriessError, ValueError):
    pass


class SingularSystem(SingularMatrix):
    pass


class DimensionMismatch(GriessError, ValueError):
    pass


class NoSolution(GriessError):
    pass


class UnboundedSearch(GriessError):
    pass


class MissingSign(GriessError, KeyError):
    pass
