"""Exception types raised across the package."""


class SalimitError(Exception):
    """Base class for all errors raised by this package."""


class IndexBeyondCertainty(SalimitError):
    """A predicate tree was queried past its declared certainty bound."""


class BranchCheckFailed(SalimitError):
    """A branch witness is not a branch of its tree to the requested depth."""


class NotInX(SalimitError):
    """A point was expected to lie in the subshift but does not."""


class NotInLanguage(SalimitError):
    """A finite word was expected to occur in the subshift but does not."""


class ParseFailure(SalimitError):
    """A point that must carry block structure failed to parse."""


class ResourceLimit(SalimitError):
    """An enumeration exceeded its node budget."""


class OutOfDomain(SalimitError):
    """A real argument lies outside the unit interval."""


class CertificationFailed(SalimitError):
    """No certified answer could be produced at the requested depth."""


class SurjectivityViolation(SalimitError):
    """A sampled word of a language has no predecessor symbol."""
