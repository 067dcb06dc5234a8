"""Exception hierarchy shared by every module of the package."""


class LeviWeylError(Exception):
    """Base class for all errors raised by leviweyl."""


class ConstructionError(LeviWeylError, ValueError):
    """Invalid family/rank or malformed object construction."""


class DomainError(LeviWeylError, ValueError):
    """An argument lies outside the domain of an operation."""


class LeviValidationError(LeviWeylError, ValueError):
    """A root subset is not closed, not symmetric, or not made of roots."""


class NonClassicalComponentError(LeviWeylError):
    """A connected set of simple roots matched no classical Cartan matrix."""


class NotAModuleCharacterError(LeviWeylError, ValueError):
    """Decomposition produced a negative multiplicity."""


class PreconditionError(LeviWeylError, ValueError):
    """A verification check was called outside its hypothesis."""


class ParseError(LeviWeylError, ValueError):
    """Textual weight/root/Levi syntax could not be parsed."""
