"""Exception hierarchy shared by every module of the package."""


class SeifertError(Exception):
    """Base class for all errors raised by seifert_taut."""


class InvalidInvariant(SeifertError, ValueError):
    """A slope or invariant violates the structural rules (a = 0, common factors, genus > 0)."""


class InvalidInput(SeifertError, ValueError):
    """Arguments outside an operation's domain."""


class GeometryNotApplicable(SeifertError):
    """The geometry trichotomy is only stated for rational homology spheres with n >= 3."""


class ParseError(SeifertError, ValueError):
    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


# Precondition failures of the constructive witness engine.

class ConstructionError(SeifertError):
    pass


class NotZHS(ConstructionError):
    pass


class WrongB0(ConstructionError):
    pass


class PoincareExcluded(ConstructionError):
    pass


class SphereExcluded(ConstructionError):
    pass


class ConstructionMismatch(ConstructionError):
    """A constructed (m, alpha) failed independent verification. Never silently corrected."""
