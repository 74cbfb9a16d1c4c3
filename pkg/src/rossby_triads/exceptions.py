"""Exception types raised by the library."""


class TriadError(ValueError):
    """Base class for all library errors."""


class ZeroVectorError(TriadError):
    pass


class NotOnSurfaceError(TriadError):
    pass


class ExceptionalParameterError(TriadError):
    """A parameter or quadruple lands in the indeterminacy locus of a map."""


class SingularFiberError(TriadError):
    pass


class ExceptionalPointError(TriadError):
    """The fiber/Weierstrass maps are undefined at this point."""


class OffCurveError(TriadError):
    pass
