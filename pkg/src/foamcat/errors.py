"""Exception types shared across the package."""


class FoamcatError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(FoamcatError, TypeError):
    """Arithmetic between elements of different ground rings."""


class UndefinedDegreeError(FoamcatError):
    """q-degree of the zero polynomial or zero morphism was requested."""


class InhomogeneousError(FoamcatError):
    """A q-degree was requested for an inhomogeneous element.

    Carries the offending monomials / terms in ``parts``.
    """

    def __init__(self, message, parts=()):
        super().__init__(message)
        self.parts = tuple(parts)


class ColorError(FoamcatError, ValueError):
    """A generator was built with colors violating its constraints."""


class CompositionError(FoamcatError, ValueError):
    """Boundary mismatch when composing morphisms or stacking objects."""


class ParseError(FoamcatError, ValueError):
    """DSL syntax or constraint error, with position information."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + loc)
        self.line = line
        self.column = column


class StuckFoamError(FoamcatError):
    """Closed-foam evaluation found no applicable rule.

    Carries a text dump of the offending foam so the failure is
    reproducible.
    """

    def __init__(self, message, dump=""):
        super().__init__(message + ("\n" + dump if dump else ""))
        self.dump = dump


class InconclusiveError(FoamcatError):
    """A closure family failed rank certification.

    Equality checks raise this instead of returning a possibly wrong
    verdict.
    """
