"""Exception hierarchy shared by the qha modules."""


class QhaError(Exception):
    pass


class InputError(QhaError, ValueError):
    """Bad input: malformed presentation, unknown vertex, bad family parameter."""


class PresentationSyntaxError(InputError):
    def __init__(self, lineno, line, reason):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class UndefinedSymbol(InputError):
    pass


class DuplicateName(InputError):
    pass


class NonComposableRelation(InputError):
    pass


class NonAdmissibleRelation(InputError):
    pass


class NonMonomialRelation(InputError):
    pass


class RedundantRelationRemoved(UserWarning):
    pass


class UnknownVertex(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MBelowMinimum(InputError):
    pass


class InfiniteDimensional(QhaError):
    pass


class BasisLimitExceeded(QhaError):
    pass


class NotComposable(QhaError, ValueError):
    pass


class VNotInFinitePdClass(QhaError, ValueError):
    """Some simple in V has infinite projective dimension."""


class TooManySimples(QhaError, ValueError):
    pass


class LiftFailure(QhaError, RuntimeError):
    pass


class Undecided(QhaError):
    """Isomorphism search exhausted its budget without a verdict."""
