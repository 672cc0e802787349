"""Exception types raised by nbstab.

Every error derives from :class:`StabError` so callers (and the CLI) can
catch the whole family at once.  Errors that carry a counterexample expose
it as ``witness``.
"""

from __future__ import annotations


class StabError(Exception):
    """Base class for all nbstab errors."""


# -- fields and polynomials -------------------------------------------------
class NonPrime(StabError):
    pass


class FieldTooLarge(StabError):
    pass


class NotASubfield(StabError):
    pass


class NotCoprime(StabError):
    pass


class DivisionByZeroPoly(StabError):
    pass


class MixedFields(StabError):
    pass


# -- codes ------------------------------------------------------------------
class MixedAmbient(StabError):
    pass


class NotLinear(StabError):
    pass


class CodeTooLarge(StabError):
    pass


class NotASubcode(StabError):
    pass


class NotCosetClosed(StabError):
    pass


class WitnessError(StabError):
    """An error that carries an explicit counterexample."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSelfOrthogonal(WitnessError):
    pass


class NestingViolated(WitnessError):
    pass


class ImpureCarrier(StabError):
    pass


# -- families ---------------------------------------------------------------
class BadParameters(StabError):
    pass


class NotPrime(BadParameters):
    pass


class NotResidue(BadParameters):
    pass


class DeltaOutOfRange(BadParameters):
    pass


class NotExtendable(BadParameters):
    pass


class OrderOutOfRange(BadParameters):
    pass


class InconsistentSize(BadParameters):
    pass


# -- bounds -----------------------------------------------------------------
class NonIntegerResult(StabError):
    pass


class OutOfRange(BadParameters):
    pass


class TooLarge(StabError):
    pass


# -- puncturing and derivations ---------------------------------------------
class NotInPunctureCode(StabError):
    pass


class ZeroWeightWord(StabError):
    pass


class SearchSpaceTooLarge(StabError):
    pass


class ZeroDimensional(StabError):
    pass


class NotPure(StabError):
    pass


class TooShort(StabError):
    pass


class NoRoom(StabError):
    pass


class NotNested(WitnessError):
    pass


class OddCharacteristic(StabError):
    pass


class NotABasis(StabError):
    pass
