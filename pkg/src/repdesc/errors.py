"""Exception hierarchy for repdesc.

Every failure the library can signal deliberately has its own class, so
callers (and the CLI) can map outcomes to exit codes without string matching.
RepdescError subclasses carry a human-readable message and, where useful, a
``detail`` dict with the offending data.
"""

from __future__ import annotations


class RepdescError(Exception):
    """Base class for all repdesc errors."""

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.detail = detail


# cyclotomic arithmetic

class DivisionByZero(RepdescError):
    """Division by the zero element of a cyclotomic field."""


class IncompatibleConductor(RepdescError):
    """Malformed conductor data, e.g. an automorphism unit not coprime to n."""


class ZeroPolynomial(RepdescError):
    """An operation that needs a nonzero polynomial received zero."""


# groups

class InvalidPermutation(RepdescError):
    """A permutation literal is not a bijection on its declared points."""


class OrderBoundExceeded(RepdescError):
    """Group closure grew past the configured order cap."""


class NotNormal(RepdescError):
    """A subgroup required to be normal is not."""


class NotSubgroup(RepdescError):
    """An element set is not contained in the claimed parent group."""


class GroupMismatch(RepdescError):
    """Two objects that must live over the same group do not."""


class NoProperStep(RepdescError):
    """No proper normal step exists (the two ends of the interval coincide)."""


class PrimalityViolated(RepdescError):
    """A step index that must be prime is not; internal consistency failure."""


# representations

class NotConstituent(RepdescError):
    """The given character does not occur in the relevant restriction."""


# decomposition engine

class NoIntegralSolution(RepdescError):
    """The integer decomposition system has no solution; implementation bug."""


class HypothesisViolation(RepdescError):
    """A stated hypothesis of the trichotomy classification fails."""


class NotNilpotent(RepdescError):
    """The quotient that must be nilpotent is not."""


class NotIrreducible(RepdescError):
    """The representation that must be irreducible is not."""


class InternalCaseViolation(RepdescError):
    """The classification returned a case the calling argument rules out."""


class CertificateCheckFailed(RepdescError):
    """A freshly built certificate failed its own verification; bug trap."""


# descent

class NotAbsolutelyIrreducible(RepdescError):
    """Descent requires an absolutely irreducible representation."""


class TraceNotRational(RepdescError):
    """A trace value is outside the requested base field."""


class WitnessInvalid(RepdescError):
    """The supplied eigenvalue witness fails re-validation."""


class CocycleCheckFailed(RepdescError):
    """The normalized intertwiner family is not a cocycle; bug trap."""


class RetryLimitExceeded(RepdescError):
    """No invertible averaging matrix found within the trial budget."""


class DescentCheckFailed(RepdescError):
    """The conjugated representation is not fixed by the base; bug trap."""


class EntriesNotInBaseField(RepdescError):
    """Matrix entries required to lie in the base field do not."""


class CharacterMismatch(RepdescError):
    """A required exact character identity fails."""


class ConstituentMissing(RepdescError):
    """A summand that must be realizable over the base field is not.

    Raised instead of guessing when an isotypic block of an allegedly
    base-rational representation cannot be presented over the base field
    (the classic obstruction: a 2-dimensional quaternion-group block claimed
    over the rationals).
    """


# harness

class WitnessUnavailable(RepdescError):
    """No multiplicity-one eigenvalue witness exists for some pair."""


class IdentityCheckFailed(RepdescError):
    """The assembled virtual-sum identity fails classwise; bug trap."""


# input handling

class InputError(RepdescError):
    """Malformed JSON input document."""
