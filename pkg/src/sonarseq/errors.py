"""Exception types raised across the package."""


class SonarseqError(Exception):
    """Base class for all errors raised by this package."""


# --- finite fields ---

class NotPrime(SonarseqError, ValueError):
    """A value that must be prime is not."""


class NotPrimePower(SonarseqError, ValueError):
    """A value that must be a prime power is not."""


class DegreeZero(SonarseqError, ValueError):
    """Extension degree must be at least 1."""


class OrderOverflow(SonarseqError, OverflowError):
    """Field order too large for the supported desk-scale range."""


class DivisionByZero(SonarseqError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class ZeroElement(SonarseqError, ValueError):
    """Zero passed where a nonzero field element is required."""


class LogOfZero(SonarseqError, ValueError):
    """Discrete logarithm of zero requested."""


class NotPrimitive(SonarseqError, ValueError):
    """Element does not generate the multiplicative group."""


# --- Sidon set constructions ---

class AlphaInBaseField(SonarseqError, ValueError):
    """The translating element lies in the base subfield (degree < 2)."""


class NotSidon(SonarseqError, ValueError):
    """Set failed the Sidon (distinct pairwise sums) check."""


# --- folding ---

class ModulusMismatch(SonarseqError, ValueError):
    """Set modulus does not factor as height * divisor."""


class CoverageFailure(SonarseqError, ValueError):
    """Residues of the set are not a bijection onto the index range."""


# --- classical constructions ---

class ANotInvertible(SonarseqError, ValueError):
    """Quadratic coefficient is divisible by the prime."""


class NotOddPrime(NotPrime):
    """An odd prime is required."""


class QTooSmall(SonarseqError, ValueError):
    """Field order below the construction's minimum."""


# --- verification ---

class EmptySequence(SonarseqError, ValueError):
    """Sequence of length zero cannot be checked."""
