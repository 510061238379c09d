"""Exception types shared across the package."""


class EqcritError(Exception):
    """Base class for all domain errors raised by this package."""


# -- scalar / polynomial arithmetic ---------------------------------------

class ZeroDivisor(EqcritError):
    """A nonzero element of a quotient algebra is not invertible.

    Happens exactly when gcd(lift(x), modulus) is nonconstant, which is
    possible because the modulus is only required to be squarefree.
    """


class DegreeMismatch(EqcritError):
    """Operands have incompatible degrees for the requested operation."""


class NotQuartic(EqcritError):
    """A degree-4 polynomial was required."""


class ZeroScale(EqcritError):
    """The scale factor of an affine map must be nonzero."""


# -- moduli / lifting ------------------------------------------------------

class EllipticJ(EqcritError):
    """j in {0, 1728}: the standard one-parameter curve family has a pole."""


class JMismatch(EqcritError):
    """Two curves were required to share a j-invariant but do not."""


class NotDistinct(EqcritError):
    """Branch points must be pairwise distinct."""


class NoRationalFiberPoint(EqcritError):
    """No rational point in the relevant fiber; no rational lift exists
    along this construction."""


class EllipticTargetObstruction(EqcritError):
    """Transport to an elliptic-j target needs an irrational square or
    cube root; reported instead of silently extending the field."""


# -- pair family -----------------------------------------------------------

class PoleAtT(EqcritError):
    """The closed-form family has a pole at this parameter value."""


class ExcludedT(EqcritError):
    """Parameter lies in the excluded set of the generic branch."""


class FieldTooSmall(EqcritError):
    """A required constant is not representable in the given field."""


class NoPair(EqcritError):
    """The parameter is a cusp exception: it yields no inequivalent
    equicritical pair."""


class VerificationError(EqcritError):
    """A mandatory at-construction check failed (fail-closed)."""


# -- finite-field sums -----------------------------------------------------

class NotCoprime(EqcritError):
    """gcd(a, p) = 1 was required."""


class NotPrime(EqcritError):
    """A prime modulus was required."""


class DegenerateLeadingCoefficient(EqcritError):
    """The leading coefficient vanishes mod p."""
