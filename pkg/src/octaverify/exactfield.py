"""Exact arithmetic in Q and in the eighth cyclotomic field Q(zeta).

Elements of Q(zeta) = Q[z]/(z^4 + 1) are stored as four rational
coordinates c0 + c1*z + c2*z^2 + c3*z^3.  The three quadratic subfields
are reached through the embedded constants

    SQRTM1 = z^2          (a square root of -1)
    SQRT2  = z - z^3      (a square root of 2)
    SQRTM2 = z + z^3      (a square root of -2)

Rationals are `fractions.Fraction` throughout: arbitrary precision,
eagerly normalized, positive denominator.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("expected int or Fraction, got %r" % (value,))


class CycloElement:
    """An element of Q(zeta) with zeta^4 = -1, in reduced coordinates.

    Instances are immutable; all arithmetic returns new elements.
    The representation is unique, so equality and hashing are
    coordinate-wise.
    """

    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(self, "c0", _coerce(c0))
        object.__setattr__(self, "c1", _coerce(c1))
        object.__setattr__(self, "c2", _coerce(c2))
        object.__setattr__(self, "c3", _coerce(c3))

    def __setattr__(self, name, value):
        raise AttributeError("CycloElement is immutable")

    @classmethod
    def from_rational(cls, q) -> "CycloElement":
        return cls(_coerce(q))

    def coords(self):
        return (self.c0, self.c1, self.c2, self.c3)

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1 or self.c2 or self.c3)

    def is_rational(self) -> bool:
        return not (self.c1 or self.c2 or self.c3)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational: %s" % self)
        return self.c0

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloElement(self.c0 + other.c0, self.c1 + other.c1,
                            self.c2 + other.c2, self.c3 + other.c3)

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloElement(self.c0 - other.c0, self.c1 - other.c1,
                            self.c2 - other.c2, self.c3 - other.c3)

    def __rsub__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        a0, a1, a2, a3 = self.c0, self.c1, self.c2, self.c3
        b0, b1, b2, b3 = other.c0, other.c1, other.c2, other.c3
        # Fast path: purely rational factor on either side.
        if not (a1 or a2 or a3):
            return CycloElement(a0 * b0, a0 * b1, a0 * b2, a0 * b3)
        if not (b1 or b2 or b3):
            return CycloElement(a0 * b0, a1 * b0, a2 * b0, a3 * b0)
        # Convolution reduced by z^4 = -1.
        return CycloElement(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
        )

    __rmul__ = __mul__

    def inv(self) -> "CycloElement":
        """Multiplicative inverse via the product of Galois conjugates.

        The norm a * s3(a) * s5(a) * s7(a) lies in Q, so the inverse is
        the product of the three nontrivial conjugates divided by it.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        if self.is_rational():
            return CycloElement(1 / self.c0)
        conj = apply_galois(GaloisAut(3), self) * apply_galois(GaloisAut(5), self) \
            * apply_galois(GaloisAut(7), self)
        norm = self * conj
        assert norm.is_rational()
        return conj * CycloElement(1 / norm.c0)

    def __truediv__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison and hashing -------------------------------------------

    def __eq__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.c0 == other.c0 and self.c1 == other.c1
                and self.c2 == other.c2 and self.c3 == other.c3)

    def __hash__(self):
        if self.is_rational():
            return hash(self.c0)
        return hash((self.c0, self.c1, self.c2, self.c3))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "CycloElement(%r, %r, %r, %r)" % self.coords()

    def __str__(self):
        return render_cyclo(self)


def _as_cyclo(value):
    if isinstance(value, CycloElement):
        return value
    if isinstance(value, (int, Fraction)):
        return CycloElement(value)
    return NotImplemented


def render_cyclo(a: CycloElement) -> str:
    """Canonical text form "c0 + c1*z + c2*z^2 + c3*z^3" (zero terms omitted)."""
    parts = []
    for coeff, power in zip(a.coords(), range(4)):
        if not coeff:
            continue
        if power == 0:
            base = str(coeff)
        else:
            var = "z" if power == 1 else "z^%d" % power
            if coeff == 1:
                base = var
            elif coeff == -1:
                base = "-" + var
            else:
                base = "%s*%s" % (coeff, var)
        parts.append(base)
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        text += " - " + part[1:] if part.startswith("-") else " + " + part
    return text


ZERO = CycloElement(0)
ONE = CycloElement(1)
ZETA = CycloElement(0, 1)
SQRTM1 = CycloElement(0, 0, 1)
SQRT2 = CycloElement(0, 1, 0, -1)
SQRTM2 = CycloElement(0, 1, 0, 1)


class GaloisAut:
    """The automorphism zeta -> zeta^j of Q(zeta), j in {1, 3, 5, 7}."""

    __slots__ = ("j",)

    def __init__(self, j: int):
        if j not in (1, 3, 5, 7):
            raise ValueError("Galois exponent must be 1, 3, 5 or 7, got %r" % (j,))
        object.__setattr__(self, "j", j)

    def __setattr__(self, name, value):
        raise AttributeError("GaloisAut is immutable")

    def is_identity(self) -> bool:
        return self.j == 1

    def compose(self, other: "GaloisAut") -> "GaloisAut":
        return GaloisAut((self.j * other.j) % 8)

    def __eq__(self, other):
        return isinstance(other, GaloisAut) and self.j == other.j

    def __hash__(self):
        return hash(("GaloisAut", self.j))

    def __repr__(self):
        return "GaloisAut(%d)" % self.j

    def __str__(self):
        return "id" if self.j == 1 else "j%d" % self.j


IDENTITY_AUT = GaloisAut(1)

# zeta^k for k = 0..7 in coordinates; powers >= 4 pick up a sign.
_ZETA_POWERS = [
    CycloElement(1, 0, 0, 0),
    CycloElement(0, 1, 0, 0),
    CycloElement(0, 0, 1, 0),
    CycloElement(0, 0, 0, 1),
    CycloElement(-1, 0, 0, 0),
    CycloElement(0, -1, 0, 0),
    CycloElement(0, 0, -1, 0),
    CycloElement(0, 0, 0, -1),
]


def zeta_power(k: int) -> CycloElement:
    """zeta^k reduced mod z^4 = -1 (any integer k)."""
    return _ZETA_POWERS[k % 8]


def apply_galois(g: GaloisAut, a: CycloElement) -> CycloElement:
    """Apply zeta -> zeta^j coordinatewise; a ring homomorphism."""
    if g.j == 1:
        return a
    result = CycloElement(a.c0)
    for k, coeff in ((1, a.c1), (2, a.c2), (3, a.c3)):
        if coeff:
            result = result + zeta_power(k * g.j) * coeff
    return result


def galois_aut_by_fixed(name: str) -> GaloisAut:
    """The involution fixing the named quadratic subfield.

    "sqrt2" -> j7, "sqrtm2" -> j3, "sqrtm1" -> j5.
    """
    table = {"sqrt2": 7, "sqrtm2": 3, "sqrtm1": 5}
    if name not in table:
        raise ValueError("unknown quadratic subfield %r" % (name,))
    return GaloisAut(table[name])


def zeta_identity_check(sqrt2: CycloElement = SQRT2,
                        sqrtm1: CycloElement = SQRTM1,
                        sqrtm2: CycloElement = SQRTM2) -> bool:
    """Check (1 + sqrtm1) / sqrt2 == zeta and sqrtm2 == sqrtm1 * sqrt2.

    Passing perturbed constants (e.g. -SQRT2) must make this fail.
    """
    return (ONE + sqrtm1) * sqrt2.inv() == ZETA and sqrtm2 == sqrtm1 * sqrt2


def zeta_sqrtm2_form_check() -> bool:
    """Check the rewritten form zeta == sqrtm2 * (1 - sqrtm1) / 2."""
    return ZETA == SQRTM2 * (ONE - SQRTM1) / 2
