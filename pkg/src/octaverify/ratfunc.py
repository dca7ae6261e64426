"""Rational functions over Q(zeta) with exact cross-multiplication equality.

A RatFunc is a num/den pair of Polys over one VarSet.  Construction
performs only cheap canonicalization (shared monomial factor removed,
denominator scaled to be integral, primitive and with a positive-leading
canonical sign); full GCD reduction is an explicit or threshold-driven
operation, never a soundness dependency.  Equality is decided by
cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction

from . import polygcd
from .exactfield import CycloElement, ONE, ZERO
from .multipoly import Poly, VarSet, derivative

# Above this many stored terms (num plus den) arithmetic results are
# GCD-reduced; below it they are left as computed.
DEFAULT_GCD_THRESHOLD = 5000
_gcd_threshold = DEFAULT_GCD_THRESHOLD


def set_gcd_threshold(n: int) -> None:
    global _gcd_threshold
    _gcd_threshold = int(n)


def get_gcd_threshold() -> int:
    return _gcd_threshold


class DegenerateSubstitution(ArithmeticError):
    """A substitution made a denominator vanish identically."""


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        if den is None:
            den = Poly.const(num.vars, ONE)
        if num.vars != den.vars:
            raise ValueError("numerator and denominator over different variables")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = _canonical(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, vars: VarSet, value) -> "RatFunc":
        return cls(Poly.const(vars, value))

    @classmethod
    def variable(cls, vars: VarSet, name: str) -> "RatFunc":
        return cls(Poly.variable(vars, name))

    @property
    def vars(self) -> VarSet:
        return self.num.vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> CycloElement:
        return self.num.constant_value() / self.den.constant_value()

    def size(self) -> int:
        return len(self.num) + len(self.den)

    # -- field arithmetic -----------------------------------------------------

    def _wrap(self, num: Poly, den: Poly) -> "RatFunc":
        f = RatFunc(num, den)
        if f.size() > _gcd_threshold:
            f = reduce(f, use_gcd=True)
        return f

    def __add__(self, other):
        other = _as_rf(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self._wrap(self.num + other.num, self.den)
        return self._wrap(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _as_rf(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self._wrap(self.num - other.num, self.den)
        return self._wrap(self.num * other.den - other.num * self.den,
                          self.den * other.den)

    def __rsub__(self, other):
        other = _as_rf(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_rf(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        return self._wrap(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return self._wrap(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_rf(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of the zero function")
            return RatFunc(self.den, self.num) ** (-n)
        result = RatFunc.const(self.vars, ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- equality ----------------------------------------------------------------

    def __eq__(self, other):
        other = _as_rf(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        return rf_equal(self, other)

    def __hash__(self):
        raise TypeError("RatFunc equality is extensional; not hashable")

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == ONE:
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if " " in num or len(self.num) > 1:
            num = "(%s)" % num
        if " " in den or len(self.den) > 1:
            den = "(%s)" % den
        return "%s / %s" % (num, den)

    def __repr__(self):
        return "RatFunc(%s)" % self


def _as_rf(value, vars: VarSet):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction, CycloElement)):
        return RatFunc.const(vars, value)
    return NotImplemented


def _canonical(num: Poly, den: Poly):
    """Cheap canonical form: cancel shared monomial factor, then scale so
    the denominator is integral, primitive and has a canonical leading
    coefficient sign."""
    if num.is_zero():
        return num, Poly.const(den.vars, ONE)
    shared = tuple(min(a, b) for a, b in
                   zip(num.monomial_content(), den.monomial_content()))
    if any(shared):
        num = num.shift_down(shared)
        den = den.shift_down(shared)
    cont = den.rational_content()
    _, lead = den.leading()
    first = next(q for q in lead.coords() if q)
    if first < 0:
        cont = -cont
    if cont != 1:
        scale = Fraction(1) / cont
        num = num.scale(scale)
        den = den.scale(scale)
    return num, den


def residue(f: RatFunc, g: RatFunc) -> Poly:
    """Cross-multiplication difference; zero iff f == g."""
    if f.vars != g.vars:
        raise ValueError("comparands over different variable sets")
    if f.den == g.den:
        return f.num - g.num
    return f.num * g.den - g.num * f.den


def rf_equal(f: RatFunc, g: RatFunc) -> bool:
    return residue(f, g).is_zero()


def reduce(f: RatFunc, use_gcd: bool = True) -> RatFunc:
    """Equivalent fraction with content and (optionally) GCD cancelled."""
    if f.is_zero():
        return f
    num, den = f.num, f.den
    if use_gcd and not den.is_constant() and not num.is_constant():
        g = polygcd.gcd(num, den)
        if not g.is_constant():
            num = polygcd.exact_div(num, g)
            den = polygcd.exact_div(den, g)
    return RatFunc(num, den)


def rf_substitute(f: RatFunc, images: dict) -> RatFunc:
    """Compose f with variable images given as RatFuncs.

    Raises DegenerateSubstitution when the composed denominator vanishes.
    """
    from .multipoly import substitute_frac
    pair_images = {name: (g.num, g.den) for name, g in images.items()}
    n_num, n_den = substitute_frac(f.num, pair_images)
    d_num, d_den = substitute_frac(f.den, pair_images)
    # f = (n_num/n_den) / (d_num/d_den)
    if d_num.is_zero():
        raise DegenerateSubstitution("denominator vanishes under substitution")
    num = n_num * d_den
    den = n_den * d_num
    result = RatFunc(num, den)
    if result.size() > _gcd_threshold:
        result = reduce(result, use_gcd=True)
    return result


def denominator_primes(f: RatFunc) -> set:
    """Primes dividing any rational coordinate denominator in canonical form.

    The canonical scaling makes the denominator integral, so this is the
    set of primes inverted by the fraction itself.
    """
    primes = set()
    for poly in (f.num, f.den):
        for coeff in poly.terms.values():
            for q in coeff.coords():
                d = q.denominator
                if d > 1:
                    primes |= _factor(d)
    return primes


def _factor(n: int) -> set:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.add(n)
    return out


def jacobian_rank(elements, vars: VarSet) -> int:
    """Rank of (d f_i / d x_j) over the rational function field.

    Rows are scaled by den_i^2, which leaves the rank unchanged, so every
    entry is the polynomial num_i' * den_i - num_i * den_i'.  Elimination
    is fraction-free (Bareiss) with exact polynomial divisions.
    """
    rows = []
    for f in elements:
        if f.vars != vars:
            raise ValueError("element over a different variable set")
        row = []
        for name in vars.names:
            dn = derivative(f.num, name)
            dd = derivative(f.den, name)
            row.append(dn * f.den - f.num * dd)
        rows.append(row)
    return _bareiss_rank(rows, vars)


def _bareiss_rank(matrix, vars: VarSet) -> int:
    m = len(matrix)
    if m == 0:
        return 0
    n = len(matrix[0])
    a = [row[:] for row in matrix]
    prev = Poly.const(vars, ONE)
    rank = 0
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if not a[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        for r in range(row + 1, m):
            for c in range(col + 1, n):
                num = a[row][col] * a[r][c] - a[r][col] * a[row][c]
                a[r][c] = polygcd.exact_div(num, prev)
            a[r][col] = Poly.zero(vars)
        prev = a[row][col]
        rank += 1
        row += 1
        if row == m:
            break
    return rank
