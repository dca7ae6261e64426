"""Polynomial exact division and multivariate GCD over Q(zeta).

GCD uses the subresultant polynomial remainder sequence, recursing on
the number of variables: the input is viewed as univariate in a chosen
main variable with polynomial coefficients, contents are split off by
recursive GCDs, and the PRS runs with the standard subresultant
divisors.  Coefficients live in a field, so GCDs are normalized to have
positive-rational content and a canonical leading coefficient.
"""

from __future__ import annotations

from fractions import Fraction

from .exactfield import CycloElement, ONE
from .multipoly import Poly, _grlex_key, _raw


class NotDivisible(ArithmeticError):
    pass


def exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient a / b when the division is exact; NotDivisible otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return a
    if b.is_constant():
        return a.scale(b.constant_value().inv())
    vars = a.vars
    rem_terms = dict(a.terms)
    quo = {}
    b_mono, b_coeff = b.leading()
    b_inv = b_coeff.inv()
    b_rest = [(m, c) for m, c in b.terms.items() if m != b_mono]
    while rem_terms:
        mono = max(rem_terms, key=_grlex_key)
        coeff = rem_terms[mono]
        q_mono = tuple(x - y for x, y in zip(mono, b_mono))
        if any(e < 0 for e in q_mono):
            raise NotDivisible("leading term not divisible")
        q_coeff = coeff * b_inv
        quo[q_mono] = q_coeff
        del rem_terms[mono]
        for m, c in b_rest:
            t = tuple(x + y for x, y in zip(q_mono, m))
            prod = q_coeff * c
            cur = rem_terms.get(t)
            if cur is None:
                rem_terms[t] = -prod
            else:
                s = cur - prod
                if s:
                    rem_terms[t] = s
                else:
                    del rem_terms[t]
    return _raw(vars, quo)


def divides(b: Poly, a: Poly) -> bool:
    try:
        exact_div(a, b)
        return True
    except NotDivisible:
        return False


# -- recursive univariate view -------------------------------------------


def _coeffs_in(p: Poly, i: int) -> dict:
    """View p as univariate in variable i: degree -> coefficient Poly.

    Coefficient polynomials keep the full VarSet with exponent 0 at i.
    """
    out = {}
    for mono, coeff in p.terms.items():
        e = mono[i]
        reduced = mono[:i] + (0,) + mono[i + 1:]
        bucket = out.setdefault(e, {})
        cur = bucket.get(reduced)
        bucket[reduced] = coeff if cur is None else cur + coeff
    return {e: _raw(p.vars, {m: c for m, c in bucket.items() if c})
            for e, bucket in out.items()}


def _from_coeffs(vars, i: int, coeffs: dict) -> Poly:
    terms = {}
    for e, poly in coeffs.items():
        for mono, c in poly.terms.items():
            terms[mono[:i] + (e,) + mono[i + 1:]] = c
    return _raw(vars, {m: c for m, c in terms.items() if c})


class _UniPoly:
    """Univariate polynomial in one chosen variable, Poly coefficients."""

    __slots__ = ("vars", "i", "coeffs")

    def __init__(self, vars, i, coeffs):
        self.vars = vars
        self.i = i
        self.coeffs = {e: p for e, p in coeffs.items() if not p.is_zero()}

    @classmethod
    def from_poly(cls, p: Poly, i: int) -> "_UniPoly":
        return cls(p.vars, i, _coeffs_in(p, i))

    def to_poly(self) -> Poly:
        return _from_coeffs(self.vars, self.i, self.coeffs)

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def lc(self) -> Poly:
        return self.coeffs[self.degree()]

    def is_zero(self) -> bool:
        return not self.coeffs

    def scale_poly(self, q: Poly) -> "_UniPoly":
        return _UniPoly(self.vars, self.i,
                        {e: p * q for e, p in self.coeffs.items()})

    def sub_shifted(self, q: Poly, shift: int, other: "_UniPoly") -> "_UniPoly":
        """self - q * x^shift * other."""
        coeffs = dict(self.coeffs)
        for e, p in other.coeffs.items():
            t = e + shift
            cur = coeffs.get(t)
            prod = q * p
            coeffs[t] = -prod if cur is None else cur - prod
        return _UniPoly(self.vars, self.i, coeffs)

    def exact_div_coeffs(self, d: Poly) -> "_UniPoly":
        return _UniPoly(self.vars, self.i,
                        {e: exact_div(p, d) for e, p in self.coeffs.items()})

    def content(self) -> Poly:
        cont = None
        for p in self.coeffs.values():
            cont = p if cont is None else gcd(cont, p)
            if cont.is_constant():
                break
        return cont if cont is not None else Poly.zero(self.vars)


def _prem(a: _UniPoly, b: _UniPoly) -> _UniPoly:
    """Pseudo-remainder of a by b: lc(b)^(da-db+1) * a mod b."""
    da, db = a.degree(), b.degree()
    if da < db:
        return a
    lcb = b.lc()
    r = a
    reductions = 0
    while not r.is_zero() and r.degree() >= db:
        shift = r.degree() - db
        r = r.scale_poly(lcb).sub_shifted(r.lc(), shift, b)
        reductions += 1
    # Normalize to the exact pseudo-remainder power.
    for _ in range(da - db + 1 - reductions):
        r = r.scale_poly(lcb)
    return r


def _normalize(p: Poly) -> Poly:
    """Canonical associate: positive primitive rational content and the
    graded-lex leading coefficient scaled to have first nonzero rational
    coordinate equal to 1 (if the leading coefficient is irrational) or
    to be +1 (if rational)."""
    if p.is_zero():
        return p
    _, lead = p.leading()
    if lead.is_rational():
        scale = lead.inv()
    else:
        first = next(q for q in lead.coords() if q)
        scale = CycloElement(1 / first)
    p = p.scale(scale)
    cont = p.rational_content()
    if cont and cont != 1:
        p = p.scale(Fraction(1) / cont)
    return p


def gcd(a: Poly, b: Poly) -> Poly:
    """GCD over Q(zeta)[x1..xn], normalized via _normalize."""
    if a.vars != b.vars:
        raise ValueError("gcd of polynomials over different variable sets")
    if a.is_zero():
        return _normalize(b)
    if b.is_zero():
        return _normalize(a)
    if a.is_constant() or b.is_constant():
        return Poly.const(a.vars, ONE)

    # Shared monomial factor comes out first; it is often the whole gcd
    # for the substitution-cleared fractions seen here.
    mono_a = a.monomial_content()
    mono_b = b.monomial_content()
    shared = tuple(min(x, y) for x, y in zip(mono_a, mono_b))
    if any(shared):
        a = a.shift_down(shared)
        b = b.shift_down(shared)
    g = _gcd_inner(a, b)
    if any(shared):
        g = g.mul_monomial(shared, ONE)
    return _normalize(g)


def _gcd_inner(a: Poly, b: Poly) -> Poly:
    if a.is_constant() or b.is_constant():
        return Poly.const(a.vars, ONE)
    # Quick exits: one dividing the other.
    da, db = a.total_degree(), b.total_degree()
    if da >= db and divides(b, a):
        return b
    if db > da and divides(a, b):
        return a

    # Main variable: appears in both, minimizing the larger degree.
    best = None
    for i in range(len(a.vars)):
        dai, dbi = a.degree_in(i), b.degree_in(i)
        if dai > 0 and dbi > 0:
            score = (max(dai, dbi), min(dai, dbi))
            if best is None or score < best[0]:
                best = (score, i)
    if best is None:
        # No shared variable: gcd is the gcd of contents, a constant here
        # unless the polynomials share none of their variables at all.
        return Poly.const(a.vars, ONE)
    i = best[1]

    ua = _UniPoly.from_poly(a, i)
    ub = _UniPoly.from_poly(b, i)
    cont_a = ua.content()
    cont_b = ub.content()
    ua = ua.exact_div_coeffs(cont_a)
    ub = ub.exact_div_coeffs(cont_b)
    cont_gcd = gcd(cont_a, cont_b)

    if ua.degree() < ub.degree():
        ua, ub = ub, ua

    one = Poly.const(a.vars, ONE)
    g_prev = one
    h_prev = one
    while True:
        delta = ua.degree() - ub.degree()
        r = _prem(ua, ub)
        if r.is_zero():
            break
        if r.degree() == 0:
            # Coprime in the main variable.
            return cont_gcd
        divisor = g_prev * h_prev ** delta
        ua, ub = ub, r.exact_div_coeffs(divisor)
        g_prev = ua.lc()
        if delta:
            h_prev = exact_div(g_prev ** delta, h_prev ** (delta - 1))
    # Primitive part of the last nonzero remainder.
    result = ub.exact_div_coeffs(ub.content()).to_poly()
    return result * cont_gcd
