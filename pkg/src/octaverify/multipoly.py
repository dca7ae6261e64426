"""Sparse multivariate polynomials over Q(zeta).

A monomial is a plain tuple of non-negative integer exponents, one slot
per variable of the owning VarSet.  A Poly maps monomials to nonzero
CycloElement coefficients; the zero polynomial has no terms.  Values are
immutable by convention: no method mutates an existing Poly.

Term order for leading terms and rendering is graded lexicographic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exactfield import (CycloElement, GaloisAut, ONE, ZERO, apply_galois,
                         render_cyclo)


class VarSetError(ValueError):
    pass


class VarSet:
    """An ordered, duplicate-free tuple of variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise VarSetError("VarSet must not be empty")
        if len(set(names)) != len(names):
            raise VarSetError("duplicate variable names: %r" % (names,))
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, name, value):
        raise AttributeError("VarSet is immutable")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise VarSetError("unknown variable %r (have %s)"
                              % (name, ", ".join(self.names)))

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "VarSet(%r)" % (self.names,)


def _grlex_key(mono):
    return (sum(mono), mono)


class Poly:
    """Sparse polynomial: dict from exponent tuple to nonzero coefficient."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VarSet, terms=None):
        object.__setattr__(self, "vars", vars)
        clean = {}
        if terms:
            n = len(vars)
            for mono, coeff in terms.items():
                if len(mono) != n:
                    raise VarSetError("monomial %r has wrong length" % (mono,))
                if not isinstance(coeff, CycloElement):
                    coeff = CycloElement(coeff)
                if coeff:
                    clean[mono] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, vars: VarSet) -> "Poly":
        return cls(vars)

    @classmethod
    def const(cls, vars: VarSet, value) -> "Poly":
        if not isinstance(value, CycloElement):
            value = CycloElement(value)
        if not value:
            return cls(vars)
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def variable(cls, vars: VarSet, name: str) -> "Poly":
        mono = [0] * len(vars)
        mono[vars.index(name)] = 1
        return cls(vars, {tuple(mono): ONE})

    # -- predicates and views ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and not any(next(iter(self.terms))))

    def constant_value(self) -> CycloElement:
        if not self.terms:
            return ZERO
        if not self.is_constant():
            raise ValueError("polynomial is not constant: %s" % self)
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, var_index: int) -> int:
        if not self.terms:
            return -1
        return max(m[var_index] for m in self.terms)

    def involves(self, var_index: int) -> bool:
        return any(m[var_index] for m in self.terms)

    def leading(self):
        """(monomial, coefficient) that is graded-lex largest."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=_grlex_key)
        return mono, self.terms[mono]

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _check_same_vars(self, other: "Poly"):
        if self.vars != other.vars:
            raise VarSetError("mismatched variable sets: %r vs %r"
                              % (self.vars.names, other.vars.names))

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_vars(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            cur = terms.get(mono)
            if cur is None:
                terms[mono] = coeff
            else:
                s = cur + coeff
                if s:
                    terms[mono] = s
                else:
                    del terms[mono]
        return _raw(self.vars, terms)

    def __neg__(self):
        return _raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_vars(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            cur = terms.get(mono)
            if cur is None:
                terms[mono] = -coeff
            else:
                s = cur - coeff
                if s:
                    terms[mono] = s
                else:
                    del terms[mono]
        return _raw(self.vars, terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElement)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_vars(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly(self.vars)
        if len(a) > len(b):
            a, b = b, a
        terms = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                prod = ca * cb
                cur = terms.get(mono)
                if cur is None:
                    terms[mono] = prod
                else:
                    s = cur + prod
                    if s:
                        terms[mono] = s
                    else:
                        del terms[mono]
        return _raw(self.vars, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloElement)):
            return self.scale(other)
        return NotImplemented

    def scale(self, value) -> "Poly":
        if not isinstance(value, CycloElement):
            value = CycloElement(value)
        if not value:
            return Poly(self.vars)
        return _raw(self.vars, {m: c * value for m, c in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power wants a non-negative integer")
        result = Poly.const(self.vars, ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_monomial(self, mono, coeff) -> "Poly":
        if not coeff:
            return Poly(self.vars)
        return _raw(self.vars, {
            tuple(x + y for x, y in zip(m, mono)): c * coeff
            for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- content ------------------------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with self/c integral and coordinatewise coprime.

        Returns 0 for the zero polynomial.  The sign is fixed positive;
        callers that want a canonical leading sign handle it themselves.
        """
        if not self.terms:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for coeff in self.terms.values():
            for q in coeff.coords():
                if q:
                    num_gcd = gcd(num_gcd, q.numerator)
                    den_lcm = den_lcm * q.denominator // gcd(den_lcm, q.denominator)
        return Fraction(num_gcd, den_lcm)

    def monomial_content(self):
        """Componentwise minimum exponent vector over all terms."""
        if not self.terms:
            return (0,) * len(self.vars)
        mins = None
        for mono in self.terms:
            if mins is None:
                mins = list(mono)
            else:
                for i, e in enumerate(mono):
                    if e < mins[i]:
                        mins[i] = e
        return tuple(mins)

    def shift_down(self, mono) -> "Poly":
        """Divide by the monomial `mono` (must divide every term)."""
        terms = {}
        for m, c in self.terms.items():
            shifted = tuple(x - y for x, y in zip(m, mono))
            if any(e < 0 for e in shifted):
                raise ValueError("monomial does not divide all terms")
            terms[shifted] = c
        return _raw(self.vars, terms)

    # -- rendering ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[mono]
            factors = []
            for name, e in zip(self.vars.names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                parts.append(_coeff_str(coeff, standalone=True))
            else:
                mono_txt = "*".join(factors)
                ctxt = _coeff_str(coeff, standalone=False)
                parts.append(mono_txt if ctxt == "" else ctxt + "*" + mono_txt
                             if ctxt != "-" else "-" + mono_txt)
        text = parts[0]
        for part in parts[1:]:
            text += " - " + part[1:] if part.startswith("-") else " + " + part
        return text

    def __repr__(self):
        return "Poly(%s)" % self


def _coeff_str(coeff: CycloElement, standalone: bool) -> str:
    if coeff.is_rational():
        q = coeff.c0
        if not standalone:
            if q == 1:
                return ""
            if q == -1:
                return "-"
        return str(q)
    inner = render_cyclo(coeff)
    return inner if standalone else "(%s)" % inner


def _raw(vars: VarSet, terms: dict) -> Poly:
    """Internal constructor that trusts `terms` (already clean)."""
    p = Poly.__new__(Poly)
    object.__setattr__(p, "vars", vars)
    object.__setattr__(p, "terms", terms)
    return p


def derivative(p: Poly, name: str) -> Poly:
    """Formal partial derivative with respect to the named variable."""
    i = p.vars.index(name)
    terms = {}
    for mono, coeff in p.terms.items():
        e = mono[i]
        if not e:
            continue
        lowered = mono[:i] + (e - 1,) + mono[i + 1:]
        c = coeff * e
        cur = terms.get(lowered)
        terms[lowered] = c if cur is None else cur + c
    return Poly(p.vars, terms)


def coeff_galois(g: GaloisAut, p: Poly) -> Poly:
    """Apply a Galois automorphism to every coefficient; monomials unchanged."""
    if g.is_identity():
        return p
    return _raw(p.vars, {m: apply_galois(g, c) for m, c in p.terms.items()})


def evaluate(p: Poly, point: dict) -> CycloElement:
    """Evaluate at a full assignment name -> CycloElement (or int/Fraction)."""
    values = []
    for name in p.vars.names:
        v = point[name]
        values.append(v if isinstance(v, CycloElement) else CycloElement(v))
    total = ZERO
    for mono, coeff in p.terms.items():
        term = coeff
        for v, e in zip(values, mono):
            if e:
                term = term * v ** e
        total = total + term
    return total


def substitute_frac(p: Poly, images: dict):
    """Compose p with per-variable fractions, clearing denominators.

    `images` maps a variable name to a (num, den) pair of Polys over a
    common target VarSet.  Variables without an image map to themselves
    (they must then exist in the target VarSet).  Returns (num, den)
    with num/den == p(num_i/den_i) and den a product of powers of the
    image denominators: each den_i appears with exponent deg_i(p).
    """
    if not images:
        raise VarSetError("substitute_frac needs at least one image")
    target = None
    for num, den in images.values():
        if target is None:
            target = num.vars
        if num.vars != target or den.vars != target:
            raise VarSetError("images must share one variable set")
        if den.is_zero():
            raise ZeroDivisionError("identically-zero denominator in image")
    one = Poly.const(target, ONE)
    pairs = []
    for name in p.vars.names:
        if name in images:
            pairs.append(images[name])
        else:
            pairs.append((Poly.variable(target, name), one))

    degs = [p.degree_in(i) if p.terms else 0 for i in range(len(p.vars))]
    degs = [max(d, 0) for d in degs]

    # Power tables: nums[i][k] = num_i^k, dens[i][k] = den_i^k.
    num_pows = []
    den_pows = []
    for (num, den), d in zip(pairs, degs):
        npow = [one]
        dpow = [one]
        for _ in range(d):
            npow.append(npow[-1] * num)
            dpow.append(dpow[-1] * den)
        num_pows.append(npow)
        den_pows.append(dpow)

    result = Poly.zero(target)
    for mono, coeff in p.terms.items():
        term = Poly.const(target, coeff)
        for i, e in enumerate(mono):
            if e:
                term = term * num_pows[i][e]
            if degs[i] - e:
                term = term * den_pows[i][degs[i] - e]
        result = result + term

    den_total = one
    for i, d in enumerate(degs):
        if d:
            den_total = den_total * den_pows[i][d]
    return result, den_total
