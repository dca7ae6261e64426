"""Semilinear automorphisms of Q(zeta)(x1..xn).

A SemilinearMap is a Galois twist on coefficients together with one
rational-function image per ambient variable; applying it to f twists
every coefficient of f and then substitutes the images.  Maps are stored
extensionally (by their images), never as words.

Composition convention: compose(m1, m2) is "m2 first, then m1", i.e.
function composition m1 o m2.  Words are evaluated left to right under
that convention, so the word [g, h] denotes the map g o h.
"""

from __future__ import annotations

from .exactfield import CycloElement, GaloisAut, IDENTITY_AUT, ONE, apply_galois
from .multipoly import Poly, VarSet, coeff_galois
from .ratfunc import RatFunc, rf_equal, rf_substitute


class SemilinearMap:
    __slots__ = ("vars", "twist", "images")

    def __init__(self, vars: VarSet, twist: GaloisAut, images):
        images = tuple(images)
        if len(images) != len(vars):
            raise ValueError("need one image per variable")
        for g in images:
            if g.vars != vars:
                raise ValueError("image over a different variable set")
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("SemilinearMap is immutable")

    @classmethod
    def identity(cls, vars: VarSet) -> "SemilinearMap":
        return cls(vars, IDENTITY_AUT,
                   [RatFunc.variable(vars, n) for n in vars.names])

    def image_of(self, name: str) -> RatFunc:
        return self.images[self.vars.index(name)]

    def apply(self, f: RatFunc) -> RatFunc:
        """Twist the coefficients of f, then substitute the images."""
        if f.vars != self.vars:
            raise ValueError("operand over a different variable set")
        if not self.twist.is_identity():
            f = RatFunc(coeff_galois(self.twist, f.num),
                        coeff_galois(self.twist, f.den))
        images = dict(zip(self.vars.names, self.images))
        return rf_substitute(f, images)

    def compose(self, other: "SemilinearMap") -> "SemilinearMap":
        """self o other: apply(compose(m1, m2), f) == m1.apply(m2.apply(f))."""
        if self.vars != other.vars:
            raise ValueError("maps over different variable sets")
        return SemilinearMap(self.vars, self.twist.compose(other.twist),
                             [self.apply(g) for g in other.images])

    def equals(self, other: "SemilinearMap") -> bool:
        return (self.vars == other.vars and self.twist == other.twist
                and all(rf_equal(a, b) for a, b in zip(self.images, other.images)))

    def is_identity(self) -> bool:
        return self.equals(SemilinearMap.identity(self.vars))

    def power(self, n: int) -> "SemilinearMap":
        if n < 0:
            return self.inverse().power(-n)
        result = SemilinearMap.identity(self.vars)
        base = self
        while n:
            if n & 1:
                result = result.compose(base)
            base = base.compose(base) if n > 1 else base
            n >>= 1
        return result

    def inverse(self, max_order: int = 96) -> "SemilinearMap":
        """Inverse found as a power; the maps here all have small order."""
        acc = self
        prev = SemilinearMap.identity(self.vars)
        for _ in range(max_order):
            if acc.is_identity():
                return prev
            prev = acc
            acc = acc.compose(self)
        raise ValueError("no inverse found within order %d" % max_order)

    def linear_matrix(self):
        """If every image is a linear form with constant denominator,
        return the matrix A with image_j = sum_i A[i][j] x_i (variables
        transform by columns).  Returns None if the map is not linear."""
        n = len(self.vars)
        cols = []
        for g in self.images:
            if not g.den.is_constant():
                return None
            scale = g.den.constant_value().inv()
            col = [None] * n
            for mono, coeff in g.num.terms.items():
                if sum(mono) != 1:
                    return None
                col[mono.index(1)] = coeff * scale
            cols.append([c if c is not None else CycloElement(0) for c in col])
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def __str__(self):
        rows = ", ".join("%s -> %s" % (n, g)
                         for n, g in zip(self.vars.names, self.images))
        twist = "" if self.twist.is_identity() else " [twist %s]" % self.twist
        return "{%s}%s" % (rows, twist)

    __repr__ = __str__


def compose_word(word, maps: dict, vars: VarSet) -> SemilinearMap:
    """Evaluate [(name, exponent), ...] left to right into a single map."""
    result = SemilinearMap.identity(vars)
    for name, exponent in word:
        if name not in maps:
            raise KeyError("unknown map %r in word" % name)
        result = result.compose(maps[name].power(exponent))
    return result


def verify_relation_word(word, maps: dict, vars: VarSet,
                         expected: SemilinearMap = None) -> bool:
    """Compose the word and compare to `expected` (identity by default)."""
    value = compose_word(word, maps, vars)
    if expected is None:
        return value.is_identity()
    return value.equals(expected)


def change_coordinates(m: SemilinearMap, new_names, defs) -> SemilinearMap:
    """Rewrite a linear map on new linear coordinates.

    `defs` gives each new coordinate as a linear form in the old ones
    (a RatFunc with constant denominator); the change must be invertible.
    For a map with matrix A and twist g, the new matrix is M^g A M^-1
    where rows of M are the new coordinate forms.
    """
    n = len(m.vars)
    if len(new_names) != n or len(defs) != n:
        raise ValueError("coordinate change must preserve the variable count")
    rows = []
    for d in defs:
        row = _linear_form_coeffs(d)
        if row is None:
            raise ValueError("coordinate definition is not linear: %s" % d)
        rows.append(row)
    a = m.linear_matrix()
    if a is None:
        raise ValueError("change_coordinates needs a linear map")
    m_inv = _matrix_inverse(rows)
    if m_inv is None:
        raise ValueError("singular coordinate change")
    mg = [[apply_galois(m.twist, entry) for entry in row] for row in rows]
    new_a = _mat_mul(_mat_mul(mg, a), m_inv)
    new_vars = VarSet(new_names)
    images = []
    for j in range(n):
        g = RatFunc.const(new_vars, 0)
        for i in range(n):
            if new_a[i][j]:
                g = g + RatFunc.variable(new_vars, new_vars.names[i]) * new_a[i][j]
        images.append(g)
    return SemilinearMap(new_vars, m.twist, images)


def _linear_form_coeffs(d: RatFunc):
    """Coefficients of a homogeneous linear form, or None."""
    if not d.den.is_constant():
        return None
    scale = d.den.constant_value().inv()
    coeffs = [CycloElement(0)] * len(d.vars)
    for mono, coeff in d.num.terms.items():
        if sum(mono) != 1:
            return None
        coeffs[mono.index(1)] = coeff * scale
    return coeffs


def _mat_mul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), CycloElement(0))
             for j in range(n)] for i in range(n)]


def _matrix_inverse(a):
    """Gauss-Jordan inverse over Q(zeta); None when singular."""
    n = len(a)
    work = [list(row) + [ONE if i == j else CycloElement(0) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inv()
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]
