"""Polynomial rings, monomials, term orders, and power-substitution maps.

Monomials are dense exponent tuples.  Variable precedence is fixed
ring-wide as x_l > x_{l-1} > ... > x_1 (index l-1 down to index 0), and
the kept subring R consists of the first (smallest) `kept` variables, so
eliminating the large variables is "drop every element with a large
variable".
"""

from dataclasses import dataclass

from .scalars import DEFAULT_PRIME, field_of_characteristic

LESS, EQUAL, GREATER = -1, 0, 1


# ---------------------------------------------------------------------------
# monomial helpers

def mono_deg(m):
    return sum(m)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Quotient a / b; b must divide a."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"{b} does not divide {a}")
    return q


def mono_one(nvars):
    return (0,) * nvars


# ---------------------------------------------------------------------------
# term orders

class TermOrder:
    """Base class; subclasses provide a sort key increasing with the order."""

    def key(self, m):
        raise NotImplementedError

    def compare(self, a, b):
        if len(a) != len(b):
            raise ValueError("monomials from rings of different dimension")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LESS
        if ka > kb:
            return GREATER
        return EQUAL

    def eliminates(self, keep, nvars):
        """True iff this order is an elimination order for the last nvars-keep variables."""
        return False


class LexOrder(TermOrder):
    """Lexicographic order with x_l > ... > x_1."""

    def key(self, m):
        return tuple(reversed(m))

    def eliminates(self, keep, nvars):
        return True

    def __repr__(self):
        return "lex"

    def __eq__(self, other):
        return isinstance(other, LexOrder)

    def __hash__(self):
        return hash("lex")


class DegRevLexOrder(TermOrder):
    """Degree reverse lexicographic order with x_l > ... > x_1."""

    def key(self, m):
        return (sum(m), tuple(-e for e in m))

    def eliminates(self, keep, nvars):
        return keep == nvars

    def __repr__(self):
        return "degrevlex"

    def __eq__(self, other):
        return isinstance(other, DegRevLexOrder)

    def __hash__(self):
        return hash("degrevlex")


class BlockOrder(TermOrder):
    """Elimination block order: degrevlex on the last nvars-keep variables,
    ties broken by degrevlex on the first keep variables."""

    def __init__(self, keep):
        self.keep = keep

    def key(self, m):
        hi = m[self.keep:]
        lo = m[:self.keep]
        return (sum(hi), tuple(-e for e in hi), sum(lo), tuple(-e for e in lo))

    def eliminates(self, keep, nvars):
        return keep == self.keep

    def __repr__(self):
        return f"elim({self.keep})"

    def __eq__(self, other):
        return isinstance(other, BlockOrder) and other.keep == self.keep

    def __hash__(self):
        return hash(("elim", self.keep))


def compare(order, a, b):
    """Three-way comparison of monomials under a term order."""
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# rings

@dataclass(frozen=True)
class PolyRing:
    """K[x_1, ..., x_l] with the first `kept` variables forming the subring R."""

    names: tuple
    kept: int
    field: object

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if not 0 <= self.kept <= len(self.names):
            raise ValueError("kept count out of range")

    @property
    def nvars(self):
        return len(self.names)

    @property
    def char(self):
        return self.field.char

    def restrict(self):
        """The subring R spanned by the kept (smallest) variables."""
        return PolyRing(self.names[:self.kept], self.kept, self.field)

    def with_char(self, char):
        return PolyRing(self.names, self.kept, field_of_characteristic(char))


def make_ring(names, kept=None, char=DEFAULT_PRIME):
    names = tuple(names)
    if kept is None:
        kept = len(names)
    return PolyRing(names, kept, field_of_characteristic(char))


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Immutable multivariate polynomial with terms sorted strictly decreasing
    under a designated term order."""

    __slots__ = ("ring", "order", "terms")

    def __init__(self, ring, order, terms):
        # terms assumed normalized; use from_terms for raw input
        self.ring = ring
        self.order = order
        self.terms = tuple(terms)

    @classmethod
    def from_terms(cls, ring, order, raw_terms):
        """Merge equal monomials, drop zero coefficients, sort descending."""
        acc = {}
        K = ring.field
        for c, m in raw_terms:
            m = tuple(m)
            if len(m) != ring.nvars:
                raise ValueError("monomial dimension does not match ring")
            acc[m] = K.add(acc.get(m, K.zero), c)
        terms = [(c, m) for m, c in acc.items() if c != K.zero]
        terms.sort(key=lambda t: order.key(t[1]), reverse=True)
        return cls(ring, order, terms)

    @classmethod
    def zero(cls, ring, order):
        return cls(ring, order, ())

    def is_zero(self):
        return not self.terms

    def leading_coefficient(self):
        return self.terms[0][0]

    def leading_monomial(self):
        return self.terms[0][1]

    def degree(self):
        if not self.terms:
            return -1
        return max(mono_deg(m) for _, m in self.terms)

    def coeff_dict(self):
        return {m: c for c, m in self.terms}

    def __add__(self, other):
        return Polynomial.from_terms(self.ring, self.order,
                                     list(self.terms) + list(other.terms))

    def __sub__(self, other):
        K = self.ring.field
        return Polynomial.from_terms(
            self.ring, self.order,
            list(self.terms) + [(K.neg(c), m) for c, m in other.terms])

    def __neg__(self):
        K = self.ring.field
        return Polynomial(self.ring, self.order,
                          [(K.neg(c), m) for c, m in self.terms])

    def __mul__(self, other):
        K = self.ring.field
        raw = [(K.mul(c1, c2), mono_mul(m1, m2))
               for c1, m1 in self.terms for c2, m2 in other.terms]
        return Polynomial.from_terms(self.ring, self.order, raw)

    def mul_term(self, coeff, mono):
        K = self.ring.field
        if coeff == K.zero:
            return Polynomial.zero(self.ring, self.order)
        return Polynomial(self.ring, self.order,
                          [(K.mul(c, coeff), mono_mul(m, mono))
                           for c, m in self.terms])

    def scale(self, coeff):
        return self.mul_term(coeff, mono_one(self.ring.nvars))

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient()))

    def with_order(self, order):
        if order == self.order:
            return self
        return Polynomial.from_terms(self.ring, order,
                                     [(c, m) for c, m in self.terms])

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.coeff_dict() == other.coeff_dict())

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeff_dict().items())))

    def __repr__(self):
        from .parser import format_polynomial
        return format_polynomial(self)


def poly_normalize(ring, order, raw_terms):
    """Normalize an unsorted term list into a Polynomial."""
    return Polynomial.from_terms(ring, order, raw_terms)


def constant(ring, order, value):
    K = ring.field
    c = K.from_int(value) if isinstance(value, int) else value
    return Polynomial.from_terms(ring, order, [(c, mono_one(ring.nvars))])


def variable(ring, order, index, power=1):
    e = [0] * ring.nvars
    e[index] = power
    return Polynomial.from_terms(ring, order, [(ring.field.one, tuple(e))])


def is_homogeneous(f):
    """(flag, degree): zero reports (True, None)."""
    if f.is_zero():
        return True, None
    degs = {mono_deg(m) for _, m in f.terms}
    if len(degs) == 1:
        return True, degs.pop()
    return False, None


# ---------------------------------------------------------------------------
# power maps

@dataclass(frozen=True)
class PowerMap:
    """The substitution x_i -> x_i^{d_i}."""

    exponents: tuple

    def __post_init__(self):
        if any(d < 1 for d in self.exponents):
            raise ValueError("power map exponents must be positive")

    @classmethod
    def uniform(cls, nvars, d):
        return cls((d,) * nvars)

    @classmethod
    def uniform_on_kept(cls, ring, d):
        """x_i -> x_i^d on the kept variables, identity on the rest."""
        return cls(tuple(d if i < ring.kept else 1 for i in range(ring.nvars)))

    def is_identity(self):
        return all(d == 1 for d in self.exponents)

    def apply_mono(self, m):
        return tuple(d * e for d, e in zip(self.exponents, m))


def apply_power_map(phi, f):
    """Image of f under x_i -> x_i^{d_i}; coefficients unchanged."""
    if len(phi.exponents) != f.ring.nvars:
        raise ValueError("power map dimension does not match ring")
    return Polynomial.from_terms(
        f.ring, f.order, [(c, phi.apply_mono(m)) for c, m in f.terms])


def s_polynomial(f, h, order=None):
    """S-polynomial of two nonzero polynomials; leading terms cancel."""
    if f.is_zero() or h.is_zero():
        raise ValueError("S-polynomial of zero polynomial")
    if order is not None:
        f, h = f.with_order(order), h.with_order(order)
    K = f.ring.field
    lf, lh = f.leading_monomial(), h.leading_monomial()
    lcm = mono_lcm(lf, lh)
    a = f.mul_term(K.inv(f.leading_coefficient()), mono_div(lcm, lf))
    b = h.mul_term(K.inv(h.leading_coefficient()), mono_div(lcm, lh))
    return a - b
