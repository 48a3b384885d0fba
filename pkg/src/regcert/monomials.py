"""Monomial ideals, Hilbert functions, Macaulay lex segments, and the
regularity constant of complete-intersection lex ideals.

Lex segments are handled by rank arithmetic on the descending lex order
(Macaulay binomial representations), so construction never enumerates a
full degree piece; enumeration variants are kept as test oracles.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .rings import LexOrder, mono_deg, mono_divides

_LEX = LexOrder()


def minimalize_monomials(monos):
    """Minimal generators among a set of monomials."""
    out = []
    for m in sorted(set(monos), key=mono_deg):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, sorted descending lex."""

    ring: object
    gens: tuple

    @classmethod
    def from_monomials(cls, ring, monos):
        mins = minimalize_monomials(tuple(m) for m in monos)
        mins.sort(key=_LEX.key, reverse=True)
        return cls(ring, tuple(mins))

    @property
    def nvars(self):
        return self.ring.nvars

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return any(mono_deg(g) == 0 for g in self.gens)

    def contains_monomial(self, m):
        return any(mono_divides(g, m) for g in self.gens)

    def max_gen_degree(self):
        return max((mono_deg(g) for g in self.gens), default=0)


# ---------------------------------------------------------------------------
# Hilbert functions

@dataclass(frozen=True)
class HilbertData:
    """Degreewise dimensions up to a cutoff, on the quotient or ideal side."""

    dims: tuple
    cutoff: int
    side: str  # "quotient" | "ideal"
    nvars: int

    def __post_init__(self):
        assert self.side in ("quotient", "ideal")
        assert len(self.dims) == self.cutoff + 1

    def full_dim(self, t):
        return num_monomials(self.nvars, t)

    def ideal_side(self):
        if self.side == "ideal":
            return self
        dims = tuple(self.full_dim(t) - d for t, d in enumerate(self.dims))
        return HilbertData(dims, self.cutoff, "ideal", self.nvars)

    def quotient_side(self):
        if self.side == "quotient":
            return self
        dims = tuple(self.full_dim(t) - d for t, d in enumerate(self.dims))
        return HilbertData(dims, self.cutoff, "quotient", self.nvars)


def num_monomials(nvars, t):
    """Number of degree-t monomials in nvars variables."""
    if t < 0:
        return 0
    return math.comb(t + nvars - 1, nvars - 1)


def _pick_pivot(gens, nvars):
    """Variable occurring in the most mixed generators."""
    counts = [0] * nvars
    for g in gens:
        if sum(1 for e in g if e > 0) > 1:
            for k, e in enumerate(g):
                if e > 0:
                    counts[k] += 1
    k = max(range(nvars), key=lambda i: counts[i])
    return k


def _poly_add(a, b):
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def _poly_shift(a, s):
    return (0,) * s + tuple(a)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


@lru_cache(maxsize=None)
def _k_polynomial(gens, nvars):
    """Numerator of the Hilbert series of R/I over (1-t)^nvars, as a
    coefficient tuple.  Pivot-variable recursion on the generator set."""
    gens = minimalize_monomials(gens)
    if not gens:
        return (1,)
    if any(mono_deg(g) == 0 for g in gens):
        return (0,)
    supports = [frozenset(k for k, e in enumerate(g) if e > 0) for g in gens]
    disjoint = all(not (supports[i] & supports[j])
                   for i in range(len(gens)) for j in range(i + 1, len(gens)))
    if disjoint:
        out = (1,)
        for g in gens:
            factor = [0] * (mono_deg(g) + 1)
            factor[0] = 1
            factor[-1] = -1
            out = _poly_mul(out, tuple(factor))
        return out
    k = _pick_pivot(gens, nvars)
    ek = tuple(1 if i == k else 0 for i in range(nvars))
    plus = tuple(sorted({ek} | {g for g in gens if g[k] == 0}))
    colon = tuple(sorted(tuple(e - 1 if i == k and e > 0 else e
                               for i, e in enumerate(g)) for g in gens))
    return _poly_add(_k_polynomial(plus, nvars),
                     _poly_shift(_k_polynomial(colon, nvars), 1))


def quotient_k_polynomial(M):
    """Hilbert series numerator of R/M as a coefficient tuple."""
    return _k_polynomial(tuple(sorted(M.gens)), M.nvars)


def hilbert_function(M, D):
    """Quotient-side Hilbert function of R/M up to degree D."""
    if D < 0:
        raise ValueError("degree bound must be nonnegative")
    kp = quotient_k_polynomial(M)
    l = M.nvars
    dims = tuple(sum(kp[j] * num_monomials(l, t - j)
                     for j in range(min(t, len(kp) - 1) + 1))
                 for t in range(D + 1))
    return HilbertData(dims, D, "quotient", l)


def hilbert_function_incl_excl(M, D):
    """Inclusion-exclusion oracle over generator lcms; exponential, tests only."""
    from itertools import combinations
    from .rings import mono_lcm
    l = M.nvars
    gens = M.gens
    if len(gens) > 16:
        raise ValueError("inclusion-exclusion oracle limited to small ideals")
    dims = [num_monomials(l, t) for t in range(D + 1)]
    for r in range(1, len(gens) + 1):
        sign = (-1) ** r
        for sub in combinations(gens, r):
            m = sub[0]
            for g in sub[1:]:
                m = mono_lcm(m, g)
            d = mono_deg(m)
            for t in range(d, D + 1):
                dims[t] += sign * num_monomials(l, t - d)
    return HilbertData(tuple(dims), D, "quotient", l)


def hf_of_homogeneous(I, order, D):
    """Hilbert function of a homogeneous ideal via its initial ideal."""
    from .groebner import buchberger, initial_ideal, reduce_basis
    for g in I.generators:
        from .rings import is_homogeneous
        flag, _ = is_homogeneous(g)
        if not flag:
            raise ValueError("Hilbert function requires homogeneous generators")
    G = reduce_basis(buchberger(I, order))
    return hilbert_function(initial_ideal(G), D)


def ci_hilbert_function(n, d, m, D):
    """Quotient Hilbert function of a complete intersection of n degree-d
    forms in n+m variables: coefficients of (1-t^d)^n / (1-t)^(n+m)."""
    if n < 1 or d < 1 or m < 0:
        raise ValueError("need n, d >= 1 and m >= 0")
    l = n + m
    dims = tuple(sum((-1) ** k * math.comb(n, k) * num_monomials(l, t - k * d)
                     for k in range(n + 1))
                 for t in range(D + 1))
    return HilbertData(dims, D, "quotient", l)


# ---------------------------------------------------------------------------
# Macaulay representations and lex segment arithmetic

def macaulay_rep(N, t):
    """The t-th Macaulay representation N = sum C(a_i, i), a_t > ... >= i >= 1."""
    if N < 0:
        raise ValueError("negative value")
    rep = []
    i = t
    while N > 0:
        if i < 1:
            raise ValueError(f"no Macaulay representation of {N} at index {t}")
        a = i - 1
        while math.comb(a + 1, i) <= N:
            a += 1
        rep.append((a, i))
        N -= math.comb(a, i)
        i -= 1
    return rep


def macaulay_growth(q, t):
    """Macaulay bound q^<t> on the next quotient dimension (t >= 1)."""
    if q == 0:
        return 0
    return sum(math.comb(a + 1, i + 1) for a, i in macaulay_rep(q, t))


def lex_shadow_size(N, t, nvars):
    """Size of the shadow of the descending-lex segment of size N in degree t.

    Computed through the complement: the quotient of a lex ideal grows by
    exactly the Macaulay bound, so |shadow| = full(t+1) - q^<t> with
    q = full(t) - N.
    """
    full_t = num_monomials(nvars, t)
    if not 0 <= N <= full_t:
        raise ValueError("segment size out of range")
    if t == 0:
        return num_monomials(nvars, 1) if N == 1 else 0
    return num_monomials(nvars, t + 1) - macaulay_growth(full_t - N, t)


def lex_unrank(nvars, t, rank):
    """The monomial of given 0-based rank among degree-t monomials in
    descending lex order (x_l largest)."""
    if not 0 <= rank < num_monomials(nvars, t):
        raise ValueError("rank out of range")
    exps = [0] * nvars
    for pos in range(nvars - 1, 0, -1):
        for e in range(t, -1, -1):
            cnt = num_monomials(pos, t - e)
            if rank < cnt:
                exps[pos] = e
                t -= e
                break
            rank -= cnt
    exps[0] = t
    return tuple(exps)


def lex_rank(m):
    """Inverse of lex_unrank."""
    nvars = len(m)
    t = mono_deg(m)
    rank = 0
    for pos in range(nvars - 1, 0, -1):
        for e in range(t, m[pos], -1):
            rank += num_monomials(pos, t - e)
        t -= m[pos]
    return rank


def monomials_of_degree(nvars, t):
    """All degree-t monomials in descending lex order.  Enumerates the full
    degree piece; intended for small degrees and test oracles."""
    def gen(rem, parts):
        if parts == 1:
            yield (rem,)
            return
        for e in range(rem, -1, -1):
            for rest in gen(rem - e, parts - 1):
                yield rest + (e,)
    return list(gen(t, nvars))


# ---------------------------------------------------------------------------
# lex segment ideals

class MacaulayViolation(ValueError):
    """The requested dimensions are not achievable by any homogeneous ideal."""

    def __init__(self, degree, needed, got):
        self.degree = degree
        super().__init__(
            f"segment of size {got} at degree {degree} cannot contain the "
            f"{needed} multiples of the previous segment")


def _segment_generators(ideal_dims, nvars):
    """Yield (degree, new generator monomials) for the lex ideal with the
    given ideal-side dimensions; raises MacaulayViolation when unachievable."""
    prev = 0
    for t, N in enumerate(ideal_dims):
        full = num_monomials(nvars, t)
        if not 0 <= N <= full:
            raise MacaulayViolation(t, 0, N)
        sh = lex_shadow_size(prev, t - 1, nvars) if t > 0 else 0
        if N < sh:
            raise MacaulayViolation(t, sh, N)
        yield t, [lex_unrank(nvars, t, r) for r in range(sh, N)]
        prev = N


def lex_segment_ideal(h, ring, D=None):
    """Lex-segment ideal of the given Hilbert data.

    Returns (MonomialIdeal, complete) where complete means no new minimal
    generator appeared in the top two degrees and the last segment is
    exactly the shadow of the previous one (persistence heuristic).
    """
    hi = h.ideal_side()
    if D is None:
        D = hi.cutoff
    if D > hi.cutoff:
        raise ValueError("requested degree exceeds Hilbert data cutoff")
    if ring.nvars != hi.nvars:
        raise ValueError("ring does not match Hilbert data")
    gens = []
    last_new = None
    for t, new in _segment_generators(hi.dims[:D + 1], hi.nvars):
        if new:
            gens.extend(new)
            last_new = t
    if not gens:
        return MonomialIdeal.from_monomials(ring, []), True
    complete = last_new is not None and last_new <= D - 2
    return MonomialIdeal.from_monomials(ring, gens), complete


def segment_closure_check(h, ring, D=None):
    """Verify the degree-(i+1) lex segment contains every variable multiple
    of the degree-i segment, for each i < D."""
    from .reports import VerificationReport, digest_of
    hi = h.ideal_side()
    if D is None:
        D = hi.cutoff
    report = VerificationReport("segment-closure", ring.char)
    dig = digest_of(f"closure:{hi.dims[:D + 1]}:{hi.nvars}")
    try:
        for _ in _segment_generators(hi.dims[:D + 1], hi.nvars):
            pass
    except MacaulayViolation as exc:
        report.add_fail(dig, {"dims": list(hi.dims[:D + 1])},
                        {"degree": exc.degree, "reason": str(exc)})
        return report
    report.add_pass(dig, {"dims": list(hi.dims[:D + 1])})
    return report


# ---------------------------------------------------------------------------
# stability and regularity of stable ideals

def is_strongly_stable(M):
    """True iff swapping any variable of a generator for a larger variable
    stays in the ideal."""
    for u in M.gens:
        for k, e in enumerate(u):
            if e == 0:
                continue
            for j in range(k + 1, M.nvars):
                v = tuple(x - 1 if i == k else x + 1 if i == j else x
                          for i, x in enumerate(u))
                if not M.contains_monomial(v):
                    return False
    return True


def stable_regularity(M):
    """Regularity of a strongly stable ideal: its maximal generator degree."""
    if M.is_zero():
        raise ValueError("regularity of the zero ideal is undefined")
    if not is_strongly_stable(M):
        raise ValueError("ideal is not strongly stable")
    return M.max_gen_degree()


# ---------------------------------------------------------------------------
# the constant G_{n,d,m}

def g_cap(n, d, m):
    """Guaranteed degree cap for the lex ideal of the (n, d, m) complete
    intersection: d^(n 2^(m-1)) for m >= 1, socle bound for m = 0."""
    if m >= 1:
        return d ** (n * 2 ** (m - 1))
    return n * (d - 1) + 2


def ci_lex_ideal(n, d, m, ring=None):
    """Lex-segment ideal of a complete intersection of n degree-d forms in
    n+m variables, scanned through the guaranteed cap."""
    from .rings import make_ring
    cap = g_cap(n, d, m)
    h = ci_hilbert_function(n, d, m, cap + 1)
    if ring is None:
        ring = make_ring([f"z{i + 1}" for i in range(n + m)])
    M, _ = lex_segment_ideal(h, ring, cap + 1)
    return M


def compute_G(n, d, m):
    """reg(Lex(J')) for J' a complete intersection of n degree-d forms in
    n+m variables; depends only on (n, d, m)."""
    M = ci_lex_ideal(n, d, m)
    G = stable_regularity(M)
    if m >= 1 and G > g_cap(n, d, m):
        raise RuntimeError("lex ideal generator beyond the guaranteed cap")
    return G
