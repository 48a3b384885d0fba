"""Division with remainder, Buchberger's algorithm, elimination, and the
power-substitution checks used throughout.

The pair queue uses the normal strategy (smallest lcm degree, ties broken
by the term order on lcms); the coprime and chain criteria are applied as
skips unless disabled for oracle cross-checks.
"""

from dataclasses import dataclass

from .monomials import MonomialIdeal
from .reports import VerificationReport, digest_of
from .rings import (LexOrder, Polynomial, PowerMap, apply_power_map,
                    is_homogeneous, mono_deg, mono_div, mono_divides,
                    mono_lcm, mono_mul, s_polynomial)


@dataclass(frozen=True)
class IdealPresentation:
    """An ideal given by a finite list of nonzero generators."""

    ring: object
    generators: tuple

    @classmethod
    def from_polynomials(cls, ring, polys):
        gens = tuple(p for p in polys if not p.is_zero())
        return cls(ring, gens)

    @property
    def homogeneous(self):
        return all(is_homogeneous(g)[0] for g in self.generators)

    def is_zero(self):
        return not self.generators


@dataclass(frozen=True)
class GroebnerBasis:
    ring: object
    order: object
    elements: tuple
    reduced: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.elements]

    def as_presentation(self):
        return IdealPresentation(self.ring, self.elements)

    def is_unit_ideal(self):
        return any(mono_deg(g.leading_monomial()) == 0 for g in self.elements)


def normal_form(f, G, order=None):
    """Divide f by the list G: returns (remainder, quotients) with
    f = sum q_g * g + remainder and no remainder term divisible by a
    leading monomial of G.  Deterministic: always reduces the largest
    reducible term by the first eligible divisor in list order."""
    if order is None:
        order = f.order
    G = [g.with_order(order) for g in G]
    f = f.with_order(order)
    ring = f.ring
    K = ring.field
    lead = [(g.leading_monomial(), g.leading_coefficient()) for g in G]
    quotients = [dict() for _ in G]
    remainder = {}
    work = dict(f.coeff_dict())
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        if c == K.zero:
            continue
        for idx, (lm, lc) in enumerate(lead):
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                coeff = K.div(c, lc)
                quotients[idx][q] = K.add(quotients[idx].get(q, K.zero), coeff)
                for gc, gm in G[idx].terms[1:]:
                    mm = mono_mul(gm, q)
                    work[mm] = K.sub(work.get(mm, K.zero), K.mul(coeff, gc))
                    if work[mm] == K.zero:
                        del work[mm]
                break
        else:
            remainder[m] = K.add(remainder.get(m, K.zero), c)
    rem = Polynomial.from_terms(ring, order, [(c, m) for m, c in remainder.items()])
    quots = [Polynomial.from_terms(ring, order, [(c, m) for m, c in q.items()])
             for q in quotients]
    return rem, quots


def _chain_criterion(i, j, lms, pairs_done, lcm_ij):
    """Buchberger's chain criterion: skip (i, j) if some k has lm_k | lcm_ij
    and both (i, k) and (j, k) are already handled."""
    for k in range(len(lms)):
        if k in (i, j):
            continue
        if mono_divides(lms[k], lcm_ij):
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in pairs_done and b in pairs_done:
                return True
    return False


def buchberger(gens, order, use_criteria=True):
    """Buchberger's algorithm; returns an (unreduced) Groebner basis."""
    if isinstance(gens, IdealPresentation):
        polys = gens.generators
        ring = gens.ring
    else:
        polys = tuple(p for p in gens if not p.is_zero())
        if not polys:
            raise ValueError("need at least one nonzero generator")
        ring = polys[0].ring
    if not polys:
        raise ValueError("need at least one nonzero generator")
    G = [p.with_order(order).monic() for p in polys]
    lms = [g.leading_monomial() for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    done = set()

    def pair_key(p):
        lcm = mono_lcm(lms[p[0]], lms[p[1]])
        return (mono_deg(lcm), order.key(lcm))

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        done.add((i, j))
        lcm = mono_lcm(lms[i], lms[j])
        if use_criteria:
            if lcm == mono_mul(lms[i], lms[j]):
                continue  # coprime leading monomials
            if _chain_criterion(i, j, lms, done, lcm):
                continue
        s = s_polynomial(G[i], G[j], order)
        rem, _ = normal_form(s, G, order)
        if not rem.is_zero():
            G.append(rem.monic())
            lms.append(rem.leading_monomial())
            k = len(G) - 1
            pairs |= {(i2, k) for i2 in range(k)}
    return GroebnerBasis(ring, order, tuple(G), reduced=False)


def reduce_basis(G):
    """Minimal, interreduced, monic Groebner basis; unique for (ideal, order)."""
    order = G.order
    elems = sorted(G.elements, key=lambda g: order.key(g.leading_monomial()))
    minimal = []
    for g in elems:
        if not any(mono_divides(h.leading_monomial(), g.leading_monomial())
                   for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        rem, _ = normal_form(g, others, order)
        reduced.append(rem.monic())
    reduced.sort(key=lambda g: order.key(g.leading_monomial()), reverse=True)
    return GroebnerBasis(G.ring, order, tuple(reduced), reduced=True)


def groebner_basis(gens, order, use_criteria=True):
    """Reduced Groebner basis of an ideal presentation."""
    return reduce_basis(buchberger(gens, order, use_criteria))


def passes_buchberger_criterion(polys, order):
    """True iff every S-polynomial of the list reduces to zero against it."""
    polys = list(polys)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j], order)
            if s.is_zero():
                continue
            rem, _ = normal_form(s, polys, order)
            if not rem.is_zero():
                return False, (i, j)
    return True, None


def initial_ideal(G):
    """Monomial ideal of leading monomials of a Groebner basis."""
    return MonomialIdeal.from_monomials(G.ring, G.leading_monomials())


def eliminate(G, keep):
    """Elements of G lying in the kept subring, as a Groebner basis of the
    elimination ideal over R.  Requires an elimination order."""
    if not G.order.eliminates(keep, G.ring.nvars):
        raise ValueError(f"{G.order!r} does not eliminate the last "
                         f"{G.ring.nvars - keep} variables")
    if keep == G.ring.nvars:
        return G
    from .rings import PolyRing
    R = PolyRing(G.ring.names[:keep], keep, G.ring.field)
    sub_order = _restrict_order(G.order, keep)
    kept = []
    for g in G.elements:
        if all(all(e == 0 for e in m[keep:]) for _, m in g.terms):
            kept.append(Polynomial.from_terms(
                R, sub_order, [(c, m[:keep]) for c, m in g.terms]))
    return GroebnerBasis(R, sub_order, tuple(kept), reduced=G.reduced)


def _restrict_order(order, keep):
    from .rings import BlockOrder, DegRevLexOrder
    if isinstance(order, LexOrder):
        return order
    if isinstance(order, BlockOrder) and order.keep == keep:
        return DegRevLexOrder()
    raise ValueError("cannot restrict order to the kept subring")


def image_ideal(phi, I):
    """The ideal generated by the phi-images of the generators."""
    gens = tuple(apply_power_map(phi, g) for g in I.generators)
    return IdealPresentation(I.ring, gens)


def ideal_equal(A, B, order):
    """True iff the two presentations generate the same ideal (reduced
    Groebner bases coincide)."""
    if A.ring != B.ring:
        raise ValueError("presentations live in different rings")
    if A.is_zero() or B.is_zero():
        return A.is_zero() and B.is_zero()
    GA = groebner_basis(A, order)
    GB = groebner_basis(B, order)
    return list(GA.elements) == list(GB.elements)


def kernel_of_map(images, n_names=None, order=None):
    """Defining ideal of the image of the polynomial map given by n forms of
    equal degree d in K[y_1..y_m]: eliminates the y variables from the graph
    ideal (x_i - f_i).

    Returns a Groebner basis over R = K[x_1..x_n].  Pure lex by default;
    pass a BlockOrder for the faster block elimination variant."""
    from .rings import BlockOrder, PolyRing
    images = list(images)
    if not images:
        raise ValueError("need at least one image polynomial")
    yring = images[0].ring
    n = len(images)
    m = yring.nvars
    degs = set()
    for f in images:
        flag, deg = is_homogeneous(f)
        if not flag or deg is None or deg <= 0:
            raise ValueError("images must be nonzero homogeneous forms")
        degs.add(deg)
    if len(degs) != 1:
        raise ValueError("images must share one degree")
    if n_names is None:
        n_names = tuple(f"x{i + 1}" for i in range(n))
    S = PolyRing(tuple(n_names) + yring.names, n, yring.field)
    if order is None:
        order = LexOrder()
    if not order.eliminates(n, S.nvars):
        raise ValueError("order must eliminate the parameter variables")

    def embed(f):
        return Polynomial.from_terms(
            S, order, [(c, (0,) * n + m_) for c, m_ in f.terms])

    gens = []
    for i, f in enumerate(images):
        xi = tuple(1 if k == i else 0 for k in range(n)) + (0,) * m
        gens.append(Polynomial.from_terms(S, order, [(S.field.one, xi)]) - embed(f))
    J = IdealPresentation(S, tuple(gens))
    G = groebner_basis(J, order)
    return eliminate(G, n)


def substitute(g, images):
    """Evaluate g(f_1, ..., f_n) for polynomials f_i in another ring."""
    yring = images[0].ring
    order = images[0].order
    K = yring.field
    out = Polynomial.zero(yring, order)
    for c, mexp in g.terms:
        term = Polynomial.from_terms(yring, order,
                                     [(c, (0,) * yring.nvars)])
        for i, e in enumerate(mexp):
            for _ in range(e):
                term = term * images[i]
        out = out + term
    return out


# ---------------------------------------------------------------------------
# Lemma checks for the power substitution

def verify_poweli(J, dvec, keep, order=None):
    """Check, for phi(x_i) = x_i^{d_i} on all variables:
    (i) phi(G) of a lex Groebner basis G of J satisfies the Buchberger
        criterion (hence is a Groebner basis of phi(J)S), and
    (ii) alpha(J cap R) R  =  phi(J) S cap R  as ideals of R."""
    if order is None:
        order = LexOrder()
    if not isinstance(order, LexOrder):
        raise ValueError("the power-substitution lemma is checked for lex only")
    ring = J.ring
    phi = dvec if isinstance(dvec, PowerMap) else PowerMap(tuple(dvec))
    report = VerificationReport("poweli", ring.char)
    dig = digest_of(f"poweli:{[str(g) for g in J.generators]}:{phi.exponents}:{keep}")

    G = groebner_basis(J, order)
    phiG = [apply_power_map(phi, g) for g in G.elements]
    ok_i, witness_pair = passes_buchberger_criterion(phiG, order)

    # alpha(I) R with I = J cap R, alpha = phi restricted to R
    I = eliminate(G, keep)
    R = I.ring
    alpha = PowerMap(phi.exponents[:keep])
    alpha_I = IdealPresentation(
        R, tuple(apply_power_map(alpha, g) for g in I.elements))

    # J' cap R via an independent Buchberger run on phi(J)
    Jprime = image_ideal(phi, J)
    Gprime = groebner_basis(Jprime, order)
    JprimeR = eliminate(Gprime, keep).as_presentation()

    ok_ii = ideal_equal(alpha_I, JprimeR, order)

    values = {
        "buchberger_criterion_on_phi_G": ok_i,
        "alpha_I_equals_Jprime_cap_R": ok_ii,
        "basis_size": len(G),
    }
    if ok_i and ok_ii:
        report.add_pass(dig, values)
    else:
        witness = {}
        if not ok_i:
            witness["failing_pair"] = list(witness_pair)
        if not ok_ii:
            witness["alpha_I"] = [str(g) for g in alpha_I.generators]
            witness["Jprime_cap_R"] = [str(g) for g in JprimeR.generators]
        report.add_fail(dig, values, witness)
    return report
