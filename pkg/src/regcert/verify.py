"""End-to-end verification pipelines: the flattening inequality, the
initial/lex regularity chain, and the main regularity bound for
polynomially parametrised varieties.

Every check recomputes each side of an (in)equality through an
independent route before comparing; no check derives both sides from the
same intermediate object.
"""

import time
from fractions import Fraction

from .groebner import (IdealPresentation, eliminate, groebner_basis,
                       ideal_equal, image_ideal, initial_ideal,
                       kernel_of_map, verify_poweli)
from .instances import random_ideal, random_parametrisation
from .monomials import (MonomialIdeal, ci_hilbert_function, g_cap,
                        hilbert_function, lex_segment_ideal,
                        monomials_of_degree, num_monomials,
                        stable_regularity)
from .reports import VerificationReport, digest_of
from .resolution import (betti_table, check_flat_betti, matrix_rank,
                         regularity)
from .rings import (BlockOrder, LexOrder, Polynomial, PowerMap,
                    apply_power_map, is_homogeneous, mono_mul)
from .scalars import PrimeField

DEFAULT_CUTOFF = 32


# ---------------------------------------------------------------------------
# Hilbert function of a homogeneous ideal by direct linear algebra
# (independent of any Groebner computation)

def hf_direct(J, D):
    """Quotient-side Hilbert function of R/J up to degree D, computed as
    corank of the span of (monomial multiples of) the generators."""
    from .monomials import HilbertData
    ring = J.ring
    K = ring.field
    is_p = isinstance(K, PrimeField)
    dims = []
    for t in range(D + 1):
        basis = monomials_of_degree(ring.nvars, t)
        idx = {m: i for i, m in enumerate(basis)}
        rows = []
        for g in J.generators:
            e = g.degree()
            if e > t:
                continue
            for m in monomials_of_degree(ring.nvars, t - e):
                row = [0] * len(basis)
                for c, gm in g.terms:
                    row[idx[mono_mul(m, gm)]] = int(c) if is_p else c
                rows.append(row)
        rank = matrix_rank(rows, K) if rows else 0
        dims.append(num_monomials(ring.nvars, t) - rank)
    return HilbertData(tuple(dims), D, "quotient", ring.nvars)


def lex_ideal_of_presentation(J, cutoff=DEFAULT_CUTOFF, hf=None):
    """Lex-segment ideal Lex(J) of a homogeneous ideal, scanning degrees
    until the segment generators provably stop (persistence heuristic) or
    the cutoff is hit.

    Returns (MonomialIdeal, complete).  Pass hf to reuse a Hilbert
    function callable hf(D) -> HilbertData."""
    if hf is None:
        G = groebner_basis(J, LexOrder())
        inJ = initial_ideal(G)

        def hf(D):
            return hilbert_function(inJ, D)

    D = 8
    while True:
        D = min(D, cutoff)
        L, complete = lex_segment_ideal(hf(D), J.ring, D)
        if complete or D >= cutoff:
            return L, complete
        D *= 2


# ---------------------------------------------------------------------------
# Lemma-level wrappers

def verify_regflat(I, d, order=None):
    """The flattening inequality reg(I) <= reg(I')/d for I' the image of I
    under x_i -> x_i^d, together with the cellwise Betti identities."""
    if isinstance(I, IdealPresentation) and not I.homogeneous:
        raise ValueError("regflat requires a homogeneous ideal")
    report = check_flat_betti(I, d, order)
    report.check_name = "regflat"
    return report


def verify_poweli_trials(trials, seed, nvars=3, max_degree=3, max_power=3,
                         char=None):
    """Lemma-3 check over seeded random ideals and power maps."""
    import random
    from .scalars import DEFAULT_PRIME
    char = DEFAULT_PRIME if char is None else char
    report = VerificationReport("poweli", char, seed=seed)
    for trial in range(trials):
        t0 = time.perf_counter()
        rng = random.Random(("poweli", seed, trial).__repr__())
        J = random_ideal(nvars, seed * 1000 + trial, ngens=rng.randint(2, 3),
                         max_degree=max_degree, char=char)
        dvec = PowerMap(tuple(rng.randint(1, max_power)
                              for _ in range(nvars)))
        keep = rng.randint(1, nvars - 1)
        report.merge(verify_poweli(J, dvec, keep))
        report.timings_ms[f"trial{trial}"] = round(
            1000 * (time.perf_counter() - t0), 3)
    return report


def verify_regbound(J, keep, cutoff=DEFAULT_CUTOFF):
    """The chain reg(I) <= reg(in I) <= reg(in J) <= reg(Lex J) for
    I = J cap R, all initial ideals taken for lex, plus the degreewise
    Hilbert-function equality HF(J) = HF(in J)."""
    if not J.homogeneous:
        raise ValueError("regbound requires a homogeneous ideal")
    ring = J.ring
    report = VerificationReport("regbound", ring.char)
    dig = digest_of(f"regbound:{[str(g) for g in J.generators]}:{keep}")
    t0 = time.perf_counter()
    order = LexOrder()
    G = groebner_basis(J, order)
    inJ = initial_ideal(G)
    GI = eliminate(G, keep)
    I = GI.as_presentation()
    inI = initial_ideal(GI)

    reg_inJ = regularity(inJ)
    # reg(J) is order-independent; degrevlex keeps the Koszul cell
    # support small
    reg_J = regularity(J)
    if I.is_zero():
        reg_I = None
        reg_inI = None
    else:
        reg_I = regularity(I)
        reg_inI = regularity(inI)

    L, complete = lex_ideal_of_presentation(
        J, cutoff, hf=lambda D: hilbert_function(inJ, D))
    if not complete:
        report.add_inconclusive(dig, f"Lex(J) not stabilised by degree "
                                     f"{cutoff}")
        return report
    reg_lex = stable_regularity(L)

    # independent Hilbert function route: direct linear algebra on the
    # generators, past every generator degree of in(J)
    D = inJ.max_gen_degree() + 2
    hJ = hf_direct(J, D)
    h_inJ = hilbert_function(inJ, D)
    hf_equal = hJ.dims == h_inJ.dims
    hf_lex_equal = hilbert_function(L, D).dims == hJ.dims

    failures = []
    if reg_I is not None:
        if not reg_I <= reg_inI:
            failures.append({"kind": "reg_I<=reg_inI", "reg_I": reg_I,
                             "reg_inI": reg_inI})
        if not reg_inI <= reg_inJ:
            failures.append({"kind": "reg_inI<=reg_inJ", "reg_inI": reg_inI,
                             "reg_inJ": reg_inJ})
    if not reg_inJ <= reg_lex:
        failures.append({"kind": "reg_inJ<=reg_lex", "reg_inJ": reg_inJ,
                         "reg_lex": reg_lex})
    if not hf_equal:
        failures.append({"kind": "hilbert-mismatch",
                         "hf_J": list(hJ.dims), "hf_inJ": list(h_inJ.dims)})
    if not hf_lex_equal:
        failures.append({"kind": "lex-hilbert-mismatch",
                         "hf_J": list(hJ.dims),
                         "hf_lex": list(hilbert_function(L, D).dims)})

    values = {
        "reg_I": reg_I,
        "reg_inI": reg_inI,
        "reg_J": reg_J,
        "reg_inJ": reg_inJ,
        "reg_lex": reg_lex,
        "hf_equal": hf_equal,
        "I_gens": [str(g) for g in I.generators],
    }
    if failures:
        report.add_fail(dig, values, {"failures": failures})
    else:
        report.add_pass(dig, values)
    report.timings_ms["regbound"] = round(1000 * (time.perf_counter() - t0),
                                          3)
    return report


def verify_regbound_trials(trials, seed, char=None):
    """Regbound chain over seeded random homogeneous ideals in 3-4
    variables."""
    import random
    from .scalars import DEFAULT_PRIME
    char = DEFAULT_PRIME if char is None else char
    report = VerificationReport("regbound", char, seed=seed)
    for trial in range(trials):
        rng = random.Random(("regbound", seed, trial).__repr__())
        nvars = rng.choice([3, 4])
        J = random_ideal(nvars, seed * 1000 + trial,
                         ngens=rng.randint(2, nvars), max_degree=3,
                         char=char, homogeneous=True)
        keep = rng.randint(1, nvars - 1)
        report.merge(verify_regbound(J, keep))
    report.seed = seed
    return report


# ---------------------------------------------------------------------------
# the main theorem

def verify_main(param, cutoff=None, order=None):
    """The full pipeline for one parametrisation: P = ker(phi) via
    elimination, P' = alpha(P)R = J' cap R, the constant G_{n,d,m} through
    both routes, and the chain
        reg(P) <= reg(P')/d <= G/d <= d^(n 2^(m-1) - 1)."""
    n, m, d = param.n, param.m, param.d
    report = VerificationReport("main", param.ring.char)
    dig = digest_of(f"main:{n}:{m}:{d}:"
                    f"{[str(g) for g in param.f]}")
    t0 = time.perf_counter()
    if order is None:
        order = BlockOrder(n)

    # two quiet degrees past the cap so the persistence flag can certify
    # a lex ideal whose last generator sits exactly at the cap
    cap = g_cap(n, d, m)
    if cutoff is None:
        cutoff = cap + 2

    # route 1: the closed-form complete-intersection series
    from .monomials import compute_G
    G_series = compute_G(n, d, m)

    # route 2: Lex(J') from the actual parametrisation
    yring = param.ring
    S_names = tuple(f"x{i + 1}" for i in range(n)) + yring.names
    from .rings import PolyRing
    S = PolyRing(S_names, n, yring.field)

    def embed(f):
        return Polynomial.from_terms(
            S, order, [(c, (0,) * n + mm) for c, mm in f.terms])

    jp_gens = []
    for i, f in enumerate(param.f):
        xi = tuple(d if k == i else 0 for k in range(n)) + (0,) * m
        jp_gens.append(Polynomial.from_terms(S, order, [(S.field.one, xi)])
                       - embed(f))
    Jprime = IdealPresentation(S, tuple(jp_gens))
    Gp = groebner_basis(Jprime, order)
    in_Jp = initial_ideal(Gp)

    D = min(cap + 2, cutoff)
    h_actual = hilbert_function(in_Jp, D)
    h_series = ci_hilbert_function(n, d, m, D)
    hf_ci = h_actual.dims == h_series.dims

    failures = []
    inconclusive = None
    if not hf_ci:
        failures.append({"kind": "hilbert-vs-ci-series",
                         "hf_actual": list(h_actual.dims[:12]),
                         "hf_series": list(h_series.dims[:12])})
        G_actual = None
    else:
        L, complete = lex_segment_ideal(h_actual, S, D)
        if not complete:
            inconclusive = (f"Lex(J') not stabilised by degree {D}")
            G_actual = None
        else:
            G_actual = stable_regularity(L)
            if G_actual != G_series:
                failures.append({"kind": "G-route-mismatch",
                                 "series": G_series, "actual": G_actual})

    # P = J cap R via elimination from the graph ideal
    GP = kernel_of_map(list(param.f), order=order)
    P = GP.as_presentation()
    Pprime_from_Jprime = eliminate(Gp, n).as_presentation()
    R = P.ring

    values = {
        "n": n, "m": m, "d": d,
        "G_series": G_series, "G_actual": G_actual,
        "hf_matches_ci_series": hf_ci,
        "P_gens": [str(g) for g in P.generators],
        "bound": d ** (n * 2 ** (m - 1) - 1),
    }

    if P.is_zero():
        if not Pprime_from_Jprime.is_zero():
            failures.append({
                "kind": "Pprime-mismatch", "alpha_P": [],
                "Jprime_cap_R": [str(g)
                                 for g in Pprime_from_Jprime.generators]})
        values["reg_P"] = None
    else:
        if not all(is_homogeneous(g)[0] for g in P.generators):
            failures.append({"kind": "P-not-homogeneous"})
        else:
            alpha = PowerMap.uniform(n, d)
            Pprime = IdealPresentation(
                R, tuple(apply_power_map(alpha, g) for g in P.generators))
            if not ideal_equal(Pprime, Pprime_from_Jprime, LexOrder()):
                failures.append({
                    "kind": "Pprime-mismatch",
                    "alpha_P": [str(g) for g in Pprime.generators],
                    "Jprime_cap_R": [str(g)
                                     for g in Pprime_from_Jprime.generators]})
            reg_P = regularity(P)
            reg_Pp = regularity(Pprime)
            values["reg_P"] = reg_P
            values["reg_Pprime"] = reg_Pp
            lhs = Fraction(reg_Pp, d)
            if not reg_P <= lhs:
                failures.append({"kind": "reg_P<=reg_Pprime/d",
                                 "reg_P": reg_P, "rhs": str(lhs)})
            if G_actual is not None:
                if not lhs <= Fraction(G_actual, d):
                    failures.append({"kind": "reg_Pprime/d<=G/d",
                                     "lhs": str(lhs), "G": G_actual})
    if G_actual is not None and not G_actual <= d ** (n * 2 ** (m - 1)):
        failures.append({"kind": "G<=d^(n*2^(m-1))", "G": G_actual})

    bound = {"reg_P": values["bound"]}
    if failures:
        report.add_fail(dig, values, {"failures": failures}, bound)
    elif inconclusive:
        report.add_inconclusive(dig, inconclusive)
    else:
        report.add_pass(dig, values, bound)
    report.timings_ms["main"] = round(1000 * (time.perf_counter() - t0), 3)
    return report


def verify_main_trials(n, m, d, trials, seed, char=None, cutoff=None):
    """Main-theorem chain over seeded random parametrisations."""
    from .scalars import DEFAULT_PRIME
    char = DEFAULT_PRIME if char is None else char
    report = VerificationReport("main", char, seed=seed)
    for trial in range(trials):
        param = random_parametrisation(n, m, d, seed * 1000 + trial,
                                       char=char)
        report.merge(verify_main(param, cutoff=cutoff))
    return report
