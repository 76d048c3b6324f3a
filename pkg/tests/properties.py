"""Randomised exact checks, 1000 cases per suite."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from griess.apps import MultiplicityProblem, moments_from_multiplicities, solve_multiplicities
from griess.casimir import casimir_expansion
from griess.exact import Poly, RatFunc, linsolve
from griess.traceform import reduce_pairing, zhu_expand
from griess.vertex import OMEGA, virasoro_letter
from griess.virasoro import PBWVector, apply_mode, gram_entry, partitions

MANY = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)
exps = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(exps, small_q, max_size=4).map(Poly)


# -- ring axioms ---------------------------------------------------------------

@MANY
@given(polys, polys, polys)
def check_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly()
    assert a * Poly.const(1) == a


@MANY
@given(polys)
def check_poly_print_parse_roundtrip(a):
    assert Poly.parse(str(a)) == a


@MANY
@given(polys, polys.filter(lambda p: not p.is_zero()), st.fixed_dictionaries(
    {"c": small_q, "d": small_q, "h": small_q}))
def check_ratfunc_eval_homomorphism(a, b, at):
    r = RatFunc(a, b)
    if b.eval(at) != 0:
        assert r.eval(at) == a.eval(at) / b.eval(at)
        assert (r + r * r).eval(at) == r.eval(at) + r.eval(at) ** 2


# -- linsolve -------------------------------------------------------------------

@st.composite
def systems(draw):
    n = draw(st.integers(1, 4))
    m = [[draw(small_q) for _ in range(n)] for _ in range(n)]
    # diagonal dominance keeps the draw nonsingular
    for i in range(n):
        m[i][i] = sum(abs(x) for x in m[i]) + 1
    if draw(st.booleans()):
        m[0][0] = Poly.parse("c") + m[0][0] * 0 + 7
    b = [draw(polys) for _ in range(n)]
    return m, b


@MANY
@given(systems())
def check_linsolve_back_substitution(system):
    m, b = system
    x = linsolve(m, b)
    for row, rhs in zip(m, b):
        acc = RatFunc(0)
        for coef, xi in zip(row, x):
            acc = acc + RatFunc.coerce(coef) * xi
        assert acc == RatFunc.coerce(rhs)


# -- Gram symmetry and adjointness -------------------------------------------------

pairs_same_degree = st.integers(2, 8).flatmap(
    lambda m: st.tuples(st.sampled_from(partitions(m)), st.sampled_from(partitions(m))))


@MANY
@given(pairs_same_degree)
def check_gram_symmetry(pair):
    mu, nu = pair
    assert gram_entry(mu, nu) == gram_entry(nu, mu)


def _pair_vectors(u: PBWVector, v: PBWVector) -> Poly:
    out = Poly()
    for mu, a in u.coeffs.items():
        for nu, b in v.coeffs.items():
            out = out + a * b * gram_entry(mu, nu)
    return out


@st.composite
def adjoint_cases(draw):
    n = draw(st.integers(1, 4))
    m = draw(st.integers(2, 8 - n))
    if not partitions(m) or not partitions(m + n):
        m, n = 2, 2
    return n, draw(st.sampled_from(partitions(m))), draw(st.sampled_from(partitions(m + n)))


@MANY
@given(adjoint_cases())
def check_gram_adjointness(case):
    n, u, v = case
    left = _pair_vectors(apply_mode(-n, PBWVector.basis(u)), PBWVector.basis(v))
    right = _pair_vectors(PBWVector.basis(u), apply_mode(n, PBWVector.basis(v)))
    assert left == right


# -- reduce_pairing linearity ----------------------------------------------------------

@st.composite
def mode_words(draw):
    k = draw(st.integers(1, 3))
    term = draw(st.sampled_from(zhu_expand(k)))
    args = [draw(st.sampled_from(["a", "b", OMEGA])) for _ in range(k)]
    exp = casimir_expansion(term.weight)
    parts = draw(st.sampled_from(sorted(exp.coeffs) or [()]))
    return tuple(virasoro_letter(p) for p in reversed(parts)) + term.word(args)


@MANY
@given(mode_words(), mode_words(), polys, polys)
def check_reduce_pairing_linear(x, y, alpha, beta):
    if x == y:
        expr = {x: alpha + beta}
    else:
        expr = {x: alpha, y: beta}
    assert reduce_pairing(expr) == reduce_pairing(x).scale(alpha) + reduce_pairing(y).scale(beta)


# -- solve <-> moments ------------------------------------------------------------------

eigen_sets = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=20),
                      min_size=1, max_size=5, unique=True)


@MANY
@given(eigen_sets, st.data())
def check_multiplicities_roundtrip(lam, data):
    mult = {x: data.draw(st.integers(0, 5000)) for x in lam}
    moments = moments_from_multiplicities(mult, len(lam) - 1)
    sol = solve_multiplicities(MultiplicityProblem(lam, moments))
    assert sol.values == mult


@MANY
@given(eigen_sets, st.data())
def check_moments_roundtrip(lam, data):
    moments = [data.draw(small_q) for _ in lam]
    sol = solve_multiplicities(MultiplicityProblem(lam, moments))
    assert moments_from_multiplicities(sol.values, len(lam) - 1) == moments
