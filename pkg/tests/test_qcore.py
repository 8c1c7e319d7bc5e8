"""q-integers, Gaussian binomials, x-polynomials over Q(q), and the two
interpolating bases."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qballot.qlaurent import (
    ONE,
    Q,
    RF_ONE,
    RF_ZERO,
    ZERO,
    ExactnessError,
    QLaurent,
    QRatFunc,
    ql_divexact,
)
from qballot.qcore import (
    QBinomExpansion,
    XPoly,
    cyclotomic,
    from_qbinom_basis,
    gauss_binom,
    hahn_delta,
    newton_interpolate,
    newton_p,
    q1_specialize,
    q_derivative,
    q_factorial,
    q_int,
    q_pochhammer,
    q_stirling,
    qbinom_x,
    qfactorial_coprime,
    reduce_by_qfactorial,
    subst_affine,
    to_qbinom_basis,
    xpoly_from_laurent,
)

# ---------------------------------------------------------------------------
# q-integers and q-factorials


def test_q_int_values():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(3) == QLaurent({0: 1, 1: 1, 2: 1})
    # [-n]_q = -q^(-n) [n]_q
    assert q_int(-2) == QLaurent({-1: -1, -2: -1})
    assert q_int(-3) == q_int(3) * QLaurent.monomial(-3, -1)


def test_q_int_addition_rule():
    # [m+n]_q = [m]_q + q^m [n]_q
    for m in range(0, 6):
        for n in range(0, 6):
            assert q_int(m + n) == q_int(m) + q_int(n).shifted(m)


def test_q_factorial():
    assert q_factorial(0) == ONE
    assert q_factorial(3) == q_int(1) * q_int(2) * q_int(3)
    assert q_factorial(4).eval_at(1) == 24
    with pytest.raises(ValueError):
        q_factorial(-1)


def test_pochhammer_vs_factorial():
    # (q;q)_k = (1-q)^k [k]_q!
    for k in range(0, 7):
        assert q_pochhammer(k) == (ONE - Q) ** k * q_factorial(k)


# ---------------------------------------------------------------------------
# Gaussian binomials


def test_gauss_binom_values():
    assert gauss_binom(4, 2) == QLaurent({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert gauss_binom(5, 0) == ONE
    assert gauss_binom(3, 5) == ZERO
    assert gauss_binom(0, 0) == ONE


def test_gauss_binom_symmetry_and_pascal():
    for n in range(0, 9):
        for k in range(0, n + 1):
            b = gauss_binom(n, k)
            assert b == gauss_binom(n, n - k)
            if 0 < k < n:
                assert b == gauss_binom(n - 1, k - 1) + gauss_binom(n - 1, k).shifted(k)
                assert b == gauss_binom(n - 1, k) + gauss_binom(n - 1, k - 1).shifted(n - k)


def test_gauss_binom_counts_at_one():
    for n in range(0, 9):
        for k in range(0, n + 1):
            assert gauss_binom(n, k).eval_at(1) == comb(n, k)


def test_gauss_binom_product_formula():
    # [n k]_q [k]_q! [n-k]_q! = [n]_q!
    for n in range(0, 8):
        for k in range(0, n + 1):
            assert gauss_binom(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n)


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def test_cyclotomic_small():
    assert cyclotomic(1) == Q - 1
    assert cyclotomic(2) == ONE + Q
    assert cyclotomic(6) == QLaurent({0: 1, 1: -1, 2: 1})
    assert cyclotomic(12) == QLaurent({0: 1, 2: -1, 4: 1})


def test_cyclotomic_product():
    # prod over d | n of Phi_d = q^n - 1
    for n in range(1, 13):
        prod = ONE
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == QLaurent.monomial(n) - 1


def test_qfactorial_cyclotomic_structure():
    # [n]_q! = prod over e >= 2 of Phi_e^floor(n/e)
    for n in range(0, 9):
        prod = ONE
        for e in range(2, n + 1):
            prod = prod * cyclotomic(e) ** (n // e)
        assert prod == q_factorial(n)


# ---------------------------------------------------------------------------
# XPoly basics


def _xp(*laurent_coeffs):
    return xpoly_from_laurent([QLaurent(c) if isinstance(c, dict) else c for c in laurent_coeffs])


def test_xpoly_construction_and_trim():
    f = XPoly([RF_ONE, RF_ZERO, RF_ZERO])
    assert f.degree == 0
    assert XPoly.zero().degree == -1
    assert XPoly.zero().is_zero
    assert XPoly.x().degree == 1
    assert XPoly.const(Fraction(2, 3)).coeff(0) == QRatFunc(QLaurent({0: Fraction(2, 3)}))
    assert XPoly.const(0).is_zero


def test_xpoly_arithmetic():
    x = XPoly.x()
    f = x * x + x * 2 + 1
    assert f.coeffs == (RF_ONE * 1, RF_ONE * 2, RF_ONE)
    assert (f - f).is_zero
    g = f * QRatFunc(Q)
    assert g.coeff(1) == QRatFunc(QLaurent({1: 2}))
    assert f.leading == RF_ONE
    assert f.coeff(17) == RF_ZERO


def test_xpoly_eval_matches_naive():
    f = _xp({0: 1, 1: 1}, {2: 3}, {-1: 1})
    pt = QRatFunc(ONE + Q)
    naive = RF_ZERO
    for k, c in enumerate(f.coeffs):
        naive = naive + c * pt**k
    assert f.eval(pt) == naive
    assert f.eval(0) == QRatFunc(ONE + Q)


def test_xpoly_str():
    f = _xp({0: 1, 1: 1}, {1: 1})
    assert str(f) == "1+q + qx"
    assert str(_xp({0: 1}, {0: 1, 1: 2})) == "1 + (1+2q)x"
    assert str(XPoly.zero()) == "0"


def test_xpoly_json_roundtrip():
    f = XPoly([QRatFunc(Q, ONE + Q), RF_ONE])
    assert XPoly.from_json(f.to_json()) == f


# ---------------------------------------------------------------------------
# the q-binomial basis {x choose k}_q


def test_qbinom_x_small():
    assert qbinom_x(0) == XPoly.const(1)
    assert qbinom_x(1) == XPoly.x()
    # {x choose 2}_q = x(x-1)/[2]_q!
    two = qbinom_x(2)
    inv = QRatFunc(ONE, ONE + Q)
    assert two.coeff(2) == inv
    assert two.coeff(1) == inv * -1
    assert two.coeff(0) == RF_ZERO


def test_qbinom_bridge_to_gauss():
    # {[n]_q choose k}_q = q^(k(k-1)/2) [n k]_q
    for n in range(0, 7):
        node = QRatFunc(q_int(n))
        for k in range(0, 7):
            got = qbinom_x(k).eval(node)
            want = QRatFunc(gauss_binom(n, k).shifted(k * (k - 1) // 2))
            assert got == want, (n, k)


def test_qbinom_at_minus_one_over_q():
    # {-1/q choose j}_q = (-q)^(-j); the value that pins the side condition
    node = QRatFunc(QLaurent.monomial(-1, -1))
    for j in range(0, 7):
        want = QRatFunc(QLaurent.monomial(-j, -1 if j % 2 else 1))
        assert qbinom_x(j).eval(node) == want


def test_hahn_delta_lowers_qbinom():
    for k in range(1, 7):
        assert hahn_delta(qbinom_x(k)) == qbinom_x(k - 1)
    assert hahn_delta(XPoly.const(5)).is_zero


# ---------------------------------------------------------------------------
# the Newton basis p_k


def test_newton_p_interpolates_gauss_binom():
    for n in range(0, 7):
        node = QRatFunc(QLaurent.monomial(n))
        for k in range(0, 7):
            assert newton_p(k).eval(node) == QRatFunc(gauss_binom(n, k)), (n, k)


def test_q_derivative_monomials():
    x = XPoly.x()
    f = x * x * x
    assert q_derivative(f) == x * x * QRatFunc(q_int(3))
    assert q_derivative(XPoly.const(7)).is_zero


def test_q_derivative_lowers_newton_p():
    # D_q p_k = q^(1-k)/(q-1) p_{k-1}
    for k in range(1, 6):
        scale = QRatFunc(QLaurent.monomial(1 - k), Q - 1)
        assert q_derivative(newton_p(k)) == newton_p(k - 1) * scale


def test_q_derivative_iterated_on_newton_p():
    # D_q^j p_k = q^(binom(j+1,2) - jk) / (q-1)^j p_{k-j}
    for k in range(0, 6):
        for j in range(0, k + 1):
            f = newton_p(k)
            for _ in range(j):
                f = q_derivative(f)
            scale = QRatFunc(
                QLaurent.monomial(j * (j + 1) // 2 - j * k), (Q - 1) ** j
            )
            assert f == newton_p(k - j) * scale, (k, j)


def test_newton_basis_coefficient_extraction():
    # If f = sum c_j p_j then c_j = q^(binom(j,2)) (q-1)^j (D_q^j f)(1).
    coeffs = [QRatFunc(ONE + Q), QRatFunc(Q, ONE + Q), QRatFunc(QLaurent.monomial(-1))]
    f = XPoly.zero()
    for j, c in enumerate(coeffs):
        f = f + newton_p(j) * c
    one = QRatFunc(ONE)
    g = f
    for j, c in enumerate(coeffs):
        scale = QRatFunc(QLaurent.monomial(j * (j - 1) // 2), ONE) * QRatFunc((Q - 1) ** j)
        assert scale * g.eval(one) == c, j
        g = q_derivative(g)


# ---------------------------------------------------------------------------
# affine substitution


def test_subst_affine_identity_and_shift():
    f = _xp({0: 1}, {1: 1}, {3: 1})
    assert subst_affine(f, 1, 0) == f
    shifted = subst_affine(f, 1, 1)
    assert shifted.eval(0) == f.eval(QRatFunc(ONE))


def test_subst_affine_composes():
    f = _xp({0: 1, 2: 1}, {1: 2}, {0: 1})
    a, b, c, d = (
        QRatFunc(Q),
        RF_ONE,
        QRatFunc(ONE + Q),
        QRatFunc(ONE, ONE + Q),
    )
    lhs = subst_affine(subst_affine(f, a, b), c, d)
    rhs = subst_affine(f, a * c, a * d + b)
    assert lhs == rhs


def test_subst_affine_rejects_bad_scalars():
    with pytest.raises(TypeError):
        subst_affine(XPoly.x(), "q", 0)


# ---------------------------------------------------------------------------
# expansions in the q-binomial basis

small_ratfuncs = st.builds(
    lambda num, den_choice: QRatFunc(
        QLaurent(num), ONE + Q if den_choice else ONE
    ),
    st.dictionaries(
        st.integers(min_value=-3, max_value=3),
        st.integers(min_value=-6, max_value=6),
        max_size=3,
    ),
    st.booleans(),
)


@given(st.lists(small_ratfuncs, min_size=1, max_size=5))
@settings(max_examples=40, deadline=None)
def test_qbinom_basis_roundtrip(cs):
    f = XPoly(cs)
    e = to_qbinom_basis(f)
    assert from_qbinom_basis(e) == f


def test_qbinom_expansion_of_basis_vectors():
    for k in range(0, 6):
        e = to_qbinom_basis(qbinom_x(k))
        want = [RF_ZERO] * k + [RF_ONE]
        assert list(e.coeffs) == want


def test_qbinom_expansion_str_and_json():
    e = to_qbinom_basis(_xp({0: 1, 1: 1}, {1: 1}))
    s = str(e)
    assert "C(x,1)_q" in s
    blob = e.to_json()
    assert blob["basis"] == "qbinom"
    assert QBinomExpansion.from_json(blob).coeffs == e.coeffs
    with pytest.raises(ValueError):
        QBinomExpansion.from_json({"basis": "newton", "coeffs": []})


def test_from_qbinom_trims_trailing_zeros():
    e = QBinomExpansion([RF_ONE, RF_ZERO, RF_ZERO])
    assert from_qbinom_basis(e) == XPoly.const(1)


# ---------------------------------------------------------------------------
# q-Stirling numbers


def test_q_stirling_values():
    assert q_stirling(0, 0) == ONE
    assert q_stirling(3, 2) == QLaurent({0: 2, 1: 1})
    assert q_stirling(4, 1) == ONE
    assert q_stirling(2, 3) == ZERO
    assert q_stirling(4, 4) == ONE


def test_q_stirling_counts_at_one():
    # classical Stirling set numbers at q = 1
    want = {(4, 2): 7, (5, 2): 15, (5, 3): 25, (6, 3): 90}
    for (n, k), v in want.items():
        assert q_stirling(n, k).eval_at(1) == v


def test_q_stirling_from_monomial_expansion():
    # delta^k (x^n) at 0 equals [k]_q! S_q(n, k)
    for n in range(0, 7):
        f = XPoly([RF_ZERO] * n + [RF_ONE])
        e = to_qbinom_basis(f)
        for k in range(0, n + 1):
            got = e.coeffs[k] if k < len(e.coeffs) else RF_ZERO
            assert got == QRatFunc(q_factorial(k) * q_stirling(n, k)), (n, k)


# ---------------------------------------------------------------------------
# Newton interpolation over Q(q)


def test_newton_interpolate_recovers_polynomial():
    f = _xp({0: 1, 1: 2}, {2: 1}, {0: 1, 3: -1})
    nodes = [QRatFunc(q_int(i)) for i in range(4)]
    values = [f.eval(x) for x in nodes]
    assert newton_interpolate(nodes, values) == f


def test_newton_interpolate_errors():
    with pytest.raises(ValueError):
        newton_interpolate([RF_ONE, RF_ONE], [RF_ZERO, RF_ONE])
    with pytest.raises(ValueError):
        newton_interpolate([RF_ONE], [RF_ZERO, RF_ONE])
    assert newton_interpolate([], []).is_zero


# ---------------------------------------------------------------------------
# q = 1 specialization


def test_q1_specialize():
    f = _xp({0: 1, 1: 1}, {2: 3})
    g = q1_specialize(f)
    assert g.coeff(0) == QRatFunc(QLaurent({0: 2}))
    assert g.coeff(1) == QRatFunc(QLaurent({0: 3}))


# ---------------------------------------------------------------------------
# exact division by q-factorials


@given(st.dictionaries(
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=-9, max_value=9),
    max_size=4,
), st.integers(min_value=0, max_value=6))
@settings(max_examples=40, deadline=None)
def test_reduce_by_qfactorial_matches_generic_reduction(terms, d):
    num = QLaurent(terms)
    assert reduce_by_qfactorial(num, d) == QRatFunc(num, q_factorial(d))


def test_reduce_by_qfactorial_exact_case():
    got = reduce_by_qfactorial(q_factorial(4) * (ONE + Q), 4)
    assert got == QRatFunc(ONE + Q)
    assert got.den == ONE


def test_qfactorial_coprime_cases():
    assert qfactorial_coprime([], 5) is True
    assert qfactorial_coprime([ONE + Q, ZERO], 1) is True
    # both columns share Phi_2 = 1 + q, which divides [3]_q!
    shared = [
        (ONE + Q) * QLaurent({0: 1, 1: 3}),
        (ONE + Q).shifted(2),
    ]
    assert qfactorial_coprime(shared, 3) is False
    # a common factor of q alone never counts: units in the Laurent ring
    assert qfactorial_coprime([Q, Q * Q], 4) is True
    # coprime columns
    assert qfactorial_coprime([ONE + Q, QLaurent({0: 1, 1: 1, 2: 1})], 6) is True
    # non-integer coefficients: undecided
    assert qfactorial_coprime([QLaurent({0: Fraction(1, 2)})], 3) is None


def test_qfactorial_coprime_agrees_with_reduction():
    # columns divisible by Phi_5 relative to [5]_q!
    phi5 = cyclotomic(5)
    cols = [phi5 * (ONE + Q), phi5.shifted(1)]
    assert qfactorial_coprime(cols, 5) is False
    assert qfactorial_coprime(cols, 4) is True  # Phi_5 does not divide [4]_q!
