"""Reciprocal-binomial machinery: partial-fraction exactness, resonance
guards, classical regressions, and oracle agreement for every W shape."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulersum import (
    DomainError,
    WSumSpec,
    classical_w,
    classical_w110,
    classical_w111,
    gen_binomial,
    pf_coeffs,
    pf_coeffs_window,
    riemann_zeta,
    w_1_p,
    w_11_0,
    w_111,
    w_alt_1_p,
    w_alt_m_0,
    w_alt_m_1,
    w_m_0,
    w_m_1,
)
from eulersum.oracle import SeriesConfig, TailParams, truncated_series
from eulersum.wsums import precision_warning

Z2 = riemann_zeta(2)
Z3 = riemann_zeta(3)


def _rbinom_term(ns, k, b):
    out = np.full(ns.shape, np.longdouble(float(math.factorial(k))))
    for i in range(1, k + 1):
        out = out / (ns + b + i)
    return out


def _oracle(term, g, d, n=10**6, tol=1e-9):
    cfg = SeriesConfig(max_terms=n, target_tol=tol)
    return truncated_series(term, cfg, TailParams(growth=g, denom_degree=d)).value


def test_pf_coeffs_small():
    assert pf_coeffs(1).coeffs == (1.0,)
    assert pf_coeffs(2).coeffs == (2.0, -2.0)
    assert pf_coeffs(3).coeffs == (3.0, -6.0, 3.0)


def _exact_recon(k, a, n, window=False):
    # the alternating +-2^k weight cancellation is exact algebra; evaluate it
    # in rationals (floats are exact rationals) so the check certifies the
    # coefficients, not summation roundoff
    from fractions import Fraction

    af = Fraction(a)
    if window:
        recon = sum(
            Fraction(int(c)) / ((n + af + 1) * (n + r + 1 + af))
            for r, c in zip(range(1, k), pf_coeffs_window(k).coeffs)
        )
    else:
        recon = sum(
            Fraction(int(c)) / (n + af + r)
            for r, c in zip(range(1, k + 1), pf_coeffs(k).coeffs)
        )
    binom = Fraction(1)
    for i in range(1, k + 1):
        binom = binom * (n + af + i)
    binom = binom / math.factorial(k)
    return recon * binom


@given(
    k=st.integers(min_value=1, max_value=20),
    a=st.floats(min_value=0.001, max_value=5.0, allow_nan=False),
    n=st.sampled_from([1, 7, 123]),
)
@settings(max_examples=80, deadline=None)
def test_pf_reconstruction(k, a, n):
    # sum_r A_r/(n+a+r) times binom(n+k+a, k) must reconstruct 1
    assert abs(float(_exact_recon(k, a, n)) - 1.0) <= 1e-11


@given(
    k=st.integers(min_value=2, max_value=20),
    a=st.floats(min_value=0.001, max_value=5.0, allow_nan=False),
    n=st.sampled_from([1, 7, 123]),
)
@settings(max_examples=80, deadline=None)
def test_pf_window_reconstruction(k, a, n):
    assert abs(float(_exact_recon(k, a, n, window=True)) - 1.0) <= 1e-11


def test_pf_reconstruction_stays_stable_to_k30():
    for k in (25, 30):
        for n in (1, 9, 123):
            assert abs(float(_exact_recon(k, 0.37, n)) - 1.0) <= 1e-9


def test_pf_float_reconstruction_small_k():
    # plain float evaluation only holds full precision while the sum is not
    # many orders below the term magnitudes (small n relative to k)
    for k in (1, 2, 3, 5, 8):
        for n in (1, 4, 7):
            if k == 8 and n > 1:
                continue
            a = 0.41
            recon = sum(c / (n + a + r) for r, c in zip(range(1, k + 1), pf_coeffs(k).coeffs))
            assert recon * gen_binomial(n + k + a, float(k)) == pytest.approx(1.0, rel=1e-11)


def test_precision_warning_threshold():
    assert precision_warning(20) is None
    assert "k=25" in precision_warning(25)


def test_resonance_lattice():
    # resonance exactly when a - b is an integer in 1..k
    b, k = 0.25, 3
    for delta in (0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0):
        a = b + delta
        resonant = delta in (1.0, 2.0, 3.0)
        if resonant:
            with pytest.raises(DomainError):
                w_1_p(a, b, k, 1)
        else:
            w_1_p(a, b, k, 1)  # evaluates fine


def test_wsumspec_guards():
    with pytest.raises(DomainError):
        WSumSpec(k=1, a=0.5, b=0.5, orders=(1,), p=0)  # p + k <= 1
    with pytest.raises(DomainError):
        WSumSpec(k=2, a=0.5, b=0.5, orders=(1, 2), p=0)  # unsupported shape
    WSumSpec(k=2, a=0.5, b=0.5, orders=(1, 1), p=1)


def test_classical_values():
    assert classical_w110(2) == pytest.approx(2.0 * Z2 + 2.0, rel=1e-13)
    assert classical_w110(3) == pytest.approx(1.5 * Z2 - 9.0 / 8.0, rel=1e-13)
    assert classical_w111(1) == pytest.approx(3.0 * Z3, rel=1e-13)
    assert classical_w(2, "110") == classical_w110(2)
    assert classical_w(1, "111") == classical_w111(1)
    assert classical_w(2, "OneOneZero") == classical_w110(2)
    assert classical_w(3, "OneOneOne") == classical_w111(3)
    with pytest.raises(DomainError):
        classical_w110(1)
    with pytest.raises(DomainError):
        classical_w(2, "112")


def test_classical_against_oracle():
    for k in (1, 2, 3):
        want = _oracle(lambda ns, e, k=k: e.h1**2 * _rbinom_term(ns, k, 0.0) / ns,
                       2, k + 1)
        assert classical_w111(k) == pytest.approx(want, rel=1e-8)
    for k in (2, 3, 4):
        want = _oracle(lambda ns, e, k=k: e.h1**2 * _rbinom_term(ns, k, 0.0), 2, k)
        assert classical_w110(k) == pytest.approx(want, rel=1e-8)


def test_w_11_0_matches_classical():
    for k in range(2, 7):
        assert w_11_0(0.0, k) == pytest.approx(classical_w110(k), rel=1e-10)


def test_w_11_0_printed_variant():
    assert w_11_0(0.0, 2) == pytest.approx(2.0 * Z2 + 2.0, rel=1e-12)
    assert w_11_0(0.0, 2, as_printed=True) == pytest.approx(2.0 * Z2 + 4.0, rel=1e-12)


def test_w_1_p_against_oracle():
    for (a, b) in ((1.0, 0.5), (0.5, 1.0), (2.0, 0.25)):
        for (k, p) in ((2, 1), (3, 2)):
            want = _oracle(
                lambda ns, e, a=a, b=b, k=k, p=p:
                e.h1 * _rbinom_term(ns, k, b) / (ns + a) ** p, 1, k + p)
            assert w_1_p(a, b, k, p) == pytest.approx(want, rel=1e-8)


def test_w_m_0_against_oracle():
    for (b, k, m) in ((0.0, 2, 1), (0.5, 3, 2), (1.0, 2, 3)):
        want = _oracle(
            lambda ns, e, b=b, k=k, m=m:
            getattr(e, f"h{m}") * _rbinom_term(ns, k, b),
            1 if m == 1 else 0, k)
        assert w_m_0(b, k, m) == pytest.approx(want, rel=1e-8)


def test_w_m_1_values_and_oracle():
    assert w_m_1(1.0, 1, 1) == pytest.approx(1.0, rel=1e-12)
    for (a, k, m) in ((1.0, 2, 1), (0.5, 2, 2)):
        want = _oracle(
            lambda ns, e, a=a, k=k, m=m:
            getattr(e, f"h{m}") * _rbinom_term(ns, k, a) / (ns + a),
            1 if m == 1 else 0, k + 1)
        assert w_m_1(a, k, m) == pytest.approx(want, rel=1e-8)


def test_w_111_values_and_oracle():
    assert w_111(1.0, 1) == pytest.approx(Z2 + 1.0, rel=1e-12)
    for (a, k) in ((1.0, 2), (2.5, 3)):
        want = _oracle(
            lambda ns, e, a=a, k=k: e.h1**2 * _rbinom_term(ns, k, a) / (ns + a), 2, k + 1)
        assert w_111(a, k) == pytest.approx(want, rel=1e-8)


def test_w_alt_shapes_against_oracle():
    for (a, b, k, p) in ((1.0, 0.5, 2, 1), (0.5, 1.0, 2, 2)):
        want = _oracle(
            lambda ns, e, a=a, b=b, k=k, p=p:
            e.hb1 * _rbinom_term(ns, k, b) / (ns + a) ** p, 0, k + p)
        assert w_alt_1_p(a, b, k, p) == pytest.approx(want, rel=1e-8)
    for (a, k, m) in ((0, 2, 1), (1, 3, 2)):
        want = _oracle(
            lambda ns, e, a=a, k=k, m=m:
            getattr(e, f"hb{m}") * _rbinom_term(ns, k, float(a)), 0, k)
        assert w_alt_m_0(a, k, m) == pytest.approx(want, rel=1e-8)
    for (a, k, m) in ((1, 1, 1), (1, 2, 2), (2, 2, 1)):
        want = _oracle(
            lambda ns, e, a=a, k=k, m=m:
            getattr(e, f"hb{m}") * _rbinom_term(ns, k, float(a)) / (ns + a), 0, k + 1)
        assert w_alt_m_1(a, k, m) == pytest.approx(want, rel=1e-8)


def test_alt_domain_guards():
    with pytest.raises(DomainError):
        w_alt_m_0(0.5, 2, 1)
    with pytest.raises(DomainError):
        w_alt_m_1(0, 2, 1)
    with pytest.raises(DomainError):
        w_alt_1_p(2.5, 0.5, 2, 1)  # resonance a = b + 2


def test_closed_form_k_cap():
    with pytest.raises(DomainError):
        w_m_1(0.5, 31, 1)
