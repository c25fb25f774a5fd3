"""Oracle engines: truncated summation, alternating acceleration, tanh-sinh
quadrature, and the verification driver's status logic."""
import math

import pytest

from eulersum import (
    ConvergenceError,
    DomainError,
    EvalResult,
    IdentityCase,
    Integrand,
    LN2,
    SeriesConfig,
    Status,
    TailParams,
    Variant,
    accelerated_alternating,
    grid_verify,
    quadrature,
    riemann_zeta,
    truncated_series,
    verify_identity,
)
from eulersum.oracle import alternating_cross_check
from eulersum import catalog


def test_series_config_guards():
    with pytest.raises(DomainError):
        SeriesConfig(max_terms=5)
    with pytest.raises(DomainError):
        SeriesConfig(target_tol=0.0)
    cfg = SeriesConfig()
    assert cfg.max_terms == 10**6 and cfg.target_tol == 1e-9


def test_eval_result_guard():
    with pytest.raises(DomainError):
        EvalResult(value=1.0, abs_error_estimate=-1.0, method="closed", work=0)


def test_truncated_basel():
    cfg = SeriesConfig(target_tol=1e-9)
    res = truncated_series(lambda ns, e: 1.0 / (ns * ns), cfg,
                           TailParams(growth=0, denom_degree=2))
    assert abs(res.value - riemann_zeta(2)) <= 1e-12
    assert res.abs_error_estimate <= 1e-9
    assert res.work == 10**6


def test_truncated_known_window():
    cfg = SeriesConfig(target_tol=1e-9)
    res = truncated_series(lambda ns, e: e.h1 / ((ns + 1.0) * (ns + 2.0)), cfg,
                           TailParams(growth=1, denom_degree=2))
    assert abs(res.value - 1.0) <= 1e-9


def test_truncated_rejects_divergent():
    cfg = SeriesConfig()
    with pytest.raises(ConvergenceError):
        truncated_series(lambda ns, e: 1.0 / ns, cfg, TailParams(growth=0, denom_degree=1))


def test_truncated_error_estimate_is_honest():
    # true error must sit inside the reported estimate on assorted shapes
    cfg = SeriesConfig(target_tol=1e-6)
    cases = [
        (lambda ns, e: 1.0 / (ns * ns), 0, 2, riemann_zeta(2)),
        (lambda ns, e: e.h1 / ((ns + 1.0) * (ns + 2.0)), 1, 2, 1.0),
        (lambda ns, e: e.h1 / (ns + 1.0) ** 2, 1, 2, riemann_zeta(3)),
        (lambda ns, e: e.hb1 / ((ns + 1.0) * (ns + 2.0)), 0, 2, 2.0 * LN2 - 1.0),
    ]
    for term, g, d, truth in cases:
        res = truncated_series(term, cfg, TailParams(growth=g, denom_degree=d))
        assert abs(res.value - truth) <= res.abs_error_estimate


def test_truncated_doubling_self_consistency():
    # N and 2N runs agree within the combined reported estimates
    term = lambda ns, e: e.h1**2 / ((ns + 0.5) * (ns + 2.5))
    tail = TailParams(growth=2, denom_degree=2)
    r1 = truncated_series(term, SeriesConfig(max_terms=10**6, target_tol=1e-6), tail)
    r2 = truncated_series(term, SeriesConfig(max_terms=2 * 10**6, target_tol=1e-6), tail)
    assert abs(r1.value - r2.value) <= r1.abs_error_estimate + r2.abs_error_estimate


def test_accelerated_alternating_values():
    cfg = SeriesConfig(target_tol=1e-12)
    res = accelerated_alternating(lambda n: 1.0 / n, cfg)
    assert abs(res.value - LN2) <= 1e-12
    res = accelerated_alternating(lambda n: 1.0 / (n * n), cfg)
    assert abs(res.value - math.pi**2 / 12.0) <= 1e-13
    assert res.work <= 10**4


def test_accelerated_cross_check_agreement():
    # two independent accelerators agree on shifted alternating series
    cfg = SeriesConfig(target_tol=1e-11)
    for a in (0.0, 0.5, 2.5):
        for s in (1, 2, 3):
            term = lambda n, a=a, s=s: 1.0 / (n + a) ** s
            fast = accelerated_alternating(term, cfg).value
            slow = alternating_cross_check(term)
            assert abs(fast - slow) <= 1e-11


def test_quadrature_values():
    res = quadrature(Integrand.LOG_POW_MOMENT, {"a": 1.0, "m": 2}, tol=1e-12)
    assert abs(res.value - 2.0) <= 1e-12
    res = quadrature(Integrand.LOG_POW_MOMENT, {"a": 2.0, "m": 1}, tol=1e-12)
    assert abs(res.value + 0.75) <= 1e-12
    res = quadrature(Integrand.POLYLOG_MOMENT, {"a": 1.0, "m": 3}, tol=1e-12)
    want = riemann_zeta(3) - riemann_zeta(2) + 1.0
    assert abs(res.value - want) <= 1e-11


def test_quadrature_guards():
    with pytest.raises(DomainError):
        quadrature(Integrand.LOG_POW_MOMENT, {"a": 1.0, "m": 2}, tol=1e-14)
    with pytest.raises(DomainError):
        quadrature(Integrand.LOG_POW_MOMENT, {"a": -1.0, "m": 2})
    with pytest.raises(DomainError):
        quadrature("no_such_integrand", {})


def test_verify_identity_statuses():
    ok = verify_identity(IdentityCase("eq2.13", {"a": 1.0, "k": 1, "m": 1}, tol=1e-8))
    assert ok.status is Status.CONFIRMED
    bad = verify_identity(IdentityCase("eq2.9", {"a": 1.0, "b": 2.0}, tol=1e-8,
                                       variant=Variant.AS_PRINTED))
    assert bad.status is Status.REFUTED
    assert bad.abs_residual == pytest.approx(1.25, abs=1e-9)
    assert bad.oracle_error_bound <= 1e-9
    guard = verify_identity(IdentityCase("eq3.9", {"a": 2.0, "b": 1.0, "k": 1, "p": 1},
                                         tol=1e-8))
    assert guard.status is Status.INCONCLUSIVE


def test_verify_unknown_identity_raises():
    with pytest.raises(DomainError):
        verify_identity(IdentityCase("eq9.9", {}, tol=1e-8))


def test_verify_inconclusive_when_oracle_cannot_meet_tol():
    # a tolerance far below what max_terms can certify must never refute
    cfg = SeriesConfig(max_terms=1000)
    rec = verify_identity(
        IdentityCase("eq2.22", {"a": 0.5, "k": 1}, tol=1e-10), cfg)
    assert rec.status is Status.INCONCLUSIVE


def test_grid_verify_order_counts_and_empty():
    assert grid_verify([]).records == ()
    cases = [
        IdentityCase("eq2.13", {"a": 1.0, "k": 1, "m": 1}, tol=1e-7),
        IdentityCase("eq2.9", {"a": 1.0, "b": 2.0}, tol=1e-7, variant=Variant.AS_PRINTED),
        IdentityCase("eq3.9", {"a": 2.0, "b": 1.0, "k": 1, "p": 1}, tol=1e-7),
    ]
    result = grid_verify(cases)
    assert [r.case.identity_id for r in result.records] == ["eq2.13", "eq2.9", "eq3.9"]
    assert (result.confirmed, result.refuted, result.inconclusive) == (1, 1, 1)


def test_verify_determinism():
    case = IdentityCase("eq2.14", {"a": 2.5, "m": 2}, tol=1e-7)
    a = verify_identity(case)
    b = verify_identity(case)
    assert a == b


def test_default_suite_shape():
    cases = catalog.default_cases(variant="both")
    assert 190 <= len(cases) <= 260
    printed = [c for c in cases if c.variant is Variant.AS_PRINTED]
    assert sorted({c.identity_id for c in printed}) == ["eq2.9", "eq3.15", "eq4.2"]
    corrected = [c for c in cases if c.variant is Variant.CORRECTED]
    assert {c.identity_id for c in corrected} >= {
        "eq1.27", "eq1.28", "eq2.13", "eq2.14", "eq2.18", "eq2.19", "eq2.20",
        "eq2.21", "eq2.22", "eq2.27", "eq2.28", "eq2.29", "eq2.36", "eq2.37",
        "eq3.9", "eq3.11", "eq3.13", "eq3.15", "eq3.16", "eq4.3", "eq4.5",
        "eq4.7", "eq4.10", "eq4.11", "eq4.12", "eq4.13",
    }


def test_catalog_validates_grids():
    # every default grid point satisfies its own identity's preconditions
    for ident_id in catalog.ids():
        ident = catalog.get(ident_id)
        for params in ident.grid:
            ident.validate(**params)
