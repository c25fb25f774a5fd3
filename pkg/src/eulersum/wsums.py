"""Partial-fraction expansion of reciprocal binomial coefficients and the
top-level W-sum closed forms built from the window sums.

A W sum is sum_n numerator(n) / ((n+a)^p * binom(n+k+b, k)).  Expanding the
reciprocal binomial over simple poles reduces every supported shape to the
bilinear, power and window sums of the other modules.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .alt_sums import alt_sum_H1_bilinear, alt_sum_H1_power, alt_sum_Hm_window
from .errors import DomainError
from .harmonic import harmonic_num, param_harmonic, shifted_harmonic
from .linear_sums import (
    sum_H1_bilinear,
    sum_H1_power,
    sum_H1sq_window,
    sum_Hm_window,
)
from .specfun import as_shift, riemann_zeta

_PF_MAX_K = 60
_CLOSED_FORM_MAX_K = 30
_PRECISION_WARN_K = 20


@dataclass(frozen=True)
class WSumSpec:
    """Shape of a reciprocal-binomial sum: orders, power p, shifts, parity."""

    k: int
    a: float
    b: float
    orders: tuple[int, ...]
    p: int
    alternating: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("binomial depth k must be >= 1")
        if self.p < 0:
            raise DomainError("power p must be >= 0")
        if self.p + self.k <= 1:
            raise DomainError("convergence requires p + k > 1")
        orders = tuple(self.orders)
        if orders == (1,):
            supported = True  # any p
        elif len(orders) == 1:
            supported = self.p in (0, 1)
        elif orders == (1, 1):
            supported = self.p in (0, 1) and not self.alternating
        else:
            supported = False
        if not supported:
            raise DomainError(f"unsupported W-sum shape orders={self.orders} p={self.p}")


@dataclass(frozen=True)
class PartialFractionCoeffs:
    """Weights A_r with 1/binom(n+k+a, k) = sum_r A_r/(n+a+r)."""

    k: int
    coeffs: tuple[float, ...]


def pf_coeffs(k: int) -> PartialFractionCoeffs:
    """Simple-pole expansion weights A_r = (-1)^(r+1) r C(k, r), r = 1..k."""
    if not 1 <= k <= _PF_MAX_K:
        raise DomainError(f"pf_coeffs supports 1 <= k <= {_PF_MAX_K}")
    k = int(k)
    return PartialFractionCoeffs(
        k=k,
        coeffs=tuple(float((-1) ** (r + 1) * r * math.comb(k, r)) for r in range(1, k + 1)),
    )


def pf_coeffs_window(k: int) -> PartialFractionCoeffs:
    """Window expansion: 1/binom(n+k+a,k) = sum_r w_r/((n+a+1)(n+a+r+1)), k >= 2."""
    if not 2 <= k <= _PF_MAX_K:
        raise DomainError(f"pf_coeffs_window supports 2 <= k <= {_PF_MAX_K}")
    k = int(k)
    return PartialFractionCoeffs(
        k=k,
        coeffs=tuple(float(k * (-1) ** (r + 1) * r * math.comb(k - 1, r)) for r in range(1, k)),
    )


def _guard_k(k: int, minimum: int = 1) -> int:
    if k < minimum or k != int(k):
        raise DomainError(f"k={k} must be an integer >= {minimum}")
    k = int(k)
    if k > _CLOSED_FORM_MAX_K:
        raise DomainError(
            f"closed-form W evaluation capped at k <= {_CLOSED_FORM_MAX_K}: "
            "the alternating partial-fraction weights grow like 2^k and wash "
            "out double precision"
        )
    return k


def precision_warning(k: int) -> str | None:
    """Advisory message once coefficient growth starts costing digits."""
    if k > _PRECISION_WARN_K:
        return (
            f"k={k}: partial-fraction weights reach ~2^{k}; expect roughly "
            f"{k - _PRECISION_WARN_K} fewer trustworthy digits"
        )
    return None


def _check_resonance(a: float, b: float, k: int):
    d = a - b
    r = round(d)
    if 1 <= r <= k and abs(d - r) <= 1e-12 * max(1.0, abs(d)):
        raise DomainError(
            f"resonance a = b + r at r={r}: the partial-fraction denominator "
            "collides with the power factor"
        )


def w_1_p(a: float, b: float, k: int, p: int) -> float:
    """W sum with numerator H_n over (n+a)^p binom(n+k+b, k), p >= 1."""
    a = as_shift(a, minimum=0.0, name="a")
    b = as_shift(b, minimum=0.0, name="b")
    k = _guard_k(k)
    if p < 1 or p != int(p):
        raise DomainError(f"w_1_p requires integer p >= 1, got {p}")
    p = int(p)
    _check_resonance(a, b, k)
    out = 0.0
    for r, c in zip(range(1, k + 1), pf_coeffs(k).coeffs):
        out += c * sum_H1_bilinear(a, b + r) / (a - b - r) ** (p - 1)
        out -= c * sum(
            sum_H1_power(a, j) / (a - b - r) ** (p + 1 - j) for j in range(2, p + 1)
        )
    return out


def w_m_0(b: float, k: int, m: int) -> float:
    """W sum with numerator H_n^(m) and no power factor (p = 0), k >= 2.

    With p = 0 the sum depends only on the binomial shift, exposed as the
    single parameter b.
    """
    b = as_shift(b, minimum=-1.0, name="b")
    k = _guard_k(k, minimum=2)
    if m < 1 or m != int(m):
        raise DomainError(f"w_m_0 requires integer m >= 1, got {m}")
    return sum(
        c * sum_Hm_window(b + 1.0, r, int(m))
        for r, c in zip(range(1, k), pf_coeffs_window(k).coeffs)
    )


def w_m_1(a: float, k: int, m: int) -> float:
    """W sum with numerator H_n^(m) over (n+a) binom(n+k+a, k)."""
    a = as_shift(a, minimum=0.0)
    k = _guard_k(k)
    if m < 1 or m != int(m):
        raise DomainError(f"w_m_1 requires integer m >= 1, got {m}")
    return sum(
        c * sum_Hm_window(a, r, int(m)) for r, c in zip(range(1, k + 1), pf_coeffs(k).coeffs)
    )


def w_11_0(b: float, k: int, *, as_printed: bool = False) -> float:
    """W sum with numerator H_n^2 and p = 0, k >= 2.

    The corrected form multiplies the H H^(2) window term by H_(b+1); the
    as-printed variant uses H_b and is retained for refutation reporting.
    """
    b = float(b)
    if b < 0.0:
        raise DomainError(f"w_11_0 requires b >= 0, got {b}")
    k = _guard_k(k, minimum=2)
    h_factor = shifted_harmonic(b) if as_printed else shifted_harmonic(b + 1.0)
    out = 0.0
    for r in range(1, k):
        c = float((-1) ** (r + 1) * math.comb(k - 1, r))
        br = riemann_zeta(2) * param_harmonic(r, 1, b)
        br -= h_factor * param_harmonic(r, 2, b)
        br -= sum(param_harmonic(i, 1, b + 1.0) / (i + b + 1.0) ** 2 for i in range(1, r))
        br += sum(
            (shifted_harmonic(b + j) ** 2 + shifted_harmonic(b + j, 2)) / (b + j)
            for j in range(1, r + 1)
        )
        out += c * br
    return k * out


def w_111(a: float, k: int) -> float:
    """W sum with numerator H_n^2 over (n+a) binom(n+k+a, k)."""
    a = as_shift(a, minimum=0.0)
    k = _guard_k(k)
    return sum(
        c * sum_H1sq_window(a, r) for r, c in zip(range(1, k + 1), pf_coeffs(k).coeffs)
    )


def w_alt_1_p(a: float, b: float, k: int, p: int) -> float:
    """Alternating-numerator analogue of w_1_p."""
    a = as_shift(a, minimum=0.0, name="a")
    b = as_shift(b, minimum=0.0, name="b")
    k = _guard_k(k)
    if p < 1 or p != int(p):
        raise DomainError(f"w_alt_1_p requires integer p >= 1, got {p}")
    if p + k <= 1:
        raise DomainError("convergence requires p + k > 1")
    p = int(p)
    _check_resonance(a, b, k)
    out = 0.0
    for r, c in zip(range(1, k + 1), pf_coeffs(k).coeffs):
        out += c * alt_sum_H1_bilinear(a, b + r) / (a - b - r) ** (p - 1)
        out -= c * sum(
            alt_sum_H1_power(a, j) / (a - b - r) ** (p + 1 - j) for j in range(2, p + 1)
        )
    return out


def w_alt_m_0(a: float, k: int, m: int) -> float:
    """Alternating H-bar_n^(m) over binom(n+k+a, k); integer a >= 0, k >= 2."""
    af = float(a)
    if not af.is_integer() or af < 0:
        raise DomainError(f"w_alt_m_0 requires integer a >= 0, got {a}")
    k = _guard_k(k, minimum=2)
    if m < 1 or m != int(m):
        raise DomainError(f"w_alt_m_0 requires integer m >= 1, got {m}")
    return sum(
        c * alt_sum_Hm_window(af + 1.0, r, int(m))
        for r, c in zip(range(1, k), pf_coeffs_window(k).coeffs)
    )


def w_alt_m_1(a: float, k: int, m: int) -> float:
    """Alternating H-bar_n^(m) over (n+a) binom(n+k+a, k); integer a >= 1."""
    af = float(a)
    if not af.is_integer() or af < 1:
        raise DomainError(f"w_alt_m_1 requires integer a >= 1, got {a}")
    k = _guard_k(k)
    if m < 1 or m != int(m):
        raise DomainError(f"w_alt_m_1 requires integer m >= 1, got {m}")
    return sum(
        c * alt_sum_Hm_window(af, r, int(m))
        for r, c in zip(range(1, k + 1), pf_coeffs(k).coeffs)
    )


def classical_w110(k: int) -> float:
    """Classical H_n^2 / binom(n+k, k) value, k >= 2."""
    if k < 2 or k != int(k):
        raise DomainError(f"classical_w110 requires integer k >= 2, got {k}")
    k = int(k)
    return k / (k - 1.0) * (riemann_zeta(2) - harmonic_num(k - 1, 2) + 2.0 / (k - 1.0) ** 2)


def classical_w111(k: int) -> float:
    """Classical H_n^2 / (n binom(n+k, k)) value, k >= 1."""
    if k < 1 or k != int(k):
        raise DomainError(f"classical_w111 requires integer k >= 1, got {k}")
    k = int(k)
    out = 0.0
    for r in range(1, k + 1):
        h1 = harmonic_num(r)
        h2 = harmonic_num(r, 2)
        h3 = harmonic_num(r, 3)
        br = 3.0 * riemann_zeta(3) + (h1**3 + 3.0 * h1 * h2 + 2.0 * h3) / 3.0
        br -= (h1**2 + h2) / r
        br -= sum(harmonic_num(i) / i**2 for i in range(1, r))
        br += riemann_zeta(2) * harmonic_num(r - 1)
        out += (-1.0) ** (r + 1) * math.comb(k, r) * br
    return out


def classical_w(k: int, kind: str) -> float:
    """Dispatch for the two classical regressions: '110' (k>=2) or '111'."""
    key = str(kind).strip().lower().replace("one", "1").replace("zero", "0").replace(",", "")
    if key == "110":
        return classical_w110(k)
    if key == "111":
        return classical_w111(k)
    raise DomainError(f"unknown classical W kind {kind!r}; use '110' or '111'")
