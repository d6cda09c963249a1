"""Partition functions as stabilized Toeplitz determinants.

The symbol f(z) collects single-walker transition weights; det G_{i-j} over
an N x N block reproduces the unitary matrix integral, and for N large the
determinant stops depending on N at any fixed series truncation. We detect
that plateau by agreement of two consecutive sizes rather than guessing an
a priori bound.

Window bookkeeping: every factor except the single (1 + z) carries at least
one unit of q-degree per unit of |z|-power, so z-exponents beyond D + 1 have
identically zero coefficients at truncation D. Multiplying the lone lax
factor last keeps the intermediate products strict and makes the window clip
lossless.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import NotInvertibleError, StabilizationFailureError
from .series import (
    LaurentSymbol,
    TruncatedSeries,
    binomial_factor,
    product_over_k,
    toeplitz_det,
)


class MatrixModelResult(NamedTuple):
    """Outcome of a stabilized determinant run.

    value is the determinant shared by sizes stabilized_at and
    stabilized_at + 1; history maps each tried N to its determinant, kept for
    diagnostics and for the widening checks in the test suite.
    """

    value: TruncatedSeries
    stabilized_at: int
    history: dict


def _linear(num_vars: int, cutoff: int, window: int, zpow: int, exps, sign: int) -> LaurentSymbol:
    """The symbol 1 + sign * x^exps * z^zpow (identity if exps exceeds the cutoff)."""
    coeffs = {0: TruncatedSeries.one(num_vars, cutoff)}
    mono = TruncatedSeries.monomial(num_vars, cutoff, exps, 1 if sign >= 0 else -1)
    if not mono.is_zero():
        coeffs[zpow] = mono
    return LaurentSymbol(num_vars, cutoff, window, coeffs)


def _symbol_inverse(f: LaurentSymbol) -> LaurentSymbol:
    """Invert a symbol whose z^0 series is a unit and whose off-center
    coefficients all vanish at q-degree zero.

    Writing f = a0 (1 + S) with S supported away from degree zero, the inverse
    is a0^{-1} sum_j (-S)^j; the sum terminates because each power of S climbs
    at least one q-degree. Intended for strict symbols (coefficient of z^m has
    valuation >= |m|), where the window clip during the powers drops nothing.
    """
    a0_inv = f.coefficient(0).invert()
    rest = {}
    for m, c in f.coeffs.items():
        if m == 0:
            continue
        if c.constant_term() != 0:
            raise NotInvertibleError(
                "symbol inverse needs off-center coefficients without constant term"
            )
        rest[m] = a0_inv * c
    s = LaurentSymbol(f.num_vars, f.cutoff, f.window, rest)
    total = {0: TruncatedSeries.one(f.num_vars, f.cutoff)}
    power = LaurentSymbol.identity(f.num_vars, f.cutoff, f.window)
    sign = 1
    for _ in range(f.cutoff):
        power = power * s
        sign = -sign
        if not power.coeffs:
            break
        for m, c in power.coeffs.items():
            signed = c if sign > 0 else -c
            total[m] = total[m] + signed if m in total else signed
    return LaurentSymbol(
        f.num_vars, f.cutoff, f.window, {m: a0_inv * c for m, c in total.items()}
    )


def c3_symbol(cutoff: int) -> LaurentSymbol:
    """Hopping weights for plane partitions: prod_k (1+z q^k)(1+z^-1 q^k), k >= 1,
    times the lax factor (1 + z)."""
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    window = cutoff + 1
    f = LaurentSymbol.identity(1, cutoff, window)
    for k in range(1, cutoff + 1):
        f = f * _linear(1, cutoff, window, 1, (k,), 1)
        f = f * _linear(1, cutoff, window, -1, (k,), 1)
    return f * _linear(1, cutoff, window, 1, (0,), 1)


def conifold_symbol(n: int, cutoff: int) -> LaurentSymbol:
    """Hopping weights for the two-node chamber theta_n, in (q0, q1).

    Strict part: prod_k (1 + q0^k q1^k z)(1 + q0^k q1^k z^-1) over k >= 1,
    divided by prod_k (1 - q0^k q1^(k+1) z)(1 - q0^(k+1) q1^k z^-1) over
    k >= 0, then the n chamber factors (1 - q0^k q1^(k-1) z^-1), k = 1..n.
    The division is realized by inverting the denominator symbol as a whole
    (see _symbol_inverse); the lax (1 + z) comes last.
    """
    if n < 0:
        raise ValueError("chamber index n must be >= 0")
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    window = cutoff + 1
    f = LaurentSymbol.identity(2, cutoff, window)
    for k in range(1, cutoff // 2 + 1):
        f = f * _linear(2, cutoff, window, 1, (k, k), 1)
        f = f * _linear(2, cutoff, window, -1, (k, k), 1)
    den = LaurentSymbol.identity(2, cutoff, window)
    for k in range((cutoff + 1) // 2 + 1):
        den = den * _linear(2, cutoff, window, 1, (k, k + 1), -1)
        den = den * _linear(2, cutoff, window, -1, (k + 1, k), -1)
    f = f * _symbol_inverse(den)
    for k in range(1, n + 1):
        f = f * _linear(2, cutoff, window, -1, (k, k - 1), -1)
    return f * _linear(2, cutoff, window, 1, (0, 0), 1)


def prefactor_cn(n: int, cutoff: int) -> TruncatedSeries:
    """Ratio between the crystal sum and the determinant for chamber theta_n:

        C_n = prod_{k=1}^{n} (1 - q^k)^(-k)
            * prod_{k>n} (1 + q0^k q1^(k-1))^n (1 - q^k)^(-n)

    with q = q0*q1. C_0 = 1, and for n at or beyond the cutoff only the first
    product survives, collapsing to MacMahon's function in q.
    """
    if n < 0:
        raise ValueError("chamber index n must be >= 0")
    out = TruncatedSeries.one(2, cutoff)
    for k in range(1, min(n, cutoff) + 1):
        out = out * binomial_factor(2, cutoff, (k, k), -k, sign=-1)
    if n > 0:
        out = out * product_over_k(
            lambda j: binomial_factor(2, cutoff, (n + j, n + j - 1), n, sign=1)
            * binomial_factor(2, cutoff, (n + j, n + j), -n, sign=-1),
            cutoff,
        )
    return out


def stabilized_toeplitz(f: LaurentSymbol, degree: int) -> MatrixModelResult:
    """Grow N from degree + 1 until two consecutive determinants agree modulo
    total degree `degree`; a run that reaches N = 4 * (degree + 2) without a
    plateau raises StabilizationFailureError."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if f.cutoff < degree:
        raise ValueError("symbol truncated below the requested degree")
    cap = 4 * (degree + 2)
    history = {}
    prev = None
    size = degree + 1
    while size <= cap:
        det = toeplitz_det(f, size).truncate(degree)
        history[size] = det
        if prev is not None and det == prev:
            return MatrixModelResult(det, size - 1, history)
        prev = det
        size += 1
    raise StabilizationFailureError(
        f"Toeplitz determinant did not stabilize by N = {cap}"
    )
