"""Closed-form infinite products for the melting-crystal partition functions.

Everything is assembled from binomial factors (1 + sign * x^v)^e expanded
exactly, so the results are bit-identical to what the enumeration engine
counts. Variables are always (q0, q1) for the two-node chambers and the
single q for MacMahon's function.
"""

from __future__ import annotations

from .errors import UnsupportedChamberError
from .series import TruncatedSeries, binomial_factor, product_over_k


def macmahon(cutoff: int) -> TruncatedSeries:
    """MacMahon's generating function prod_k (1 - q^k)^(-k), plane partitions by volume."""
    return product_over_k(
        lambda k: binomial_factor(1, cutoff, (k,), -k, sign=-1), cutoff
    )


def macmahon_two_var(cutoff: int) -> TruncatedSeries:
    """MacMahon's function in the diagonal variable q = q0*q1."""
    return product_over_k(
        lambda k: binomial_factor(2, cutoff, (k, k), -k, sign=-1), cutoff
    )


def conifold_product(n: int, cutoff: int) -> TruncatedSeries:
    """Chamber theta_n partition function as an explicit product.

        M(q)^2 * prod_{k>=1} (1 + q0^k q1^(k+1))^k * prod_{k>n} (1 + q0^k q1^(k-1))^k

    with q = q0*q1. n = 0 is the resolved side; raising n eats the small-k
    factors of the last product one wall at a time.
    """
    if n < 0:
        raise ValueError("chamber index n must be >= 0")
    z = macmahon_two_var(cutoff)
    z = z * z
    z = z * product_over_k(
        lambda k: binomial_factor(2, cutoff, (k, k + 1), k, sign=1), cutoff
    )
    z = z * product_over_k(
        lambda k: binomial_factor(2, cutoff, (n + k, n + k - 1), n + k, sign=1),
        cutoff,
    )
    return z


def wall_factor(n: int, cutoff: int) -> TruncatedSeries:
    """The single factor (1 + q0^n q1^(n-1))^n separating theta_(n-1) from theta_n."""
    if n < 1:
        raise ValueError("wall index must be >= 1")
    return binomial_factor(2, cutoff, (n, n - 1), n, sign=1)


def spp_top_squared(n: int, cutoff: int) -> TruncatedSeries:
    """Square of the suspended-pinch-point closed-form series, at mu = q0^n q1^(n-1).

        prod_{k>=1} (1 + Q q^k)^(2k) (1 + mu q^k)^(2k)
                    / [ (1 - q^k)^(3k) (1 - mu Q q^k)^(2k) ]

    Squaring keeps every exponent integral. The factor signs follow the
    counting convention that matches the chamber partition functions; note
    mu*Q*q^k collapses to q^(n+k). Requires n >= 1 so that mu is an honest
    monomial; at n = 0 the substitution would need a negative q1 exponent.
    """
    if n < 1:
        raise UnsupportedChamberError(
            "spp_top_squared needs n >= 1 (mu = q0^n q1^(n-1) must be a monomial)"
        )
    z = product_over_k(
        lambda k: binomial_factor(2, cutoff, (k, k + 1), 2 * k, sign=1), cutoff
    )
    z = z * product_over_k(
        lambda k: binomial_factor(2, cutoff, (n + k, n + k - 1), 2 * k, sign=1),
        cutoff,
    )
    z = z * product_over_k(
        lambda k: binomial_factor(2, cutoff, (k, k), -3 * k, sign=-1), cutoff
    )
    z = z * product_over_k(
        lambda k: binomial_factor(2, cutoff, (n + k, n + k), -2 * k, sign=-1), cutoff
    )
    return z
