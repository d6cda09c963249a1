"""The (L, rho, theta) chamber data: slice rules and weight monomials.

Half-integers are stored doubled (h -> 2h, always odd) so every computation
stays in exact integer arithmetic. theta is given by its L images on
1/2, ..., L - 1/2 and extended by theta(h + L) = theta(h) + L; rho extends
periodically to the sign map sigma.

The interlacing pattern reads theta through its inverse: the step between
slices i and i+1 is ascending when theta^{-1}(i + 1/2) < 0 and its relation
type is sigma(theta^{-1}(i + 1/2)). Reading theta directly instead of its
inverse collapses distinct chambers onto the same rule pattern and already
miscounts single-box configurations, so the inverse reading is the one
consistent with the chamber product formulas.
"""

from dataclasses import dataclass

from .errors import UnsupportedChamberError


@dataclass(frozen=True)
class ChamberSpec:
    """The triple (L, rho, theta); theta entries are doubled half-integers."""

    L: int
    rho: tuple
    theta: tuple

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(self.rho))
        object.__setattr__(self, "theta", tuple(self.theta))
        L = self.L
        if L < 1:
            raise ValueError("L must be >= 1")
        if len(self.rho) != L or any(r not in (1, -1) for r in self.rho):
            raise ValueError("rho must be L signs of value +1 or -1")
        if len(self.theta) != L or any(t % 2 == 0 for t in self.theta):
            raise ValueError("theta must be L doubled half-integers (odd)")
        # bijectivity of the periodic extension: images distinct mod L
        if len({t % (2 * L) for t in self.theta}) != L:
            raise ValueError("theta images must be pairwise distinct mod L")
        # balance: sum of images equals sum of 1/2, ..., L - 1/2 (doubled: L^2)
        if sum(self.theta) != L * L:
            raise ValueError("theta images must preserve the half-integer sum")


@dataclass(frozen=True)
class SliceRule:
    relation: str  # "plus" or "minus"
    direction: str  # "ascending" or "descending"

    def flipped(self):
        other = "minus" if self.relation == "plus" else "plus"
        return SliceRule(other, self.direction)


@dataclass(frozen=True)
class WeightMonomial:
    """Exponent vector of one chamber weight; entries may be negative."""

    exponents: tuple

    @property
    def total_degree(self):
        return sum(self.exponents)

    @property
    def is_genuine(self):
        """Non-negative exponents with at least one box of degree."""
        return all(e >= 0 for e in self.exponents) and self.total_degree >= 1


def c3_chamber():
    return ChamberSpec(1, (1,), (1,))


def conifold_theta(n):
    """The conifold chamber theta_n: 1/2 -> 1/2 - n, 3/2 -> 3/2 + n."""
    if n < 0:
        raise ValueError("chamber index must be >= 0")
    return ChamberSpec(2, (1, -1), (1 - 2 * n, 3 + 2 * n))


def sigma(spec, h2):
    """Periodic extension of rho, evaluated at a doubled half-integer."""
    if h2 % 2 == 0:
        raise ValueError("sigma is defined on half-integers only")
    return spec.rho[((h2 - 1) // 2) % spec.L]


def theta_value(spec, h2):
    j = (h2 - 1) // 2
    r = j % spec.L
    return spec.theta[r] + 2 * spec.L * ((j - r) // spec.L)


def theta_inverse(spec, h2):
    period = 2 * spec.L
    for r in range(spec.L):
        if (h2 - spec.theta[r]) % period == 0:
            return (2 * r + 1) + period * ((h2 - spec.theta[r]) // period)
    raise ValueError(f"{h2} is not an odd integer in the image of theta")


def slice_rule(spec, i):
    """Interlacing rule for the step between slices i and i+1."""
    pre = theta_inverse(spec, 2 * i + 1)
    return SliceRule(
        relation="plus" if sigma(spec, pre) == 1 else "minus",
        direction="ascending" if pre < 0 else "descending",
    )


def chamber_weight(spec, i):
    """The monomial q_i^theta: the product of consecutive q's between
    theta^{-1}(i - 1/2) and theta^{-1}(i + 1/2), inverted when they are
    out of order. Laurent exponents are allowed; enumerate_z decides
    whether the chamber as a whole is computable.
    """
    if not 0 <= i < spec.L:
        raise ValueError("weight index must be a residue 0..L-1")
    lo = theta_inverse(spec, 2 * i - 1)
    hi = theta_inverse(spec, 2 * i + 1)
    exps = [0] * spec.L
    if lo < hi:
        for j in range((lo + 1) // 2, (hi - 1) // 2 + 1):
            exps[j % spec.L] += 1
    else:
        for j in range((hi + 1) // 2, (lo - 1) // 2 + 1):
            exps[j % spec.L] -= 1
    return WeightMonomial(tuple(exps))


def chamber_weights(spec):
    return [chamber_weight(spec, i) for i in range(spec.L)]


def conifold_index(spec):
    """The n with spec == conifold_theta(n), or None."""
    if spec.L == 2 and spec.rho == (1, -1):
        n = (1 - spec.theta[0]) // 2
        if n >= 0 and spec.theta == (1 - 2 * n, 3 + 2 * n):
            return n
    return None


def peak_slices(spec):
    """Slices p where the rule pattern turns from ascending to descending.

    Far enough left every step ascends and far enough right every step
    descends, so the transitions all live in a window controlled by the
    theta images; the scan radius below over-covers it.
    """
    radius = max(abs(t) for t in spec.theta) // 2 + 2 * spec.L + 2
    directions = {
        i: slice_rule(spec, i).direction == "ascending"
        for i in range(-radius - 1, radius + 1)
    }
    if not directions[-radius - 1] or directions[radius]:
        raise UnsupportedChamberError("rule pattern does not stabilize in scan window")
    peaks = [p for p in range(-radius, radius + 1) if directions[p - 1] and not directions[p]]
    if not peaks:
        raise UnsupportedChamberError("no ascending-to-descending transition found")
    return peaks
