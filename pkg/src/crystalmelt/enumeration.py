"""Direct enumeration of chamber configurations by a slice-sweep DP.

A configuration is a bi-infinite partition sequence, empty at both ends,
obeying the chamber's interlacing rule at every step. The sweep walks the
finite window that can carry boxes, keeping a frontier of states (current
partition, boxes spent per slice class) with multiplicity counts.

Budget: with genuine weight monomials every box costs at least one unit of
total degree, so "boxes <= D" is exact. Chambers of the conifold theta_n
family have Laurent weights, but every configuration's monomial sits in the
support of the chamber product, whose generators carry at most (2n+3)/3 boxes
per unit of degree; hence the budget floor(D * (2n+3) / 3). A too-small
budget would undercount and fail the cross-engine checks loudly, never agree
falsely, and the widen-and-compare tests pin it empirically.
"""

from functools import lru_cache
from typing import NamedTuple

from .chambers import chamber_weights, conifold_index, peak_slices, slice_rule
from .errors import UnsupportedChamberError
from .partitions import interlace_minus, interlace_plus
from .series import TruncatedSeries


class EvolutionState(NamedTuple):
    """One DP frontier entry: partition at the current slice plus the boxes
    already placed in each slice class (the exponent vector of the formal
    class variables; the weight monomial is applied at the very end)."""

    slice_index: int
    current: tuple
    accumulated: tuple


@lru_cache(maxsize=None)
def _succ_grow_plus(mu, cap):
    """All lam >=+ mu with |lam| <= cap; trailing 1-rows may extend lam."""
    out = []

    def rec(i, prev, acc, total):
        if total > cap:
            return
        if i == len(mu):
            out.append(tuple(acc))
            k = 1
            while total + k <= cap:
                out.append(tuple(acc + [1] * k))
                k += 1
            return
        for d in (0, 1):
            v = mu[i] + d
            if v <= prev:
                rec(i + 1, v, acc + [v], total + v)

    rec(0, cap + 1, [], 0)
    return out


@lru_cache(maxsize=None)
def _succ_grow_minus(mu, cap):
    """All lam >=- mu with |lam| <= cap.

    The chain lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... bounds lam_{i+1} by mu_i,
    leaves lam_1 bounded only by the budget, and allows one extra final part.
    """
    out = []
    n = len(mu)

    def rec(i, acc, total):
        if i == n:
            out.append(tuple(acc))
            hi = min(mu[n - 1] if n else cap, cap - total)
            for v in range(1, hi + 1):
                out.append(tuple(acc + [v]))
            return
        hi = cap - total - sum(mu[i + 1:])
        if i > 0:
            hi = min(hi, mu[i - 1])
        for v in range(mu[i], hi + 1):
            rec(i + 1, acc + [v], total + v)

    rec(0, [], 0)
    return out


@lru_cache(maxsize=None)
def _succ_shrink_plus(mu):
    """All nu with mu >=+ nu."""
    seen = set()

    def rec(i, prev, acc):
        if i == len(mu):
            seen.add(tuple(x for x in acc if x))
            return
        for d in (0, 1):
            v = mu[i] - d
            if 0 <= v <= prev:
                rec(i + 1, v, acc + [v])

    rec(0, mu[0] + 1 if mu else 1, [])
    return sorted(seen)


@lru_cache(maxsize=None)
def _succ_shrink_minus(mu):
    """All nu with mu >=- nu: mu_1 >= nu_1 >= mu_2 >= nu_2 >= ..."""
    seen = set()

    def rec(i, acc):
        if i == len(mu):
            seen.add(tuple(x for x in acc if x))
            return
        lo = mu[i + 1] if i + 1 < len(mu) else 0
        for v in range(lo, mu[i] + 1):
            rec(i + 1, acc + [v])

    rec(0, [])
    return sorted(seen)


def box_budget(spec, degree):
    """Box count that certifiably covers every monomial of total degree <= degree."""
    if all(w.is_genuine for w in chamber_weights(spec)):
        return degree
    n = conifold_index(spec)
    if n is not None:
        return (degree * (2 * n + 3)) // 3
    raise UnsupportedChamberError(
        "chamber has Laurent weights outside the conifold theta_n family"
    )


def sweep_window(spec, degree, budget):
    peaks = peak_slices(spec)
    L = spec.L
    lo = min(-degree * L - L, min(peaks) - budget - L)
    hi = max(degree * L + L, max(peaks) + budget + L)
    return lo, hi


def _sweep(spec, degree, budget, transposed, max_rows, window=None):
    L = spec.L
    lo, hi = window if window is not None else sweep_window(spec, degree, budget)

    def rule_at(i):
        r = slice_rule(spec, i)
        return r.flipped() if transposed else r

    frontier = {EvolutionState(lo - 1, (), (0,) * L): 1}
    for s in range(lo, hi + 1):
        rule = rule_at(s - 1)
        ascending = rule.direction == "ascending"
        plus = rule.relation == "plus"
        cls = s % L
        by_mu = {}
        for state, count in frontier.items():
            by_mu.setdefault(state.current, []).append((state.accumulated, count))
        new = {}
        for mu, tabs in by_mu.items():
            least_spent = min(sum(acc) for acc, _ in tabs)
            if ascending:
                cap = sum(mu) + budget - least_spent
                succs = _succ_grow_plus(mu, cap) if plus else _succ_grow_minus(mu, cap)
            else:
                succs = _succ_shrink_plus(mu) if plus else _succ_shrink_minus(mu)
            for nu in succs:
                if max_rows is not None and len(nu) > max_rows:
                    continue
                boxes = sum(nu)
                for acc, count in tabs:
                    if sum(acc) + boxes > budget:
                        continue
                    acc2 = list(acc)
                    acc2[cls] += boxes
                    key = EvolutionState(s, nu, tuple(acc2))
                    new[key] = new.get(key, 0) + count
        frontier = new

    # the step out of the window must land on the empty partition
    closing = rule_at(hi)
    rel = interlace_plus if closing.relation == "plus" else interlace_minus
    totals = {}
    for state, count in frontier.items():
        mu = state.current
        if closing.direction == "ascending":
            ok = rel((), mu)
        else:
            ok = rel(mu, ())
        if ok:
            acc = state.accumulated
            totals[acc] = totals.get(acc, 0) + count
    return totals


def _class_counts_to_terms(spec, degree, totals):
    weights = [w.exponents for w in chamber_weights(spec)]
    L = spec.L
    terms = {}
    for acc, count in totals.items():
        exps = [0] * L
        for cls in range(L):
            for v in range(L):
                exps[v] += acc[cls] * weights[cls][v]
        assert all(e >= 0 for e in exps), f"negative exponent from class counts {acc}"
        if sum(exps) <= degree:
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + count
    return terms


def _enumerate(spec, degree, transposed, max_rows=None, window=None, budget=None):
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if budget is None:
        budget = box_budget(spec, degree)
    totals = _sweep(spec, degree, budget, transposed, max_rows, window)
    terms = _class_counts_to_terms(spec, degree, totals)
    return TruncatedSeries(spec.L, degree, terms)


def enumerate_z(spec, degree):
    """Z as an exact truncated series: one term per configuration monomial."""
    return _enumerate(spec, degree, transposed=False)


def enumerate_z_transposed(spec, degree):
    """Same sum with every rule's relation flipped (all slices transposed)."""
    return _enumerate(spec, degree, transposed=True)


def enumerate_z_rows(spec, degree, max_rows):
    """Z restricted to configurations whose slices all have at most max_rows
    rows. An N-walker path determinant computes exactly this sum, so the
    walker cross-checks compare against it."""
    if max_rows < 0:
        raise ValueError("max_rows must be >= 0")
    return _enumerate(spec, degree, transposed=False, max_rows=max_rows)
