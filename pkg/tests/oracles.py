"""Independent reference computations used to pin expected test values.

Everything in this file is written from first principles and imports nothing
from the package, so expectations frozen from these oracles cannot inherit a
bug in the code under test.
"""


def plane_partition_counts(max_total):
    """Count plane partitions with n boxes, for every n = 0..max_total.

    A plane partition is a finite array of positive integers whose rows and
    columns are both non-increasing. This builds each one row by row with a
    depth-first search: a row must fit cellwise under the row above it, be
    non-increasing itself, and keep the running box count within budget.
    """
    counts = [0] * (max_total + 1)

    def rows_under(bound, budget):
        out = []

        def extend(prefix, i, remaining):
            if prefix:
                out.append(tuple(prefix))
            if i >= len(bound):
                return
            hi = min(bound[i], remaining)
            if prefix:
                hi = min(hi, prefix[-1])
            for v in range(1, hi + 1):
                prefix.append(v)
                extend(prefix, i + 1, remaining - v)
                prefix.pop()

        extend([], 0, budget)
        return out

    def stack(prev, used):
        counts[used] += 1
        for row in rows_under(prev, max_total - used):
            stack(row, used + sum(row))

    stack((max_total,) * max_total, 0)
    return counts


def partitions_of(n):
    """All integer partitions of n, largest part first."""

    def gen(left, cap):
        if left == 0:
            yield ()
            return
        for first in range(min(left, cap), 0, -1):
            for rest in gen(left - first, first):
                yield (first,) + rest

    return list(gen(n, n)) if n else [()]


def all_partitions_up_to(max_size):
    out = []
    for n in range(max_size + 1):
        out.extend(partitions_of(n))
    return out


def transpose_by_cells(lam):
    """Transpose computed by literally flipping the cell set of the diagram."""
    cells = {(i, j) for i, row in enumerate(lam) for j in range(row)}
    flipped = {(j, i) for (i, j) in cells}
    if not flipped:
        return ()
    rows = max(i for i, _ in flipped) + 1
    return tuple(sum(1 for (i, _) in flipped if i == r) for r in range(rows))


def is_horizontal_strip(lam, mu):
    """mu fits inside lam and lam/mu has at most one box per column.

    Stated directly on diagram cells, with no reference to interlacing
    chains: every column of lam gains at most one cell over mu, and mu is
    contained in lam.
    """
    lam_t = transpose_by_cells(lam)
    mu_t = transpose_by_cells(mu)
    if len(mu_t) > len(lam_t):
        return False
    for j in range(len(lam_t)):
        m = mu_t[j] if j < len(mu_t) else 0
        if not (0 <= lam_t[j] - m <= 1):
            return False
    return True
