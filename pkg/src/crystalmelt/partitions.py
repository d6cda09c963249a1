"""Integer partitions and the two interlacing relations.

A partition is a tuple of positive integers in non-increasing order; trailing
zeros are implicit, so comparisons pad with zeros as needed.
"""


def as_partition(parts):
    """Normalize a sequence into a partition tuple, validating monotonicity."""
    lam = tuple(int(p) for p in parts if p)
    if any(p < 0 for p in lam):
        raise ValueError("partition parts must be non-negative")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition parts must be non-increasing")
    return lam


def size(lam):
    return sum(lam)


def transpose(lam):
    """Conjugate diagram: column lengths of the Young diagram of lam."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def interlace_plus(lam, mu):
    """lam >=+ mu: lam_i - mu_i in {0, 1} for every row (implicit zeros)."""
    if len(mu) > len(lam):
        return False
    for i in range(len(lam)):
        m = mu[i] if i < len(mu) else 0
        if not 0 <= lam[i] - m <= 1:
            return False
    return True


def interlace_minus(lam, mu):
    """lam >=- mu: the chain lam_1 >= mu_1 >= lam_2 >= mu_2 >= ..."""
    for i in range(max(len(lam), len(mu))):
        l_i = lam[i] if i < len(lam) else 0
        m_i = mu[i] if i < len(mu) else 0
        l_next = lam[i + 1] if i + 1 < len(lam) else 0
        if not l_i >= m_i >= l_next:
            return False
    return True


def enumerate_partitions(max_size):
    """All partitions of size <= max_size, ordered by (size, reverse lexicographic).

    The per-size order puts the largest first part first, so fixtures like
    enumerate_partitions(2) == [(), (1,), (2,), (1, 1)] are stable.
    """
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    out = []
    for n in range(max_size + 1):
        out.extend(_partitions_of(n, n))
    return out


def _partitions_of(n, max_part):
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return out
