"""Enumeration kernels: partition sweeps accumulating int64 statistics.

Everything here is written to compile under ``numba.njit`` and to run
unchanged as plain Python over numpy arrays when acceleration is off (see
:mod:`hhsym.accel`).  All kernels drive the same partition generator, so
any enumeration bug would surface identically in every oracle.

Counts stay far below 2**63 for every n the enumeration caps allow, so
int64 accumulation is exact.
"""

import numpy as np

from .accel import njit
from .wreath import cyclic_wreath_h1, cyclic_wreath_h2


@njit(cache=True)
def _descending_parts(n, parts):
    """Yield partitions of n into ``parts[:m]``, decreasing lexicographically.

    The buffer is reused between yields; consumers read ``parts[:m]``
    before advancing.  Parts appear in non-increasing order within each
    partition.
    """
    if n == 0:
        yield 0
        return
    parts[0] = n
    m = 1
    while True:
        yield m
        k = m - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        new = parts[k] - 1
        remainder = (m - k - 1) + parts[k]
        m = k
        while remainder >= new:
            parts[m] = new
            m += 1
            remainder -= new
        if remainder > 0:
            parts[m] = remainder
            m += 1


@njit(cache=True)
def _binomial(a, r):
    if r < 0 or a < r:
        return 0
    out = 1
    for i in range(r):
        out = out * (a - i) // (i + 1)
    return out


@njit(cache=True)
def count_partitions(n):
    parts = np.empty(max(n, 1), np.int64)
    total = 0
    for _ in _descending_parts(n, parts):
        total += 1
    return total


@njit(cache=True)
def part_count_sum(n, k):
    """Total number of parts equal to k across all partitions of n."""
    parts = np.empty(max(n, 1), np.int64)
    total = 0
    for m in _descending_parts(n, parts):
        for i in range(m):
            if parts[i] == k:
                total += 1
    return total


@njit(cache=True)
def distinct_length_sum(n, k, ell):
    """Sum over partitions of the count of distinct lengths divisible by k
    whose multiplicity is at least ell."""
    parts = np.empty(max(n, 1), np.int64)
    total = 0
    for m in _descending_parts(n, parts):
        i = 0
        while i < m:
            j = i
            while j < m and parts[j] == parts[i]:
                j += 1
            if parts[i] % k == 0 and j - i >= ell:
                total += 1
            i = j
    return total


@njit(cache=True)
def subset_pair_sums(n, k, r):
    """Pair of sums over partitions of n of binomial subset counts.

    First component: r-subsets of the distinct lengths divisible by k.
    Second: r-subsets of the distinct lengths of multiplicity at least k.
    """
    parts = np.empty(max(n, 1), np.int64)
    by_divisor = 0
    by_multiplicity = 0
    for m in _descending_parts(n, parts):
        divisible = 0
        repeated = 0
        i = 0
        while i < m:
            j = i
            while j < m and parts[j] == parts[i]:
                j += 1
            if parts[i] % k == 0:
                divisible += 1
            if j - i >= k:
                repeated += 1
            i = j
        by_divisor += _binomial(divisible, r)
        by_multiplicity += _binomial(repeated, r)
    return by_divisor, by_multiplicity


@njit(cache=True)
def even_pair_sum(n):
    """Sum over partitions of ordered pairs of distinct lengths (m, m')
    with m of multiplicity at least two and m' even."""
    parts = np.empty(max(n, 1), np.int64)
    total = 0
    for m in _descending_parts(n, parts):
        repeated = 0
        even = 0
        both = 0
        i = 0
        while i < m:
            j = i
            while j < m and parts[j] == parts[i]:
                j += 1
            twice = j - i >= 2
            is_even = parts[i] % 2 == 0
            if twice:
                repeated += 1
            if is_even:
                even += 1
            if twice and is_even:
                both += 1
            i = j
        total += repeated * even - both
    return total


@njit(cache=True)
def hochschild_sum(n, degree, p):
    """Sum over partitions of the total-degree piece of the tensor product
    of wreath cohomologies, one factor per distinct part length."""
    parts = np.empty(max(n, 1), np.int64)
    lengths = np.empty(max(n, 1), np.int64)
    mults = np.empty(max(n, 1), np.int64)
    total = 0
    for m in _descending_parts(n, parts):
        if degree == 0:
            total += 1
            continue
        runs = 0
        i = 0
        while i < m:
            j = i
            while j < m and parts[j] == parts[i]:
                j += 1
            lengths[runs] = parts[i]
            mults[runs] = j - i
            runs += 1
            i = j
        if degree == 1:
            for a in range(runs):
                total += cyclic_wreath_h1(lengths[a], mults[a], p)
        else:
            linear = 0
            squares = 0
            for a in range(runs):
                total += cyclic_wreath_h2(lengths[a], mults[a], p)
                h1 = cyclic_wreath_h1(lengths[a], mults[a], p)
                linear += h1
                squares += h1 * h1
            total += (linear * linear - squares) // 2
    return total


@njit(cache=True)
def theta_tuple_sum(n, ks, ells):
    """Sum over partitions of n of ordered tuples of distinct part lengths,
    each length passing its divisibility test and multiplicity threshold."""
    r = ks.shape[0]
    parts = np.empty(max(n, 1), np.int64)
    lengths = np.empty(max(n, 1), np.int64)
    mults = np.empty(max(n, 1), np.int64)
    idx = np.empty(r, np.int64)
    total = 0
    for m in _descending_parts(n, parts):
        runs = 0
        i = 0
        while i < m:
            j = i
            while j < m and parts[j] == parts[i]:
                j += 1
            lengths[runs] = parts[i]
            mults[runs] = j - i
            runs += 1
            i = j
        if runs < r:
            continue
        for a in range(r):
            idx[a] = 0
        while True:
            ok = True
            for a in range(r):
                for b in range(a):
                    if idx[a] == idx[b]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                passes = 1
                for a in range(r):
                    if lengths[idx[a]] % ks[a] != 0 or mults[idx[a]] < ells[a]:
                        passes = 0
                        break
                total += passes
            pos = r - 1
            while pos >= 0 and idx[pos] == runs - 1:
                idx[pos] = 0
                pos -= 1
            if pos < 0:
                break
            idx[pos] += 1
    return total


@njit(cache=True)
def weighted_tuple_count(n, ks, ells):
    """Count tuples (u_1, ..., u_r) of positive integers with the values
    k_i * u_i pairwise distinct and sum of ell_i * k_i * u_i equal to n."""
    r = ks.shape[0]
    u = np.zeros(r, np.int64)
    used = np.zeros(r + 1, np.int64)
    min_tail = np.zeros(r + 1, np.int64)
    for i in range(r - 1, -1, -1):
        min_tail[i] = min_tail[i + 1] + ells[i] * ks[i]
    count = 0
    pos = 0
    while pos >= 0:
        u[pos] += 1
        s = used[pos] + ells[pos] * ks[pos] * u[pos]
        if s + min_tail[pos + 1] > n:
            u[pos] = 0
            pos -= 1
            continue
        dup = False
        for j in range(pos):
            if ks[j] * u[j] == ks[pos] * u[pos]:
                dup = True
                break
        if dup:
            continue
        if pos == r - 1:
            if s == n:
                count += 1
            continue
        used[pos + 1] = s
        pos += 1
    return count


@njit(cache=True)
def signed_component_sum(r):
    """Sum of (-1)**(components + edges) over all graphs on r labeled vertices."""
    ne = r * (r - 1) // 2
    first = np.empty(max(ne, 1), np.int64)
    second = np.empty(max(ne, 1), np.int64)
    b = 0
    for i in range(r):
        for j in range(i + 1, r):
            first[b] = i
            second[b] = j
            b += 1
    parent = np.empty(r, np.int64)
    total = 0
    for mask in range(1 << ne):
        for v in range(r):
            parent[v] = v
        components = r
        edges = 0
        for bit in range(ne):
            if (mask >> bit) & 1:
                edges += 1
                x = first[bit]
                while parent[x] != x:
                    x = parent[x]
                y = second[bit]
                while parent[y] != y:
                    y = parent[y]
                if x != y:
                    parent[x] = y
                    components -= 1
        if (components + edges) % 2 == 0:
            total += 1
        else:
            total -= 1
    return total


@njit(cache=True)
def largest_and_length_histograms(n):
    """Histograms over partitions of n of the largest part and of the
    number of parts (both indexed 0..n; the empty partition lands at 0)."""
    parts = np.empty(max(n, 1), np.int64)
    by_largest = np.zeros(n + 1, np.int64)
    by_count = np.zeros(n + 1, np.int64)
    for m in _descending_parts(n, parts):
        if m == 0:
            by_largest[0] += 1
            by_count[0] += 1
        else:
            by_largest[parts[0]] += 1
            by_count[m] += 1
    return by_largest, by_count
