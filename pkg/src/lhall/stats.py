"""Descent and ascent statistics of words and permutations, Eulerian numbers.

All index sets are reported 1-based: ``i`` in a descent set compares the
entries at 0-based positions ``i - 1`` and ``i``.  Weighted comparisons
r_i/s_i versus r_{i+1}/s_{i+1} are done by cross-multiplication, so they are
exact for any size of integer.  Ties are neither descents nor ascents.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from ._parallel import run_tasks, split_depth
from .errors import InvalidInput
from .seq import check_cap, star

MODES = ("des_s", "asc_s", "des", "asc")


@dataclass(frozen=True)
class StatReport:
    des_set: tuple
    asc_set: tuple
    des: int
    asc: int


def _check_lengths(s, r):
    if len(s) != len(r):
        raise InvalidInput(f"length mismatch: sequence has {len(s)}, word has {len(r)}")


def des_set(r: Sequence[int]) -> tuple:
    return tuple(i for i in range(1, len(r)) if r[i - 1] > r[i])


def asc_set(r: Sequence[int]) -> tuple:
    return tuple(i for i in range(1, len(r)) if r[i - 1] < r[i])


def des(r) -> int:
    return len(des_set(r))


def asc(r) -> int:
    return len(asc_set(r))


def s_des_set(s: Sequence[int], r: Sequence[int]) -> tuple:
    """Indices i with r_i/s_i > r_{i+1}/s_{i+1}."""
    _check_lengths(s, r)
    return tuple(i for i in range(1, len(r)) if r[i - 1] * s[i] > r[i] * s[i - 1])


def s_asc_set(s: Sequence[int], r: Sequence[int]) -> tuple:
    """Indices i with r_i/s_i < r_{i+1}/s_{i+1}."""
    _check_lengths(s, r)
    return tuple(i for i in range(1, len(r)) if r[i - 1] * s[i] < r[i] * s[i - 1])


def s_des(s, r) -> int:
    return len(s_des_set(s, r))


def s_asc(s, r) -> int:
    return len(s_asc_set(s, r))


def s_des_before(s: Sequence[int], r: Sequence[int], i: int) -> int:
    """Number of s-descents of ``r`` with index strictly below ``i`` (1 <= i <= n)."""
    _check_lengths(s, r)
    if not 1 <= i <= len(r):
        raise InvalidInput(f"index {i} out of range 1..{len(r)}")
    return sum(1 for j in range(1, i) if r[j - 1] * s[j] > r[j] * s[j - 1])


def s_des_prefix_counts(s: Sequence[int], r: Sequence[int]) -> tuple:
    """``(des^{<1}, ..., des^{<n})`` in one pass."""
    out = [0]
    for j in range(1, len(r)):
        out.append(out[-1] + (r[j - 1] * s[j] > r[j] * s[j - 1]))
    return tuple(out)


def stat_report(s: Sequence[int], r: Sequence[int]) -> StatReport:
    d, a = s_des_set(s, r), s_asc_set(s, r)
    return StatReport(d, a, len(d), len(a))


# -- permutations -----------------------------------------------------------

def check_permutation(p: Sequence[int]) -> tuple:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidInput(f"{p} is not a permutation of 1..{len(p)}")
    return p


def inversion_sequence(p: Sequence[int]) -> tuple:
    """I(p)_i = number of larger values standing to the left of value i."""
    p = check_permutation(p)
    n = len(p)
    a = [0] * n
    for k, v in enumerate(p):
        a[v - 1] = sum(1 for u in p[:k] if u > v)
    return tuple(a)


def perm_from_inversion_sequence(w: Sequence[int]) -> tuple:
    """Inverse of :func:`inversion_sequence`; ``w`` must lie in <n-1> x ... x <0>."""
    w = tuple(w)
    n = len(w)
    for i, a in enumerate(w, start=1):
        if not 0 <= a <= n - i:
            raise InvalidInput(f"entry {a} at index {i} outside <{n - i}>")
    # insert values n, n-1, ..., 1; every value already placed is larger
    out = []
    for v in range(n, 0, -1):
        out.insert(w[v - 1], v)
    return tuple(out)


def eulerian_row(n: int) -> tuple:
    """``(A(n,1), ..., A(n,n))`` via A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1)."""
    if n < 1:
        raise InvalidInput("n must be positive")
    row = [1]
    for m in range(2, n + 1):
        prev = [0] + row + [0]
        row = [k * prev[k] + (m - k + 1) * prev[k - 1] for k in range(1, m + 1)]
    return tuple(row)


def eulerian(n: int, i: int) -> int:
    """A(n, i): permutations of n letters with exactly i - 1 descents."""
    if not 1 <= i <= n:
        raise InvalidInput(f"index {i} out of range 1..{n}")
    return eulerian_row(n)[i - 1]


def eulerian_row_brute(n: int) -> tuple:
    """Same row by enumerating every permutation; only for small ``n``."""
    if not 1 <= n <= 8:
        raise InvalidInput("brute-force Eulerian numbers limited to 1 <= n <= 8")
    row = [0] * n
    for p in itertools.permutations(range(1, n + 1)):
        row[des(p)] += 1
    return tuple(row)


# -- distributions over the whole word set -----------------------------------

def _pair_tables(radices, weights, mode):
    """tables[j][a][b] == 1 when position j (0-based) to j+1 is counted."""
    desc = mode in ("des_s", "des")
    tables = []
    for j in range(len(radices) - 1):
        wa, wb = weights[j], weights[j + 1]
        if desc:
            t = [[int(a * wb > b * wa) for b in range(radices[j + 1])]
                 for a in range(radices[j])]
        else:
            t = [[int(a * wb < b * wa) for b in range(radices[j + 1])]
                 for a in range(radices[j])]
        tables.append(t)
    return tables


def _count_chunk(task):
    radices, weights, mode, prefix, size = task
    tables = _pair_tables(radices, weights, mode)
    counts = [0] * size
    k = len(prefix)
    head = sum(tables[j][prefix[j]][prefix[j + 1]] for j in range(k - 1))
    rest = [range(m) for m in radices[k:]]
    start = max(k - 1, 0)
    for tail in itertools.product(*rest):
        w = prefix + tail
        c = head
        for j in range(start, len(w) - 1):
            c += tables[j][w[j]][w[j + 1]]
        counts[c] += 1
    return counts


def des_count_distribution(s: Sequence[int], mode: str = "des_s",
                           append_zero: bool = False, cap: int | None = None,
                           parallel: bool = False) -> tuple:
    """Histogram of a statistic over every word of the mixed-radix set for ``s``.

    ``mode`` is ``des_s``/``asc_s`` (weighted by ``s``, or by ``s*`` when
    ``append_zero``) or ``des``/``asc`` (plain comparisons).  With
    ``append_zero`` each word gets a trailing 0.  The result has length
    ``len(s) + 1`` and sums to ``prod(s)``.
    """
    if mode not in MODES:
        raise InvalidInput(f"unknown mode {mode!r}; expected one of {MODES}")
    s = tuple(s)
    check_cap(math.prod(s), cap)
    radices = star(s) if append_zero else s
    weights = radices if mode in ("des_s", "asc_s") else (1,) * len(radices)
    size = len(s) + 1
    k = split_depth(radices) if parallel else 0
    tasks = [(tuple(radices), tuple(weights), mode, prefix, size)
             for prefix in itertools.product(*(range(m) for m in radices[:k]))]
    total = [0] * size
    for part in run_tasks(_count_chunk, tasks, parallel):
        for i, c in enumerate(part):
            total[i] += c
    return tuple(total)
