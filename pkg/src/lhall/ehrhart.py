"""Delta-vectors and Ehrhart values of s-lecture hall polytopes.

P_s = {x : 0 <= x_1/s_1 <= ... <= x_n/s_n <= 1} is a simplex of normalized
volume prod(s).  Its delta-vector is computed three ways: grading the points
of Par_{s*}, counting s*-descents of padded words, and (when s_1 = 1)
counting s-ascents.  Ehrhart values come either from a direct lattice count
of t P_s or from the delta-vector.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidInput, PreconditionError
from .parbox import Counterexample, enumerate_par, grade
from .seq import check_cap, make_seq, star
from .stats import des_count_distribution


@dataclass(frozen=True)
class DeltaVector:
    s: tuple
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != len(self.s) + 1:
            raise InvalidInput(
                f"delta-vector of length {len(self.entries)} for n = {len(self.s)}")
        if any(d < 0 for d in self.entries):
            raise InvalidInput("delta-vector entries must be nonnegative")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def n(self) -> int:
        return len(self.s)


@dataclass(frozen=True)
class EhrhartValue:
    t: int
    count: int


def delta_via_parallelepiped(s, cap=None, parallel=False) -> DeltaVector:
    """delta_i = number of points of Par_{s*} with last coordinate i."""
    s = make_seq(s)
    pts = enumerate_par(star(s), cap=cap, parallel=parallel)
    levels = grade(pts, len(s) + 1)
    if len(levels) != len(s) + 1:
        raise AssertionError(f"Par_s* has a point above level {len(s)}")
    return DeltaVector(s, levels)


def delta_via_descents(s, cap=None, parallel=False) -> DeltaVector:
    """delta_i = #{r in Psi x <0> : des_{s*}(r) = i}.

    When s_n = 1 the unpadded count #{r in Psi : des_s(r) = i} must agree;
    that shortcut is cross-checked whenever assertions are enabled.
    """
    s = make_seq(s)
    dist = des_count_distribution(s, "des_s", append_zero=True, cap=cap, parallel=parallel)
    if __debug__ and s[-1] == 1:
        short = des_count_distribution(s, "des_s", cap=cap, parallel=parallel)
        assert short == dist, (s, short, dist)
    return DeltaVector(s, dist)


def delta_via_ascents(s, cap=None, parallel=False) -> DeltaVector:
    """delta_i = #{r in Psi : asc_s(r) = i}; defined only for s_1 = 1."""
    s = make_seq(s)
    if s[0] != 1:
        raise PreconditionError(f"ascent formula needs s_1 = 1, got s_1 = {s[0]}")
    return DeltaVector(s, des_count_distribution(s, "asc_s", cap=cap, parallel=parallel))


METHODS = {
    "par": delta_via_parallelepiped,
    "des": delta_via_descents,
    "asc": delta_via_ascents,
}


def applicable_methods(s) -> list:
    return ["par", "des"] + (["asc"] if s[0] == 1 else [])


def delta(s, method="par", cap=None, parallel=False) -> DeltaVector:
    try:
        fn = METHODS[method]
    except KeyError:
        raise InvalidInput(f"unknown delta method {method!r}") from None
    return fn(s, cap=cap, parallel=parallel)


# -- Ehrhart values ----------------------------------------------------------

def _check_t(t):
    if isinstance(t, bool) or not isinstance(t, int) or t < 0:
        raise InvalidInput(f"dilation must be a nonnegative integer, got {t!r}")


def ehrhart_direct(s, t: int, cap=None) -> EhrhartValue:
    """Count integer points of t P_s straight from its defining inequalities.

    Coordinates are processed from the last one down: for a bound b on
    lambda_i, the number of valid (lambda_1, ..., lambda_i) with lambda_i <= b
    is accumulated over lambda_i, each contributing the count for
    lambda_{i-1} <= floor(s_{i-1} lambda_i / s_i).
    """
    s = make_seq(s)
    _check_t(t)
    check_cap(sum(t * m + 1 for m in s), cap, "dilation states")
    # below[b] = #{(lambda_1..lambda_i) valid with lambda_i <= b}
    below = list(range(1, t * s[0] + 2))
    for i in range(1, len(s)):
        prev, cur, acc = s[i - 1], s[i], 0
        nxt = []
        for lam in range(t * cur + 1):
            acc += below[(prev * lam) // cur]
            nxt.append(acc)
        below = nxt
    return EhrhartValue(t, below[t * s[-1]])


def dilation_contains(s, t, x) -> bool:
    if len(x) != len(s):
        raise InvalidInput(f"point has length {len(x)}, expected {len(s)}")
    if x[0] < 0 or x[-1] > t * s[-1]:
        return False
    return all(x[i - 1] * s[i] <= x[i] * s[i - 1] for i in range(1, len(s)))


def enumerate_dilation(s, t: int, cap=None) -> Iterator[tuple]:
    """Lattice points of t P_s, lexicographic in reversed coordinates."""
    s = make_seq(s)
    _check_t(t)
    check_cap(ehrhart_direct(s, t, cap).count, cap)
    n = len(s)

    def walk(i, suffix):
        if i < 0:
            yield suffix
            return
        hi = (s[i] * suffix[0]) // s[i + 1]
        for v in range(hi + 1):
            yield from walk(i - 1, (v,) + suffix)

    for top in range(t * s[-1] + 1):
        yield from walk(n - 2, (top,))


def ehrhart_from_delta(d, t: int) -> EhrhartValue:
    """i(P, t) = sum_i delta_i * C(t + n - i, n)."""
    _check_t(t)
    d = tuple(d)
    n = len(d) - 1
    return EhrhartValue(t, sum(di * math.comb(t + n - i, n) for i, di in enumerate(d)))


def series_check(s, T: int, d: Sequence[int] | None = None, cap=None) -> bool:
    """Check (1 - z)^{n+1} * sum_{t <= T} i(P_s, t) z^t == delta(z) up to z^T.

    Truncating the series at z^T leaves every product coefficient of degree
    at most T exact, so all of them are compared.  ``d`` defaults to the
    parallelepiped delta-vector; pass a different vector to test it.
    """
    s = make_seq(s)
    n = len(s)
    if T < n + 1:
        raise InvalidInput(f"truncation order must be at least n + 1 = {n + 1}")
    if d is None:
        d = delta_via_parallelepiped(s, cap=cap)
    d = tuple(d)
    values = [ehrhart_direct(s, t, cap).count for t in range(T + 1)]
    factor = [(-1) ** k * math.comb(n + 1, k) for k in range(n + 2)]
    product = [sum(factor[k] * values[j - k] for k in range(min(j, n + 1) + 1))
               for j in range(T + 1)]
    expected = list(d[:T + 1]) + [0] * (T + 1 - len(d))
    return product == expected


def verify_volume(s, cap=None, parallel=False) -> list:
    """Every applicable delta method sums to prod(s), starts with 1, and agrees."""
    s = make_seq(s)
    bad = []
    results = {m: METHODS[m](s, cap=cap, parallel=parallel).entries
               for m in applicable_methods(s)}
    for m, d in results.items():
        if sum(d) != s.volume():
            bad.append(Counterexample((), f"{m}: sum {sum(d)} != {s.volume()}"))
        if d[0] != 1:
            bad.append(Counterexample((), f"{m}: delta_0 = {d[0]}"))
    if len(set(results.values())) > 1:
        bad.append(Counterexample((), f"methods disagree: {results}"))
    return bad
