"""Lattice points of the lecture hall parallelepiped and the REM bijections.

A point x lies in Par_s exactly when 0 <= x_1 < s_1 and, for each i,
0 <= s_i x_{i+1} - s_{i+1} x_i < s_i s_{i+1}.  This cleared-denominator band
test replaces the barycentric description; the coefficients are never formed.
Every map here checks its domain and raises rather than returning garbage.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from ._parallel import run_tasks, split_depth
from .errors import InvalidInput, NotInParallelepiped, PreconditionError
from .seq import KRPair, check_cap, check_word, make_seq, star
from .stats import des_count_distribution, s_des_prefix_counts


class Counterexample(NamedTuple):
    """A failing input (point, word or index tuple) and what went wrong."""

    input: tuple
    detail: str


def par_violation(s: Sequence[int], x: Sequence[int]) -> str | None:
    """Describe the first failed membership inequality, or None for members."""
    if len(x) != len(s):
        raise InvalidInput(f"point has length {len(x)}, expected {len(s)}")
    if not 0 <= x[0] < s[0]:
        return f"first coordinate out of range: need 0 <= x_1 < {s[0]}, got {x[0]}"
    for i in range(1, len(s)):
        gap = s[i - 1] * x[i] - s[i] * x[i - 1]
        if not 0 <= gap < s[i - 1] * s[i]:
            return f"band condition failed at i={i}"
    return None


def par_contains(s: Sequence[int], x: Sequence[int]) -> bool:
    return par_violation(s, x) is None


def require_par(s, x) -> tuple:
    x = tuple(x)
    problem = par_violation(s, x)
    if problem is not None:
        raise NotInParallelepiped(f"{x} is not in Par_{tuple(s)}: {problem}")
    return x


def _band(s, i, prev):
    """Admissible values of coordinate ``i`` (0-based, i >= 1) after ``prev``."""
    lo = -((-s[i] * prev) // s[i - 1])
    return range(lo, lo + s[i])


def _next_values(s, x):
    return _band(s, len(x), x[-1]) if x else range(s[0])


def _extend(s, prefix) -> list:
    """All Par_s points starting with ``prefix``, lexicographically."""
    out = []
    n = len(s)
    stack = [prefix]
    # depth-first with reversed pushes keeps lexicographic order
    while stack:
        x = stack.pop()
        if len(x) == n:
            out.append(x)
            continue
        for v in reversed(_next_values(s, x)):
            stack.append(x + (v,))
    return out


def iter_par(s: Sequence[int], cap: int | None = None) -> Iterator[tuple]:
    """Lazily walk Par_s in lexicographic order."""
    s = make_seq(s)
    check_cap(s.volume(), cap)
    n = len(s)

    def walk(i, prefix):
        if i == n:
            yield prefix
            return
        for v in _band(s, i, prefix[-1]):
            yield from walk(i + 1, prefix + (v,))

    for x1 in range(s[0]):
        yield from walk(1, (x1,))


def _extend_task(task):
    s, prefixes = task
    out = []
    for p in prefixes:
        out.extend(_extend(s, p))
    return out


def par_points(s: Sequence[int], cap: int | None = None, parallel: bool = False) -> list:
    """Every lattice point of Par_s as a sorted list of tuples."""
    s = make_seq(s)
    check_cap(s.volume(), cap)
    if not parallel:
        return _extend(s, ())
    k = max(split_depth(s), 1)
    prefixes = _extend(tuple(s[:k]), ())
    tasks = [(tuple(s), [p]) for p in prefixes]
    return [x for part in run_tasks(_extend_task, tasks, parallel=True) for x in part]


@dataclass(frozen=True)
class GradedPointSet:
    """Points of Par_s bucketed by their last coordinate."""

    s: tuple
    levels: dict = field(default_factory=dict)

    @classmethod
    def from_points(cls, s, points):
        levels = {}
        for x in points:
            levels.setdefault(x[-1], []).append(x)
        return cls(tuple(s), {i: tuple(v) for i, v in sorted(levels.items())})

    def points(self) -> list:
        return sorted(x for pts in self.levels.values() for x in pts)

    def __len__(self):
        return sum(len(v) for v in self.levels.values())

    def grade(self, size: int | None = None) -> tuple:
        return grade(self, size)


def enumerate_par(s: Sequence[int], cap: int | None = None,
                  parallel: bool = False) -> GradedPointSet:
    s = make_seq(s)
    return GradedPointSet.from_points(s, par_points(s, cap, parallel))


def grade(pts: GradedPointSet, size: int | None = None) -> tuple:
    """Level counts ``(l^0, l^1, ...)``.

    The vector has length ``max(size, top level + 1)``; ``size`` defaults to
    ``len(pts.s)``, which for Par_{s*} is n + 1 and matches a delta-vector.
    """
    top = max(pts.levels, default=-1)
    if size is None:
        size = len(pts.s)
    out = [0] * max(size, top + 1)
    for i, v in pts.levels.items():
        out[i] = len(v)
    return tuple(out)


def level(x: Sequence[int]) -> int:
    return x[-1]


# -- REM and friends ---------------------------------------------------------

def rem(s, x) -> tuple:
    """Remainders x_i mod s_i of a parallelepiped point."""
    x = require_par(s, x)
    return tuple(v % m for v, m in zip(x, s))


def kr(s, x) -> KRPair:
    """Quotients and remainders of a parallelepiped point."""
    x = require_par(s, x)
    return KRPair(tuple(v // m for v, m in zip(x, s)), tuple(v % m for v, m in zip(x, s)))


def kr_inv(s, pair: KRPair) -> tuple:
    k, r = pair
    return tuple(ki * m + ri for ki, m, ri in zip(k, s, r))


def rem_inv(s, r) -> tuple:
    """Place digit r_i at height des_s^{<i}(r) * s_i; the inverse of :func:`rem`."""
    r = check_word(s, r)
    k = s_des_prefix_counts(s, r)
    return tuple(ki * m + ri for ki, m, ri in zip(k, s, r))


def phi_q(s, q, r) -> tuple:
    """Digitwise (q_i - r_i) mod s_i; an involution on the word set."""
    q, r = check_word(s, q), check_word(s, r)
    return tuple((a - b) % m for a, b, m in zip(q, r, s))


def phi(s, r) -> tuple:
    return phi_q(s, (0,) * len(s), r)


def rem_q(s, q, x) -> tuple:
    """(x_i + q_i) mod s_i."""
    q = check_word(s, q)
    x = require_par(s, x)
    return tuple((v + a) % m for v, a, m in zip(x, q, s))


def rem_q_inv(s, q, y) -> tuple:
    q, y = check_word(s, q), check_word(s, y)
    return rem_inv(s, tuple((b - a) % m for a, b, m in zip(q, y, s)))


def rem_bar_q(s, q, x) -> tuple:
    """(q_i - x_i) mod s_i."""
    q = check_word(s, q)
    x = require_par(s, x)
    return tuple((a - v) % m for v, a, m in zip(x, q, s))


def rem_bar(s, x) -> tuple:
    return rem_bar_q(s, (0,) * len(s), x)


def rem_bar_q_inv(s, q, z) -> tuple:
    return rem_inv(s, phi_q(s, q, z))


def rem_bar_inv(s, z) -> tuple:
    return rem_bar_q_inv(s, (0,) * len(s), z)


def rem_inv_all(s, cap: int | None = None) -> list:
    """``rem_inv`` over the whole word set, in word order."""
    s = make_seq(s)
    check_cap(s.volume(), cap)
    return [rem_inv(s, r) for r in itertools.product(*(range(m) for m in s))]


# -- exhaustive checks -----------------------------------------------------------

def verify_bijection(s, cap=None, parallel=False) -> list:
    """REM and its inverse are mutually inverse and k_i = des_s^{<i}(r) everywhere."""
    s = make_seq(s)
    pts = par_points(s, cap, parallel)
    bad = []
    if len(pts) != s.volume():
        bad.append(Counterexample((), f"{len(pts)} points, expected {s.volume()}"))
    for x in pts:
        k, r = kr(s, x)
        if rem_inv(s, r) != x:
            bad.append(Counterexample(x, "rem_inv(rem(x)) != x"))
        if k != s_des_prefix_counts(s, r):
            bad.append(Counterexample(x, f"quotients {k} are not prefix descent counts"))
    images = []
    for r in itertools.product(*(range(m) for m in s)):
        x = rem_inv(s, r)
        images.append(x)
        if not par_contains(s, x) or rem(s, x) != r:
            bad.append(Counterexample(r, "rem(rem_inv(r)) != r"))
    if sorted(images) != pts:
        bad.append(Counterexample((), "rem_inv image differs from the enumerated point set"))
    return sorted(bad)


def verify_grading(s, cap=None, parallel=False) -> list:
    """For s_n = 1: Par_s and Par_{s*} have equal gradings, both counted by des_s."""
    s = make_seq(s)
    if s[-1] != 1:
        raise PreconditionError(f"grading equality needs s_n = 1, got s_n = {s[-1]}")
    size = len(s) + 1
    plain = grade(enumerate_par(s, cap, parallel), size)
    starred = grade(enumerate_par(star(s), cap, parallel), size)
    by_des = des_count_distribution(s, "des_s", cap=cap, parallel=parallel)
    bad = []
    for i, (a, b, c) in enumerate(zip(plain, starred, by_des)):
        if not a == b == c:
            bad.append(Counterexample((i,), f"level {i}: Par_s {a}, Par_s* {b}, des_s {c}"))
    return bad
