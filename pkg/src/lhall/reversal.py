"""Bijections between s and its reversal u = reverse(s).

The central map is Gamma: Par_{s*} -> Par_{u*}, built as

    x -> REM_{s*}(x) -> drop last -> Phi_s -> reverse -> pad 0 -> REM_{u*}^{-1}

and preserving the last coordinate.  The batch verifiers walk a whole word
set or point set and return every counterexample, sorted by input, so the
report never depends on how work was split across processes.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ._parallel import run_tasks, split_depth
from .ehrhart import (delta_via_parallelepiped, dilation_contains,
                      ehrhart_direct, enumerate_dilation)
from .errors import InvalidInput, PreconditionError
from .parbox import (Counterexample, enumerate_par, level, par_points, phi,
                     rem, rem_bar, rem_bar_inv, rem_inv, require_par)
from .seq import (Seq, check_cap, check_word, drop_last, make_seq, pad_zero,
                  reverse, reverse_seq, star, tilde)
from .stats import asc_set, des, s_asc, s_des


@dataclass(frozen=True)
class BijectionTrace:
    source: tuple
    rem_word: tuple        # REM_{s*}(x)
    dropped: tuple         # last coordinate removed
    phi_word: tuple        # Phi_s of the above
    reversed_word: tuple
    padded: tuple          # reversed word with a trailing 0, over u*
    target: tuple          # REM_{u*}^{-1}(padded)
    source_level: int
    target_level: int


@dataclass(frozen=True)
class Prop64Trace:
    source: tuple
    rem_bar_word: tuple    # REM-bar_{s*}(x)
    dropped: tuple
    output: tuple          # reversed; an inversion sequence
    level: int
    asc_dropped: int
    des_output: int


# -- pointwise identities ------------------------------------------------------

def check_rev_identity(s, r) -> bool:
    """des_{s*}(r, 0) == des_{u*}(reverse(Phi_s(r)), 0)."""
    s = make_seq(s)
    r = check_word(s, r)
    lhs = s_des(star(s), r + (0,))
    rhs = s_des(star(reverse_seq(s)), reverse(phi(s, r)) + (0,))
    return lhs == rhs


def check_tilde_identity(s, r) -> bool:
    """des_{~s}(r) == asc_{~s}(Phi_{~s}(r)) == des_{~u}(reverse(Phi_{~s}(r)))."""
    s = make_seq(s)
    ts = tilde(s)
    r = check_word(ts, r)
    if r[0] != 0 or r[-1] != 0:
        raise InvalidInput("padded word must start and end with 0")
    z = phi(ts, r)
    a = s_des(ts, r)
    b = s_asc(ts, z)
    c = s_des(reverse_seq(ts), reverse(z))
    return a == b == c


def check_s1_identity(s, r) -> bool:
    """For s_1 = 1: des_{s*}(r, 0) == asc_{s*}(Phi_s(r), 0) == asc_s(Phi_s(r))."""
    s = make_seq(s)
    if s[0] != 1:
        raise PreconditionError(f"identity needs s_1 = 1, got s_1 = {s[0]}")
    r = check_word(s, r)
    z = phi(s, r)
    return s_des(star(s), r + (0,)) == s_asc(star(s), z + (0,)) == s_asc(s, z)


def check_cor59(s, r) -> bool:
    """REM-bar_{s*}^{-1}(r, 0) and REM_{u*}^{-1}(reverse(r), 0) share a level."""
    s = make_seq(s)
    r = check_word(s, r)
    x = rem_bar_inv(star(s), r + (0,))
    y = rem_inv(star(reverse_seq(s)), reverse(r) + (0,))
    return level(x) == level(y)


# -- Gamma -----------------------------------------------------------------------

def gamma(s, x) -> BijectionTrace:
    s = make_seq(s)
    ss, us = star(s), star(reverse_seq(s))
    x = require_par(ss, x)
    r = rem(ss, x)
    dropped = drop_last(r)
    z = phi(s, dropped)
    rev = reverse(z)
    padded = pad_zero(rev)
    target = rem_inv(us, padded)
    return BijectionTrace(x, r, dropped, z, rev, padded, target, level(x), level(target))


def gamma_inv(s, y) -> tuple:
    """Walk the Gamma chain backwards from a point of Par_{u*}."""
    s = make_seq(s)
    ss, us = star(s), star(reverse_seq(s))
    y = require_par(us, y)
    r = drop_last(rem(us, y))
    return rem_inv(ss, pad_zero(phi(s, reverse(r))))


def composition_identity(s, x) -> bool:
    """Phi_s(drop(REM_{s*}(x))) == drop(REM-bar_{s*}(x))."""
    ss = star(make_seq(s))
    return phi(s, drop_last(rem(ss, x))) == drop_last(rem_bar(ss, x))


# -- dilations -------------------------------------------------------------------

def reversal_point_map(s, t: int, x) -> tuple:
    """x -> reverse(t*s - x), taking t P_s onto t P_u."""
    s = make_seq(s)
    x = tuple(x)
    if not dilation_contains(s, t, x):
        raise InvalidInput(f"{x} is not in {t} * P_{tuple(s)}")
    return tuple(t * m - v for m, v in zip(s, x))[::-1]


# -- lecture hall sequence (1, 2, ..., n) ------------------------------------------

def lecture(n: int) -> Seq:
    if n < 1:
        raise InvalidInput("n must be positive")
    return Seq(range(1, n + 1))


def prop64_trace(n: int, x) -> Prop64Trace:
    ss = star(lecture(n))
    x = require_par(ss, x)
    z = rem_bar(ss, x)
    dropped = drop_last(z)
    out = reverse(dropped)
    return Prop64Trace(x, z, dropped, out, level(x), len(asc_set(dropped)), des(out))


def prop64_map(n: int, x) -> tuple:
    """Par_{s*} point for s = (1..n) -> inversion sequence of length n."""
    return prop64_trace(n, x).output


# -- batch verifiers -------------------------------------------------------------

_WORD_CHECKS = {
    "rev": (check_rev_identity, lambda s: tuple(s)),
    "tilde": (check_tilde_identity, lambda s: tuple(tilde(s))),
    "s1": (check_s1_identity, lambda s: tuple(s)),
    "cor59": (check_cor59, lambda s: tuple(s)),
}


def _word_chunk(task):
    name, s, radices, prefix = task
    check = _WORD_CHECKS[name][0]
    bad = []
    for tail in itertools.product(*(range(m) for m in radices[len(prefix):])):
        r = prefix + tail
        if not check(s, r):
            bad.append(Counterexample(r, f"{name} identity fails"))
    return bad


def _verify_words(name, s, cap=None, parallel=False) -> list:
    s = make_seq(s)
    check_cap(s.volume(), cap)
    radices = _WORD_CHECKS[name][1](s)
    k = split_depth(radices) if parallel else 0
    prefixes = itertools.product(*(range(m) for m in radices[:k]))
    tasks = [(name, s, radices, p) for p in prefixes]
    found = [c for part in run_tasks(_word_chunk, tasks, parallel) for c in part]
    return sorted(found)


def verify_rev_identity(s, cap=None, parallel=False) -> list:
    return _verify_words("rev", s, cap, parallel)


def verify_tilde_identity(s, cap=None, parallel=False) -> list:
    return _verify_words("tilde", s, cap, parallel)


def verify_s1_identity(s, cap=None, parallel=False) -> list:
    s = make_seq(s)
    if s[0] != 1:
        raise PreconditionError(f"identity needs s_1 = 1, got s_1 = {s[0]}")
    return _verify_words("s1", s, cap, parallel)


def verify_cor59(s, cap=None, parallel=False) -> list:
    return _verify_words("cor59", s, cap, parallel)


def verify_gamma(s, cap=None, parallel=False) -> list:
    """Gamma maps each level of Par_{s*} bijectively onto that level of Par_{u*}."""
    s = make_seq(s)
    ss, us = star(s), star(reverse_seq(s))
    bad = []
    images = {}
    for x in par_points(ss, cap, parallel):
        tr = gamma(s, x)
        if tr.source_level != tr.target_level:
            bad.append(Counterexample(x, f"level {tr.source_level} -> {tr.target_level}"))
        if not composition_identity(s, x):
            bad.append(Counterexample(x, "Phi after REM differs from REM-bar"))
        if gamma_inv(s, tr.target) != x:
            bad.append(Counterexample(x, "gamma_inv does not recover the point"))
        images.setdefault(tr.target_level, []).append(tr.target)
    target = enumerate_par(us, cap, parallel).levels
    for i in sorted(set(images) | set(target)):
        if sorted(images.get(i, [])) != list(target.get(i, ())):
            bad.append(Counterexample((i,), f"level {i} image differs from Par_u* level"))
    return sorted(bad)


def verify_prop64(n: int, cap=None, parallel=False) -> list:
    """Exhaustive bijection and level law for s = (1, ..., n)."""
    ss = star(lecture(n))
    bad = []
    seen = {}
    for x in par_points(ss, cap, parallel):
        tr = prop64_trace(n, x)
        if not tr.level == tr.asc_dropped == tr.des_output:
            bad.append(Counterexample(x, f"level {tr.level}, asc {tr.asc_dropped}, "
                                         f"des {tr.des_output}"))
        seen.setdefault(tr.output, []).append(x)
    inversion_seqs = set(itertools.product(*(range(m) for m in range(n, 0, -1))))
    for w, xs in seen.items():
        if len(xs) > 1:
            bad.append(Counterexample(min(xs), f"collides with {max(xs)} at {w}"))
        if w not in inversion_seqs:
            bad.append(Counterexample(xs[0], f"image {w} is not an inversion sequence"))
    if len(seen) != math.factorial(n):
        bad.append(Counterexample((), f"{len(seen)} images, expected {math.factorial(n)}"))
    return sorted(bad)


def verify_reversal_delta(s, T: int = 3, cap=None, parallel=False) -> list:
    """delta(s) == delta(u), equal Ehrhart counts for t <= T, and the affine map
    is a bijection on lattice points for every t <= T."""
    s = make_seq(s)
    u = reverse_seq(s)
    bad = []
    ds = delta_via_parallelepiped(s, cap, parallel).entries
    du = delta_via_parallelepiped(u, cap, parallel).entries
    if ds != du:
        bad.append(Counterexample((), f"delta {ds} != {du}"))
    for t in range(T + 1):
        cs, cu = ehrhart_direct(s, t, cap).count, ehrhart_direct(u, t, cap).count
        if cs != cu:
            bad.append(Counterexample((t,), f"i(P_s,{t}) = {cs} != {cu}"))
            continue
        image = sorted(reversal_point_map(s, t, x) for x in enumerate_dilation(s, t, cap))
        if image != sorted(enumerate_dilation(u, t, cap)):
            bad.append(Counterexample((t,), "point map is not onto t*P_u"))
    return sorted(bad)
