"""Lecture-hall sequences, mixed-radix words and the small maps between them.

Sequences are written 1-based in the mathematics and stored 0-based: entry
``s[i]`` is s_{i+1}.  Words and lattice points are plain tuples of ints; the
:class:`Word` wrapper exists for callers that want the radices carried along.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidInput, SizeCapExceeded

DEFAULT_MAX_POINTS = 10**7
MAX_POINTS_ENV = "LHALL_MAX_POINTS"

LatticePoint = tuple  # tuple[int, ...]


class Seq(tuple):
    """An immutable nonempty tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(entries)
        if not entries:
            raise InvalidInput("empty sequence")
        for i, v in enumerate(entries, start=1):
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidInput(f"non-integer entry at index {i}")
            if v <= 0:
                raise InvalidInput(f"nonpositive entry at index {i}")
        return super().__new__(cls, entries)

    def __repr__(self):
        return f"Seq{tuple.__repr__(self)}"

    @property
    def n(self) -> int:
        return len(self)

    def volume(self) -> int:
        """Normalized volume of the lecture hall simplex, the product of entries."""
        return math.prod(self)


def make_seq(entries: Iterable[int]) -> Seq:
    return entries if isinstance(entries, Seq) else Seq(entries)


def reverse_seq(s: Sequence[int]) -> Seq:
    return Seq(reversed(tuple(s)))


def star(s: Sequence[int]) -> Seq:
    """Append a final entry 1: (s_1, ..., s_n) -> (s_1, ..., s_n, 1)."""
    return Seq(tuple(s) + (1,))


def tilde(s: Sequence[int]) -> Seq:
    """Pad with 1 on both ends: (1, s_1, ..., s_n, 1)."""
    return Seq((1,) + tuple(s) + (1,))


def parse_seq(text: str) -> Seq:
    """Parse ``"2,3,1"``, ``"lecture:n"`` (1..n) or ``"anti:n"`` (n..1)."""
    text = text.strip()
    for prefix, build in (("lecture:", lambda n: range(1, n + 1)),
                          ("anti:", lambda n: range(n, 0, -1))):
        if text.startswith(prefix):
            arg = text[len(prefix):]
            try:
                n = int(arg)
            except ValueError:
                raise InvalidInput(f"bad preset length {arg!r}") from None
            if n < 1:
                raise InvalidInput("empty sequence")
            return Seq(build(n))
    return Seq(parse_ints(text))


def parse_ints(text: str) -> tuple:
    """Comma-separated decimal integers (signs allowed)."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InvalidInput(f"cannot parse integer list {text!r}") from None


@dataclass(frozen=True)
class Word:
    """A digit tuple together with its radices; ``0 <= digits[i] < radices[i]``."""

    radices: Seq
    digits: tuple

    def __post_init__(self):
        object.__setattr__(self, "radices", make_seq(self.radices))
        object.__setattr__(self, "digits", check_word(self.radices, self.digits))

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)


class KRPair(NamedTuple):
    """Quotient vector ``k`` and remainder word ``r`` of a parallelepiped point."""

    k: tuple
    r: tuple


def check_word(s: Sequence[int], r: Iterable[int]) -> tuple:
    """Return ``r`` as a tuple after checking it lies in <s_1-1> x ... x <s_n-1>."""
    r = tuple(r.digits if isinstance(r, Word) else r)
    if len(r) != len(s):
        raise InvalidInput(f"word has length {len(r)}, expected {len(s)}")
    for i, (d, m) in enumerate(zip(r, s), start=1):
        if not 0 <= d < m:
            raise InvalidInput(f"digit {d} at index {i} outside <{m - 1}>")
    return r


def max_points(override: int | None = None) -> int:
    """Resolve the point budget: explicit value, then environment, then default."""
    if override is not None:
        cap = int(override)
    else:
        env = os.environ.get(MAX_POINTS_ENV)
        cap = int(env) if env else DEFAULT_MAX_POINTS
    if cap < 1:
        raise InvalidInput("size cap must be at least 1")
    return cap


def check_cap(count: int, cap: int | None = None, what: str = "points") -> None:
    limit = max_points(cap)
    if count > limit:
        raise SizeCapExceeded(f"{count} {what} exceeds the cap of {limit}")


def enumerate_words(s: Sequence[int], cap: int | None = None) -> Iterator[tuple]:
    """All words of the mixed-radix set for ``s`` in lexicographic order.

    The leftmost digit is the most significant.  Yields ``prod(s)`` tuples.
    """
    check_cap(math.prod(s), cap)
    return itertools.product(*(range(m) for m in s))


def pad_zero(r):
    """Append a 0 digit (with radix 1 when given a :class:`Word`)."""
    if isinstance(r, Word):
        return Word(star(r.radices), r.digits + (0,))
    return tuple(r) + (0,)


def drop_last(w):
    """Remove the final coordinate; inverse of :func:`pad_zero`."""
    if len(w) < 2:
        raise InvalidInput("cannot drop the last coordinate of a length-1 vector")
    if isinstance(w, Word):
        return Word(Seq(w.radices[:-1]), w.digits[:-1])
    return tuple(w)[:-1]


def reverse(v):
    """Reverse a tuple, :class:`Seq` or :class:`Word`."""
    if isinstance(v, Word):
        return Word(reverse_seq(v.radices), v.digits[::-1])
    if isinstance(v, Seq):
        return reverse_seq(v)
    return tuple(v)[::-1]
