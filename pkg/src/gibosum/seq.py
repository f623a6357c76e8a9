"""Exact gibonacci terms for every integer index.

A gibonacci sequence obeys ``G[j] = G[j-1] + G[j-2]`` with arbitrary integer
seeds ``G[0] = a`` and ``G[1] = b``.  Negative indices come from running the
same recurrence backwards, ``G[j-2] = G[j] - G[j-1]``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass

__all__ = [
    "GibonacciParams",
    "SequenceCache",
    "FIBONACCI",
    "LUCAS",
    "term",
    "term_block",
    "lam",
    "fib",
    "luc",
    "cache_for",
]


@dataclass(frozen=True)
class GibonacciParams:
    """Seeds ``(a, b) = (G[0], G[1])`` of a gibonacci sequence."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("gibonacci seeds must be integers")
        if self.a == 0 and self.b == 0:
            raise ValueError("seeds (a, b) must not both be zero")

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


FIBONACCI = GibonacciParams(0, 1)
LUCAS = GibonacciParams(2, 1)


class SequenceCache:
    """Grow-on-demand two-sided table of terms.

    Terms live in two lists: ``_pos[k] = G[k]`` for ``k >= 0`` and
    ``_neg[k] = G[-k]`` for ``k >= 1`` (``_neg[0]`` is a placeholder).
    Readers never take the lock; lists only ever grow and a slot is written
    before the length that exposes it.
    """

    def __init__(self, params: GibonacciParams) -> None:
        self.params = params
        self._pos = [params.a, params.b]
        self._neg = [None, params.b - params.a]
        self._lock = threading.Lock()

    @property
    def lo(self) -> int:
        return -(len(self._neg) - 1)

    @property
    def hi(self) -> int:
        return len(self._pos) - 1

    def _grow(self, j: int) -> None:
        with self._lock:
            if j >= 0:
                pos = self._pos
                while len(pos) <= j:
                    pos.append(pos[-1] + pos[-2])
            else:
                neg, pos = self._neg, self._pos
                # G[-k] = G[-k+2] - G[-k+1]
                while len(neg) <= -j:
                    k = len(neg)
                    g2 = pos[2 - k] if k <= 2 else neg[k - 2]
                    g1 = pos[1 - k] if k <= 1 else neg[k - 1]
                    neg.append(g2 - g1)

    def __getitem__(self, j: int) -> int:
        if j >= 0:
            if j >= len(self._pos):
                self._grow(j)
            return self._pos[j]
        if -j >= len(self._neg):
            self._grow(j)
        return self._neg[-j]

    def block(self, lo: int, hi: int) -> list[int]:
        if lo > hi:
            raise ValueError(f"empty block: lo={lo} > hi={hi}")
        self[lo]
        self[hi]
        return [self[j] for j in range(lo, hi + 1)]


_caches: dict[GibonacciParams, SequenceCache] = {}
_registry_lock = threading.Lock()


def cache_for(params: GibonacciParams) -> SequenceCache:
    cache = _caches.get(params)
    if cache is None:
        with _registry_lock:
            cache = _caches.setdefault(params, SequenceCache(params))
    return cache


def term(params: GibonacciParams, j: int) -> int:
    """Return ``G[j]`` for any integer ``j``."""
    return cache_for(params)[j]


def term_block(params: GibonacciParams, lo: int, hi: int) -> list[int]:
    """Return ``[G[lo], ..., G[hi]]``; raises ``ValueError`` if ``lo > hi``."""
    return cache_for(params).block(lo, hi)


def lam(params: GibonacciParams) -> int:
    """Characteristic ``G[1]**2 - G[0]*G[2]``: 1 for Fibonacci, -5 for Lucas."""
    a, b = params.a, params.b
    return b * b - a * (a + b)


def fib(j: int) -> int:
    return cache_for(FIBONACCI)[j]


def luc(j: int) -> int:
    return cache_for(LUCAS)[j]
