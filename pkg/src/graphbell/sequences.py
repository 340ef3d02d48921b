"""Exact arbitrary-precision tables for set-partition counts.

``bell(n)`` counts the set partitions of an n-element set, ``stirling2(n, k)``
those with exactly k blocks, and ``two_bell(n)`` the total number of blocks
over all partitions of an (n+1)-element set.  The Bell column and the
Stirling triangle are grown by *independent* recurrences (Bell triangle vs.
the two-term triangle rule) so the test suite can cross-check one pipeline
against the other.  Everything is exact integer or Fraction arithmetic;
there is no floating point anywhere in this module.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import DomainError, ResourceError

# Default number of cached terms; callers may raise it up to the hard cap.
DEFAULT_TERMS = 256
HARD_MAX_TERMS = 4096


class BigSeqCache:
    """Append-only cache of Bell numbers and the k-block partition triangle.

    Growth is lock-guarded so concurrent readers may share one instance;
    rows are never mutated after being appended.
    """

    def __init__(self, max_terms: int = DEFAULT_TERMS):
        if max_terms < 1 or max_terms > HARD_MAX_TERMS:
            raise DomainError(f"max_terms must be in 1..{HARD_MAX_TERMS}")
        self.max_terms = max_terms
        self._lock = threading.Lock()
        self._bell: list[int] = [1]
        self._bell_triangle_row: list[int] = [1]
        self._stirling: list[list[int]] = [[1]]

    def grow_capacity(self, terms: int) -> None:
        """Raise the capacity ceiling so indices up to ``terms - 1`` are allowed."""
        if terms > HARD_MAX_TERMS:
            raise ResourceError(
                f"requested capacity {terms} exceeds the hard cap of {HARD_MAX_TERMS} terms"
            )
        with self._lock:
            self.max_terms = max(self.max_terms, terms)

    def ensure(self, n: int) -> None:
        """Extend both tables so indices 0..n are available."""
        if n < len(self._bell):
            return
        if n >= self.max_terms:
            raise ResourceError(
                f"sequence index {n} exceeds cache capacity {self.max_terms} terms; "
                "call grow_capacity() first"
            )
        with self._lock:
            while len(self._bell) <= n:
                # Bell triangle: next row starts with the previous row's last entry.
                row = self._bell_triangle_row
                nxt = [row[-1]]
                for x in row:
                    nxt.append(nxt[-1] + x)
                self._bell_triangle_row = nxt
                self._bell.append(nxt[0])

                # Triangle rule: count(n, k) = k*count(n-1, k) + count(n-1, k-1).
                prev = self._stirling[-1]
                m = len(self._stirling)
                srow = [0] * (m + 1)
                for k in range(1, m + 1):
                    srow[k] = k * (prev[k] if k < m else 0) + prev[k - 1]
                self._stirling.append(srow)

    def bell(self, n: int) -> int:
        if n < 0:
            raise DomainError("Bell index must be nonnegative")
        self.ensure(n)
        return self._bell[n]

    def stirling2(self, n: int, k: int) -> int:
        """Partitions of an n-set into exactly k nonempty blocks (0 when k is out of range)."""
        if n < 0:
            raise DomainError("Stirling row index must be nonnegative")
        if k < 0 or k > n:
            return 0
        self.ensure(n)
        return self._stirling[n][k]

    def two_bell(self, n: int) -> int:
        """Total block count over all partitions of an (n+1)-set."""
        if n < 0:
            raise DomainError("2-Bell index must be nonnegative")
        return self.bell(n + 2) - self.bell(n + 1)

    def avg_blocks(self, n: int) -> Fraction:
        """Exact average number of blocks in a partition of an n-set (n >= 1)."""
        if n < 1:
            raise DomainError("average block count requires n >= 1")
        return Fraction(self.two_bell(n - 1), self.bell(n))

    def alternating_bell_sum(self, n: int, shift: int = 0) -> int:
        """Sum of (-1)**(j+1) * bell(n - j + shift) for j = 1..n-1.

        With shift 0 this equals the partition count of an n-cycle into
        stable sets; with shift 1, the corresponding total block count.
        """
        if n < 3:
            raise DomainError("alternating Bell sum requires n >= 3")
        if 1 + shift < 0:
            raise DomainError("alternating Bell sum would need a negative Bell index")
        return sum((-1) ** (j + 1) * self.bell(n - j + shift) for j in range(1, n))


_SHARED = BigSeqCache()


def shared_cache() -> BigSeqCache:
    return _SHARED


def bell(n: int) -> int:
    return _SHARED.bell(n)


def stirling2(n: int, k: int) -> int:
    return _SHARED.stirling2(n, k)


def two_bell(n: int) -> int:
    return _SHARED.two_bell(n)


def avg_blocks(n: int) -> Fraction:
    return _SHARED.avg_blocks(n)


def alternating_bell_sum(n: int, shift: int = 0) -> int:
    return _SHARED.alternating_bell_sum(n, shift)
