"""Exact counting formulas and truncated bivariate power series.

Everything here is integer arithmetic; nothing touches floating point.
"""

from __future__ import annotations

import math
from typing import Iterator, Mapping

__all__ = [
    "binom",
    "catalan",
    "fibonacci",
    "eulerian",
    "tetrahedral",
    "cake",
    "burstein_depth2_stack_words",
    "burstein_gf",
    "burstein_gf_coefficient",
    "Series2",
]


def binom(x: int, y: int) -> int:
    """Binomial coefficient, zero when ``y < 0`` or ``y > x``."""
    if y < 0 or x < 0 or y > x:
        return 0
    return math.comb(x, y)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return binom(2 * n, n) // (n + 1)


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = F_2 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def eulerian(n: int, k: int) -> int:
    """Permutations of length ``n`` with ``k - 1`` descents.

    Uses E(n, k) = k E(n-1, k) + (n-k+1) E(n-1, k-1).
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    row = [1]  # n = 1
    for m in range(2, n + 1):
        prev = row + [0]
        row = [
            (j + 1) * prev[j] + ((m - j) * prev[j - 1] if j else 0) for j in range(m)
        ]
    return row[k - 1]


def tetrahedral(n: int) -> int:
    return binom(n + 1, 3)


def cake(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(binom(n - 1, i) for i in range(4))


def burstein_depth2_stack_words(n: int, k: int) -> int:
    """Words of length ``n`` over ``k`` letters avoiding 120 and 210."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    odd = k % 2
    return odd + 2**n * sum(binom(n + k - 3 - 2 * i, n - 1) for i in range((k - 2) // 2 + 1))


class Series2:
    """Bivariate power series in x and y truncated at degrees ``(nx, ny)``.

    Coefficients live in a sparse dict keyed by ``(i, j)`` for ``x^i y^j``.
    """

    __slots__ = ("nx", "ny", "coeffs")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None, nx: int = 0, ny: int = 0):
        self.nx = nx
        self.ny = ny
        self.coeffs: dict[tuple[int, int], int] = {}
        for (i, j), c in (coeffs or {}).items():
            if 0 <= i <= nx and 0 <= j <= ny and c:
                self.coeffs[i, j] = self.coeffs.get((i, j), 0) + int(c)

    @classmethod
    def constant(cls, c: int, nx: int, ny: int) -> Series2:
        return cls({(0, 0): c}, nx, ny)

    def _check(self, other: Series2) -> None:
        if (self.nx, self.ny) != (other.nx, other.ny):
            raise ValueError("series have different truncation orders")

    def _coerce(self, other) -> Series2:
        if isinstance(other, int):
            return Series2.constant(other, self.nx, self.ny)
        self._check(other)
        return other

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i <= self.nx and 0 <= j <= self.ny):
            raise IndexError(f"coefficient ({i},{j}) is beyond truncation ({self.nx},{self.ny})")
        return self.coeffs.get((i, j), 0)

    def __add__(self, other) -> Series2:
        other = self._coerce(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return Series2(out, self.nx, self.ny)

    __radd__ = __add__

    def __neg__(self) -> Series2:
        return Series2({k: -c for k, c in self.coeffs.items()}, self.nx, self.ny)

    def __sub__(self, other) -> Series2:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Series2:
        return self._coerce(other) - self

    def __mul__(self, other) -> Series2:
        other = self._coerce(other)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i <= self.nx and j <= self.ny:
                    out[i, j] = out.get((i, j), 0) + a * b
        return Series2(out, self.nx, self.ny)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Series2.constant(other, self.nx, self.ny)
        if not isinstance(other, Series2):
            return NotImplemented
        return (self.nx, self.ny) == (other.nx, other.ny) and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def invert(self) -> Series2:
        """Inverse of a series whose constant term is +1 or -1.

        Writing the series as ``u (1 - e)`` with ``e`` having no constant
        term, the inverse is ``u (1 + e + e^2 + ...)``; powers of ``e`` vanish
        after ``nx + ny`` factors.
        """
        u = self.coeffs.get((0, 0), 0)
        if u not in (1, -1):
            raise ValueError(f"constant term {u} is not a unit")
        e = Series2.constant(1, self.nx, self.ny) - self * u
        total = Series2.constant(1, self.nx, self.ny)
        power = Series2.constant(1, self.nx, self.ny)
        for _ in range(self.nx + self.ny):
            power = power * e
            if power.is_zero():
                break
            total = total + power
        return total * u

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self.coeffs.items()))

    def format(self) -> str:
        """One ``(n,k): coefficient`` line per nonzero term, sorted."""
        return "\n".join(f"({i},{j}): {c}" for (i, j), c in self.items())

    def __repr__(self) -> str:
        return f"Series2({dict(self.items())!r}, nx={self.nx}, ny={self.ny})"


def _poly(terms: Mapping[tuple[int, int], int], nx: int, ny: int) -> Series2:
    return Series2(terms, nx, ny)


def burstein_gf(nx: int, ny: int) -> Series2:
    """F(x, y) counting words over ``[k]`` avoiding 120, 201 and 210 by
    ``x^length y^k``, expanded to degrees ``(nx, ny)``."""
    # (1-x)(1-2x) = 1 - 3x + 2x^2
    a = _poly({(0, 0): 1, (1, 0): -3, (2, 0): 2}, nx, ny)
    y = _poly({(0, 1): 1}, nx, ny)
    x2 = _poly({(2, 0): 1}, nx, ny)
    # (1-x)(2-3x) = 2 - 5x + 3x^2
    b = _poly({(0, 0): 2, (1, 0): -5, (2, 0): 3}, nx, ny)
    c = _poly({(0, 0): 1, (1, 0): -2}, nx, ny)
    num = a - (a + x2) * y
    den = a - b * y + c * y * y
    return num * den.invert()


def burstein_gf_coefficient(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("degrees must be >= 0")
    return burstein_gf(n, k)[n, k]
