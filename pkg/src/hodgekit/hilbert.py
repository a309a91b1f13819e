"""Hodge diamonds of Hilbert schemes of points on a surface.

The cohomology of the Hilbert scheme of n points decomposes, as a Hodge
structure, into a sum over partitions of n of Tate-twisted cohomologies of
products of symmetric products: a partition with multiplicities alpha and
weight w = sum(alpha) contributes its (p, q) entry at (p + n - w, q + n - w).
An independent Euler-characteristic cross-check against the classical
product generating function prod_m (1 - q^m)^(-e) guards the assembly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bigraded import HodgeTable
from .invariants import sym_multi


class MismatchReport(RuntimeError):
    """Assembled Euler numbers disagree with the generating function."""

    def __init__(self, n: int, assembled: int, expected: int):
        self.n = n
        self.assembled = assembled
        self.expected = expected
        super().__init__(
            f"Euler mismatch at n={n}: assembled {assembled}, "
            f"generating function {expected}"
        )


@dataclass(frozen=True, slots=True)
class Partition:
    """Multiplicity vector (a_1, ..., a_n) with sum i*a_i = n."""

    alpha: tuple[int, ...]

    def __post_init__(self):
        n = len(self.alpha)
        if any(a < 0 for a in self.alpha):
            raise ValueError("multiplicities must be nonnegative")
        if sum(i * a for i, a in enumerate(self.alpha, start=1)) != n:
            raise ValueError(f"not a partition of {n}: {self.alpha!r}")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def weight(self) -> int:
        """|alpha| = total number of parts."""
        return sum(self.alpha)

    def __repr__(self):
        return f"Partition{self.alpha!r}"


def partitions(n: int) -> list[Partition]:
    """All partitions of n as multiplicity vectors, reverse-lexicographic."""
    if n < 1:
        raise ValueError("n must be >= 1")
    found: list[tuple[int, ...]] = []

    def rec(i, remaining, acc):
        if i > n:
            if remaining == 0:
                found.append(tuple(acc))
            return
        for a in range(remaining // i, -1, -1):
            rec(i + 1, remaining - i * a, acc + [a])

    rec(1, n, [])
    found.sort(reverse=True)
    return [Partition(alpha) for alpha in found]


def hilbert_diamond(surface: HodgeTable, n: int) -> HodgeTable:
    """Full Hodge diamond of the Hilbert scheme of n points.

    Each partition contributes the diamond of its product of symmetric
    products, shifted diagonally by n - weight.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    entries: dict[tuple[int, int], int] = {}
    for alpha in partitions(n):
        shift = n - alpha.weight
        for (p, q), d in sym_multi(surface, alpha).items():
            key = (p + shift, q + shift)
            entries[key] = entries.get(key, 0) + d
    return HodgeTable(entries, n * surface.dimension)


def h_one_top(surface: HodgeTable, n: int) -> int:
    """The (1, 2n-1) entry of the Hilbert-scheme diamond.

    Vanishes for surfaces with no (0, 1)/(0, 2) cohomology (e.g. Enriques
    surfaces); this is the obstruction slot for extra deformations of the
    universal cover.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    return hilbert_diamond(surface, n)[1, 2 * n - 1]


def euler_product_coefficients(e: int, n_max: int) -> list[int]:
    """Coefficients of q^0..q^n_max in prod_{m>=1} (1 - q^m)^(-e)."""
    coeffs = [0] * (n_max + 1)
    coeffs[0] = 1
    for m in range(1, n_max + 1):
        if e >= 0:
            factor = {m * k: math.comb(e + k - 1, k)
                      for k in range(1, n_max // m + 1)}
            factor[0] = 1
        else:
            factor = {m * k: (-1) ** k * math.comb(-e, k) for k in range(-e + 1)
                      if m * k <= n_max}
        new = [0] * (n_max + 1)
        for base, c in enumerate(coeffs):
            if c == 0:
                continue
            for off, f in factor.items():
                if base + off <= n_max:
                    new[base + off] += c * f
        coeffs = new
    return coeffs


def euler_check(surface: HodgeTable, n_max: int) -> list[tuple[int, int, int]]:
    """Compare assembled Euler numbers with the generating function.

    Returns (n, assembled, generating-function) rows for n = 1..n_max; the
    two columns are computed along fully independent paths.  Raises
    MismatchReport at the first disagreement.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    expected = euler_product_coefficients(surface.euler(), n_max)
    rows = []
    for n in range(1, n_max + 1):
        assembled = hilbert_diamond(surface, n).euler()
        if assembled != expected[n]:
            raise MismatchReport(n, assembled, expected[n])
        rows.append((n, assembled, expected[n]))
    return rows
