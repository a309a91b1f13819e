"""Invariant dimensions of tensor powers under signed-permutation groups.

The dimension of the invariant subspace of V^(tensor n) is the average of
graded traces over the group, and the trace of an element depends only on
its signed cycle type: a cycle of length l with twist parity t contributes
the factor

    sum over entries (p, q) of V of (d_plus + (-1)^t * d_minus) * u^(l*p) v^(l*q).

This computes the quotient cohomology of n-fold products by permutation,
even-twist, and full signed-permutation actions in exact integer arithmetic,
without touching individual group elements.
"""

from __future__ import annotations

import math
from functools import reduce

from .bigraded import EquivHodgeTable, HodgeTable, point
from .group import SignedCycleType, classes, group_order

WHICH = ("Sn", "G", "H")


class IntegralityViolation(ArithmeticError):
    """An averaged trace sum failed to divide exactly by the group order.

    The class-sum average of graded traces is a dimension, so any remainder
    or negative quotient signals an implementation bug, not bad input.
    """


class TracePolynomial:
    """Bivariate polynomial with exact integer coefficients.

    The coefficient of u^p v^q is the graded trace on the (p, q) component.
    Internal machinery for the class-sum average; coefficients of a single
    element's trace may be negative, only the averaged result must be a
    table of nonnegative dimensions.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def one(cls) -> "TracePolynomial":
        return cls({(0, 0): 1})

    def coefficient(self, p: int, q: int) -> int:
        return self.coeffs.get((p, q), 0)

    def __add__(self, other: "TracePolynomial") -> "TracePolynomial":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return TracePolynomial(out)

    def __mul__(self, other: "TracePolynomial") -> "TracePolynomial":
        out: dict[tuple[int, int], int] = {}
        for (p, q), a in self.coeffs.items():
            for (u, v), b in other.coeffs.items():
                key = (p + u, q + v)
                out[key] = out.get(key, 0) + a * b
        return TracePolynomial(out)

    def scaled(self, c: int) -> "TracePolynomial":
        return TracePolynomial({k: c * v for k, v in self.coeffs.items()})

    def weight_coefficient(self, k: int) -> int:
        """Sum of coefficients in total degree k (trace on weight k)."""
        return sum(v for (p, q), v in self.coeffs.items() if p + q == k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TracePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"TracePolynomial({dict(sorted(self.coeffs.items()))!r})"


def class_trace(ct: SignedCycleType, table: EquivHodgeTable) -> TracePolynomial:
    """Graded trace on V^(tensor n) of any element with the given type.

    Product over cycles (l, t) of sum_(p,q) (d_plus + (-1)^t d_minus)
    u^(lp) v^(lq).  Valid because the table has even-degree support only,
    so permuting tensor factors picks up no signs.
    """
    result = TracePolynomial.one()
    for length, parity in ct.parts:
        factor: dict[tuple[int, int], int] = {}
        for (p, q), (d_plus, d_minus) in table.items():
            c = d_plus - d_minus if parity else d_plus + d_minus
            if c:
                factor[(length * p, length * q)] = c
        result = result * TracePolynomial(factor)
    return result


def _sn_classes(n: int) -> list[tuple[SignedCycleType, int]]:
    """Cycle types of the plain symmetric group with their class sizes."""
    out = []
    def rec(length, remaining, acc):
        if length > n:
            if remaining == 0:
                acc = tuple(acc)
                size = math.factorial(n)
                for l, mult in _multiplicities(acc).items():
                    size //= l ** mult * math.factorial(mult)
                out.append((SignedCycleType(tuple((l, 0) for l in acc)), size))
            return
        for c in range(remaining // length, -1, -1):
            rec(length + 1, remaining - length * c, acc + [length] * c)

    rec(1, n, [])
    out.sort(key=lambda pair: pair[0].parts)
    return out


def _multiplicities(lengths):
    mult: dict[int, int] = {}
    for l in lengths:
        mult[l] = mult.get(l, 0) + 1
    return mult


def invariant_dims(table: EquivHodgeTable, n: int, which: str) -> HodgeTable:
    """Dimensions of the invariants of V^(tensor n), graded by (p, q).

    ``which`` selects the acting group: "Sn" permutes factors only, "H"
    adds even-twist involutions, "G" all signed permutations.  The average
    (1/|group|) * sum over classes of size * class_trace must divide exactly;
    anything else raises IntegralityViolation.
    """
    if which not in WHICH:
        raise ValueError(f"which must be one of {WHICH}, got {which!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    census = _sn_classes(n) if which == "Sn" else classes(n, which)
    order = group_order(n, which)
    total = TracePolynomial()
    for ct, size in census:
        total = total + class_trace(ct, table).scaled(size)
    entries = {}
    for pq, value in total.coeffs.items():
        dim, rem = divmod(value, order)
        if rem != 0 or dim < 0:
            raise IntegralityViolation(
                f"trace sum {value} at {pq} does not divide by group order {order}"
            )
        if dim:
            entries[pq] = dim
    return HodgeTable(entries, n * table.dimension)


def sym_product(surface: HodgeTable, m: int) -> HodgeTable:
    """Hodge diamond of the m-th symmetric product.

    Computed as the permutation invariants of the m-th tensor power with
    the trivial eigenspace split; m = 0 gives the point.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return point()
    return invariant_dims(EquivHodgeTable.trivial_split(surface), m, "Sn")


def sym_multi(surface: HodgeTable, alpha) -> HodgeTable:
    """Diamond of the product of symmetric products with multiplicities alpha.

    ``alpha`` is a sequence (a_1, ..., a_n); the result is the tensor product
    over i of the a_i-th symmetric product.  Zero multiplicities contribute
    the point and are skipped.
    """
    parts = getattr(alpha, "alpha", alpha)
    factors = [sym_product(surface, a) for a in parts if a > 0]
    if not factors:
        return point()
    return reduce(lambda x, y: x * y, factors)
