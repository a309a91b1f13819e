"""The signed-permutation deck groups acting on n-fold products.

G is the full group (Z/2)^n semidirect S_n: a permutation of the factors
composed with an involution twist in any subset of slots.  H is its index-2
subgroup of elements twisting an even number of slots.  Conjugacy classes
of G are labeled by signed cycle types: the cycle lengths of the permutation,
each tagged with the parity of the twists met along the cycle.

Group tokens used throughout the package: ``"G"`` (full group), ``"H"``
(even-twist subgroup), ``"Sn"`` (permutations only).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

ENUMERATION_GUARD = 8

GROUPS = ("G", "H")


class TooLarge(ValueError):
    """Raised when an explicit enumeration would exceed its size guard."""


@dataclass(frozen=True, slots=True)
class GroupElement:
    """An element (perm, twist) of (Z/2)^n semidirect S_n.

    ``perm`` maps slot m to slot perm[m] (0-based); ``twist[m] = 1`` means the
    involution is applied in slot m before permuting.  The product law,
    derived from the action on tuples, is

        (a * b).twist[j] = b.twist[j] XOR a.twist[b.perm[j]].
    """

    perm: tuple[int, ...]
    twist: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.perm!r}")
        if len(self.twist) != n or any(t not in (0, 1) for t in self.twist):
            raise ValueError(f"twist must be a 0/1 vector of length {n}")

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.n != other.n:
            raise ValueError("mismatched degrees")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.n))
        twist = tuple(other.twist[j] ^ self.twist[other.perm[j]]
                      for j in range(self.n))
        return GroupElement(perm, twist)

    def inverse(self) -> "GroupElement":
        inv = [0] * self.n
        for m, im in enumerate(self.perm):
            inv[im] = m
        return GroupElement(tuple(inv), tuple(self.twist[inv[j]] for j in range(self.n)))

    def twist_parity(self) -> int:
        """Total twist count mod 2; the homomorphism to Z/2 with kernel H."""
        return sum(self.twist) % 2

    def in_h(self) -> bool:
        return self.twist_parity() == 0

    def act(self, x: tuple) -> tuple:
        """Apply to a labeled tuple whose entries are (symbol, bit) pairs;
        the twist toggles the bit, then slots are permuted."""
        if len(x) != self.n:
            raise ValueError("tuple length mismatch")
        out = [None] * self.n
        for m in range(self.n):
            sym, bit = x[m]
            out[self.perm[m]] = (sym, bit ^ self.twist[m])
        return tuple(out)

    def __repr__(self):
        return f"GroupElement(perm={self.perm!r}, twist={self.twist!r})"


def identity(n: int) -> GroupElement:
    return GroupElement(tuple(range(n)), (0,) * n)


def transposition(n: int, i: int, j: int) -> GroupElement:
    """Swap of slots i and j (0-based)."""
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return GroupElement(tuple(perm), (0,) * n)


def slot_twist(n: int, slots: tuple[int, ...]) -> GroupElement:
    """Pure twist in the given 0-based slots, no permutation."""
    twist = [0] * n
    for s in slots:
        twist[s] = 1
    return GroupElement(tuple(range(n)), tuple(twist))


@dataclass(frozen=True, slots=True)
class SignedCycleType:
    """Multiset of (cycle length, twist parity), canonically sorted.

    Elements of G are conjugate exactly when their signed cycle types agree,
    and the type determines membership in H (even number of parity-1 cycles).
    """

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if any(length < 1 or parity not in (0, 1) for length, parity in self.parts):
            raise ValueError(f"bad parts {self.parts!r}")
        object.__setattr__(self, "parts", _canonical(self.parts))

    @property
    def n(self) -> int:
        return sum(length for length, _ in self.parts)

    def twisted_cycles(self) -> int:
        return sum(parity for _, parity in self.parts)

    def in_h(self) -> bool:
        return self.twisted_cycles() % 2 == 0

    def __repr__(self):
        body = ", ".join(f"{length}{'~' if parity else ''}"
                         for length, parity in self.parts)
        return f"SignedCycleType({body})"


def _canonical(parts):
    return tuple(sorted(parts, key=lambda lt: (-lt[0], lt[1])))


def signed_cycle_type(g: GroupElement) -> SignedCycleType:
    """Cycle lengths of the permutation, each tagged with the XOR of the
    twists over the slots of that cycle."""
    seen = [False] * g.n
    parts = []
    for start in range(g.n):
        if seen[start]:
            continue
        length, parity, m = 0, 0, start
        while not seen[m]:
            seen[m] = True
            parity ^= g.twist[m]
            length += 1
            m = g.perm[m]
        parts.append((length, parity))
    return SignedCycleType(tuple(parts))


def enumerate_group(n: int, which: str) -> list[GroupElement]:
    """All elements of G or H, in a fixed deterministic order.

    Guarded at n <= 8: element counts grow like 2^n * n!.  Use
    :func:`classes` for anything size-related beyond the guard.
    """
    if which not in GROUPS:
        raise ValueError(f"which must be one of {GROUPS}, got {which!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ENUMERATION_GUARD:
        raise TooLarge(f"enumeration is guarded at n <= {ENUMERATION_GUARD}")
    out = []
    for perm in itertools.permutations(range(n)):
        for twist in itertools.product((0, 1), repeat=n):
            if which == "H" and sum(twist) % 2:
                continue
            out.append(GroupElement(perm, twist))
    return out


def group_order(n: int, which: str) -> int:
    if which == "G":
        return 2 ** n * math.factorial(n)
    if which == "H":
        return 2 ** (n - 1) * math.factorial(n)
    if which == "Sn":
        return math.factorial(n)
    raise ValueError(f"unknown group token {which!r}")


def class_size(ct: SignedCycleType) -> int:
    """Number of elements of G with the given signed cycle type.

    With a_l^t cycles of length l and parity t, the centralizer in G has
    order prod_l (2l)^{a_l^0 + a_l^1} * a_l^0! * a_l^1!, which gives

        n! * prod_l 2^{(l-1)(a_l^0 + a_l^1)} / prod_l l^{a_l^0+a_l^1} a_l^0! a_l^1!
    """
    n = ct.n
    counts: dict[tuple[int, int], int] = {}
    for part in ct.parts:
        counts[part] = counts.get(part, 0) + 1
    num = math.factorial(n)
    den = 1
    for (length, _parity), mult in counts.items():
        num *= 2 ** ((length - 1) * mult)
        den *= length ** mult * math.factorial(mult)
    size, rem = divmod(num, den)
    assert rem == 0
    return size


def _cycle_count_vectors(n: int):
    """All (c_1, ..., c_n) with sum l*c_l = n; c_l counts cycles of length l."""
    def rec(length, remaining, acc):
        if length > n:
            if remaining == 0:
                yield tuple(acc)
            return
        for c in range(remaining // length, -1, -1):
            yield from rec(length + 1, remaining - length * c, acc + [c])

    yield from rec(1, n, [])


def classes(n: int, which: str) -> list[tuple[SignedCycleType, int]]:
    """Census of signed cycle types with their element counts.

    For H only the types with an even number of twisted cycles are kept;
    since H is normal in G, every type lies entirely inside or outside H and
    the kept sizes add up to the order of H.  This is the scalable path:
    no enumeration guard.
    """
    if which not in GROUPS:
        raise ValueError(f"which must be one of {GROUPS}, got {which!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for cycle_counts in _cycle_count_vectors(n):
        # split the c_l cycles of each length into twisted/untwisted
        splits = [range(c + 1) for c in cycle_counts]
        for twisted in itertools.product(*splits):
            parts = []
            for length_minus_1, (c, t) in enumerate(zip(cycle_counts, twisted)):
                length = length_minus_1 + 1
                parts += [(length, 0)] * (c - t) + [(length, 1)] * t
            ct = SignedCycleType(tuple(parts))
            if which == "H" and not ct.in_h():
                continue
            out.append((ct, class_size(ct)))
    out.sort(key=lambda pair: pair[0].parts)
    return out
