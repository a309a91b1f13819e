"""Exact arithmetic on bigraded dimension tables (Hodge diamonds).

A :class:`HodgeTable` records the dimensions h^{p,q} of the bigraded pieces
of the cohomology of a compact complex space; an :class:`EquivHodgeTable`
additionally splits every piece into the +1/-1 eigenspaces of an involution.
All dimensions are exact (arbitrary-precision) nonnegative integers, zero
entries are never stored, and every operation returns a new table: values
are immutable after construction.

Supported operations: direct sum, Kunneth tensor product, Tate twist
(diagonal degree shift), Betti numbers and Euler characteristic.
"""

from __future__ import annotations

import json
from typing import Iterator, Mapping


class OddCohomologyUnsupported(ValueError):
    """Raised when an operation meets an entry of odd total degree.

    Tensor products and trace computations here assume even-degree classes
    only (no Koszul signs); odd entries are rejected rather than dropped.
    """


class NegativeIndex(ValueError):
    """Raised when a degree shift would move an entry below (0, 0)."""


def _validated_entries(entries, dimension, *, pair_values):
    clean = {}
    for key, value in entries.items():
        p, q = key
        if not (isinstance(p, int) and isinstance(q, int)) or p < 0 or q < 0:
            raise ValueError(f"invalid bidegree {key!r}")
        if p > 2 * dimension or q > 2 * dimension:
            raise ValueError(
                f"entry at {key!r} exceeds the weight bound for dimension {dimension}"
            )
        if pair_values:
            d_plus, d_minus = value
            if d_plus < 0 or d_minus < 0:
                raise ValueError(f"negative dimension at {key!r}")
            if d_plus or d_minus:
                clean[(p, q)] = (d_plus, d_minus)
        else:
            if value < 0:
                raise ValueError(f"negative dimension at {key!r}")
            if value:
                clean[(p, q)] = value
    return clean


class HodgeTable:
    """Finitely supported map (p, q) -> dimension, plus the complex dimension.

    ``table[p, q]`` returns 0 for absent entries.  Equality compares supports
    and values only.  Tables flagged ``geometric`` are checked for conjugation
    symmetry h^{p,q} = h^{q,p} at construction.
    """

    __slots__ = ("_entries", "dimension", "geometric")

    def __init__(self, entries: Mapping[tuple[int, int], int], dimension: int,
                 geometric: bool = False):
        if dimension < 0:
            raise ValueError("dimension must be nonnegative")
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "geometric", geometric)
        object.__setattr__(
            self, "_entries", _validated_entries(entries, dimension, pair_values=False)
        )
        if geometric and not self.is_symmetric():
            raise ValueError("geometric table must satisfy h^{p,q} = h^{q,p}")

    def __setattr__(self, name, value):
        raise AttributeError("HodgeTable is immutable")

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """Entries as a sorted list of ((p, q), dim) pairs."""
        return sorted(self._entries.items())

    def support(self) -> list[tuple[int, int]]:
        return sorted(self._entries)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.support())

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgeTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        return f"HodgeTable({dict(self.items())!r}, dimension={self.dimension})"

    def total_dim(self) -> int:
        """Sum of all stored dimensions (dimension of total cohomology)."""
        return sum(self._entries.values())

    def betti(self, k: int) -> int:
        """b_k: sum of entries of total degree k."""
        return sum(d for (p, q), d in self._entries.items() if p + q == k)

    def euler(self) -> int:
        """Topological Euler characteristic, sum of (-1)^k b_k."""
        return sum((-1) ** (p + q) * d for (p, q), d in self._entries.items())

    def has_odd_entries(self) -> bool:
        return any((p + q) % 2 for p, q in self._entries)

    def is_symmetric(self) -> bool:
        """Conjugation symmetry: h^{p,q} = h^{q,p}."""
        return all(self[q, p] == d for (p, q), d in self._entries.items())

    def satisfies_duality(self) -> bool:
        """Poincare duality against the declared dimension:
        h^{p,q} = h^{n-p,n-q} with n the complex dimension."""
        n = self.dimension
        return all(self[n - p, n - q] == d for (p, q), d in self._entries.items())

    def shift_by(self, k: int) -> "HodgeTable":
        return shift_by(self, k)

    def __add__(self, other: "HodgeTable") -> "HodgeTable":
        return direct_sum(self, other)

    def __mul__(self, other: "HodgeTable") -> "HodgeTable":
        return tensor(self, other)


class EquivHodgeTable:
    """Bigraded table split by an involution: (p, q) -> (d_plus, d_minus).

    Only even total degrees are allowed; summing the split recovers a plain
    :class:`HodgeTable` (see :meth:`forget`).
    """

    __slots__ = ("_entries", "dimension")

    def __init__(self, entries: Mapping[tuple[int, int], tuple[int, int]],
                 dimension: int):
        if dimension < 0:
            raise ValueError("dimension must be nonnegative")
        for p, q in entries:
            if (p + q) % 2:
                raise OddCohomologyUnsupported(
                    f"odd total degree at ({p}, {q}) is not supported"
                )
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(
            self, "_entries", _validated_entries(entries, dimension, pair_values=True)
        )

    def __setattr__(self, name, value):
        raise AttributeError("EquivHodgeTable is immutable")

    def __getitem__(self, key: tuple[int, int]) -> tuple[int, int]:
        return self._entries.get(key, (0, 0))

    def items(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return sorted(self._entries.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquivHodgeTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        return f"EquivHodgeTable({dict(self.items())!r}, dimension={self.dimension})"

    def total_dim(self) -> int:
        return sum(dp + dm for dp, dm in self._entries.values())

    def forget(self) -> HodgeTable:
        """Drop the eigenspace split: (p, q) -> d_plus + d_minus."""
        return HodgeTable(
            {pq: dp + dm for pq, (dp, dm) in self._entries.items()}, self.dimension
        )

    def plus_part(self) -> HodgeTable:
        """Table of the +1 eigenspaces (the quotient's cohomology)."""
        return HodgeTable(
            {pq: dp for pq, (dp, _) in self._entries.items()}, self.dimension
        )

    def minus_part(self) -> HodgeTable:
        return HodgeTable(
            {pq: dm for pq, (_, dm) in self._entries.items()}, self.dimension
        )

    @classmethod
    def trivial_split(cls, table: HodgeTable) -> "EquivHodgeTable":
        """Lift a plain table: everything in the +1 eigenspace."""
        return cls({pq: (d, 0) for pq, d in table.items()}, table.dimension)


def direct_sum(a: HodgeTable, b: HodgeTable) -> HodgeTable:
    """Entrywise sum; the dimension is the maximum of the two."""
    entries = dict(a.items())
    for pq, d in b.items():
        entries[pq] = entries.get(pq, 0) + d
    return HodgeTable(entries, max(a.dimension, b.dimension))


def tensor(a: HodgeTable, b: HodgeTable) -> HodgeTable:
    """Kunneth product: result(p,q) = sum over s+u=p, t+v=q of a(s,t)*b(u,v).

    Both factors must have even-degree support only, so no Koszul signs arise.
    """
    for t in (a, b):
        if t.has_odd_entries():
            raise OddCohomologyUnsupported("tensor requires even-degree entries")
    entries: dict[tuple[int, int], int] = {}
    for (s, t), d in a.items():
        for (u, v), e in b.items():
            key = (s + u, t + v)
            entries[key] = entries.get(key, 0) + d * e
    return HodgeTable(entries, a.dimension + b.dimension)


def shift_by(a: HodgeTable, k: int) -> HodgeTable:
    """Move every entry from (p, q) to (p+k, q+k); k may be negative.

    The declared dimension moves by k as well, keeping the weight bound
    aligned through assemblies of pieces of different dimensions.
    """
    if k < 0 and any(p + k < 0 or q + k < 0 for p, q in a.support()):
        raise NegativeIndex(f"shift by {k} moves an entry below (0, 0)")
    entries = {(p + k, q + k): d for (p, q), d in a.items()}
    return HodgeTable(entries, max(a.dimension + k, 0))


def tate_twist(a: HodgeTable, k: int) -> HodgeTable:
    """Twist by k: the stored entry at (p, q) is relabeled (p-k, q-k),
    i.e. result(p, q) = a(p+k, q+k)."""
    return shift_by(a, -k)


def betti(a: HodgeTable, k: int) -> int:
    return a.betti(k)


def euler(a: HodgeTable) -> int:
    return a.euler()


# ---------------------------------------------------------------------------
# Built-in surfaces and the surface-spec file format.

def k3_enriques() -> EquivHodgeTable:
    """K3 surface with a fixed-point-free involution (an Enriques quotient).

    The split records the eigenspaces of the induced involution on
    cohomology: the +1 part is the Enriques diamond (1, 10, 1), the 2-forms
    and their conjugates are anti-invariant, and h^{1,1} splits 10 + 10.
    """
    return EquivHodgeTable(
        {
            (0, 0): (1, 0),
            (2, 0): (0, 1),
            (1, 1): (10, 10),
            (0, 2): (0, 1),
            (2, 2): (1, 0),
        },
        dimension=2,
    )


def enriques() -> HodgeTable:
    """Enriques surface: diamond 1, 10, 1 in even degrees."""
    return HodgeTable({(0, 0): 1, (1, 1): 10, (2, 2): 1}, dimension=2,
                      geometric=True)


def k3() -> HodgeTable:
    """Plain K3 diamond 1, (1, 20, 1), 1."""
    return k3_enriques().forget()


def point() -> HodgeTable:
    """The unit for the tensor product."""
    return HodgeTable({(0, 0): 1}, dimension=0)


#: Preset registry for the CLI and the surface-spec loader.  Plain diamonds
#: are stored trivially split so every preset supports quotient operations.
PRESETS = {
    "k3_enriques": k3_enriques,
    "enriques": lambda: EquivHodgeTable.trivial_split(enriques()),
    "k3": lambda: EquivHodgeTable.trivial_split(k3()),
}


def preset(name: str) -> EquivHodgeTable:
    try:
        factory = PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}"
        ) from None
    return factory()


def parse_surface_spec(data) -> tuple[str, EquivHodgeTable]:
    """Parse a surface-spec mapping into (name, table).

    Expected shape::

        {"name": str, "dimension": int, "hodge": [[p, q, d_plus, d_minus], ...]}

    Raises ValueError on malformed input and OddCohomologyUnsupported on
    entries of odd total degree.
    """
    if not isinstance(data, dict):
        raise ValueError("surface spec must be a JSON object")
    name = data.get("name")
    dimension = data.get("dimension")
    rows = data.get("hodge")
    if not isinstance(name, str):
        raise ValueError("surface spec: 'name' must be a string")
    if not isinstance(dimension, int) or isinstance(dimension, bool):
        raise ValueError("surface spec: 'dimension' must be an integer")
    if not isinstance(rows, list):
        raise ValueError("surface spec: 'hodge' must be a list of rows")
    entries: dict[tuple[int, int], tuple[int, int]] = {}
    for row in rows:
        if (not isinstance(row, list) or len(row) != 4
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in row)):
            raise ValueError(f"surface spec: bad hodge row {row!r}")
        p, q, d_plus, d_minus = row
        if (p, q) in entries:
            raise ValueError(f"surface spec: duplicate entry at ({p}, {q})")
        entries[(p, q)] = (d_plus, d_minus)
    return name, EquivHodgeTable(entries, dimension)


def load_surface_spec(path) -> tuple[str, EquivHodgeTable]:
    """Read and parse a UTF-8 JSON surface-spec file."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"surface spec {path}: invalid JSON ({exc})") from exc
    return parse_surface_spec(data)


def format_diamond(table: HodgeTable) -> str:
    """Render a table as a centered diamond, one total degree per row."""
    axis = table.dimension
    for p, q in table.support():
        axis = max(axis, p, q)
    cells = {}
    width = 1
    for k in range(2 * axis + 1):
        row = []
        for p in range(min(k, axis), max(0, k - axis) - 1, -1):
            entry = str(table[p, k - p])
            width = max(width, len(entry))
            row.append(entry)
        cells[k] = row
    width += 1 if width % 2 == 0 else 0
    line_len = (axis + 1) * (width + 1)
    lines = []
    for k in range(2 * axis + 1):
        lines.append(" ".join(c.center(width) for c in cells[k]).center(line_len).rstrip())
    return "\n".join(lines)
