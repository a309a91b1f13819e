"""Shared strategies and helpers for the test suite."""

import random

from hypothesis import strategies as st

from hodgekit.bigraded import EquivHodgeTable, HodgeTable


def _dimension_for(support):
    # smallest dimension satisfying the p, q <= 2*dim storage bound
    top = max((max(p, q) for p, q in support), default=0)
    return (top + 1) // 2


@st.composite
def hodge_tables(draw, even_only=True, max_degree=4, max_dim=5, max_entries=4):
    """Small random tables with exact integer entries."""
    degrees = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree))
    if even_only:
        degrees = degrees.filter(lambda pq: (pq[0] + pq[1]) % 2 == 0)
    entries = draw(st.dictionaries(degrees, st.integers(1, max_dim),
                                   max_size=max_entries))
    return HodgeTable(entries, _dimension_for(entries))


@st.composite
def equiv_tables(draw, max_degree=3, max_dim=3, max_entries=3):
    """Small random involution-split tables, even degrees only."""
    degrees = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree))
    degrees = degrees.filter(lambda pq: (pq[0] + pq[1]) % 2 == 0)
    pairs = st.tuples(st.integers(0, max_dim), st.integers(0, max_dim)).filter(
        lambda dd: dd[0] + dd[1] > 0
    )
    entries = draw(st.dictionaries(degrees, pairs, min_size=1,
                                   max_size=max_entries))
    return EquivHodgeTable(entries, _dimension_for(entries))


def seeded_equiv_tables(count, seed=20240801, max_degree=3, max_dim=3):
    """Deterministic list of small equivariant tables for oracle runs."""
    rng = random.Random(seed)
    tables = []
    while len(tables) < count:
        entries = {}
        for _ in range(rng.randint(1, 4)):
            p = rng.randint(0, max_degree)
            q_choices = [q for q in range(max_degree + 1) if (p + q) % 2 == 0]
            q = rng.choice(q_choices)
            d_plus, d_minus = rng.randint(0, max_dim), rng.randint(0, max_dim)
            if d_plus + d_minus == 0:
                d_plus = 1
            entries[(p, q)] = (d_plus, d_minus)
        tables.append(EquivHodgeTable(entries, _dimension_for(entries)))
    return tables
