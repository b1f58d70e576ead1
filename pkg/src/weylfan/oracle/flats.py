"""Geometric flat enumeration.

A flat is the intersection of some weight hyperplanes with the chamber cone.
In the gap coordinates r_l = x_l - x_{l+1} >= 0 and z = x_n, every weight is
2z + c.r with a nonnegative integer vector c, so once one generator is used
to eliminate z a flat becomes {r >= 0, (c_w - c_w0).r = 0} and all questions
reduce to exact LPs over that cone.

Two generator subsets cut the same flat exactly when they have the same
tight closure (the full set of weights vanishing on the intersection), so
closures are the deduplication key; the search grows closed sets one
hyperplane at a time, which reaches every flat because closure is monotone.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from ..incidence import WeightIndex, weight_indices
from .cells import CapExceeded
from .linalg import dot, rank_of
from .simplex import cone_positive


@dataclass(frozen=True)
class GeometricFlat:
    n: int
    tight: frozenset
    dim: int


@dataclass
class FlatEnumeration:
    n: int
    counts: list[int]
    flats: list[GeometricFlat]
    stats: dict = field(default_factory=dict)


def _cvector(n: int, idx: WeightIndex) -> tuple[int, ...]:
    i, j = idx
    return tuple(
        (1 if level >= i else 0) + (1 if level >= j else 0)
        for level in range(1, n)
    )


def _difference_rows(cvecs, T):
    w0 = min(T)
    base = cvecs[w0]
    return [
        tuple(a - b for a, b in zip(cvecs[w], base)) for w in sorted(T)
    ], base


def _closure(n, T, cvecs, cache, stats):
    """All weights vanishing on the flat cut by T (T nonempty)."""
    if T in cache:
        return cache[T]
    dim = n - 1
    rows, base = _difference_rows(cvecs, T)
    base_rank = rank_of(rows)
    bank: list[tuple[Fraction, ...]] = []
    tight = set()
    for u in weight_indices(n):
        if u in T:
            tight.add(u)
            continue
        f = tuple(a - b for a, b in zip(cvecs[u], base))
        if all(v == 0 for v in f):
            tight.add(u)
            continue
        if any(dot(f, r) != 0 for r in bank):
            continue
        if rank_of(rows + [f]) == base_rank:
            tight.add(u)  # f is a combination of the cutting rows
            continue
        point = cone_positive(rows, f, dim, stats=stats)
        if point is None:
            point = cone_positive(rows, tuple(-v for v in f), dim, stats=stats)
        if point is None:
            tight.add(u)
        else:
            bank.append(point)
    result = frozenset(tight)
    cache[T] = result
    return result


def _flat_dim(n, T, cvecs, stats) -> int:
    """Dimension via implicitly tight coordinates: r_l is tight iff it cannot
    be made positive on the cone."""
    if not T:
        return n
    dim = n - 1
    rows, _ = _difference_rows(cvecs, T)
    bank: list[tuple[Fraction, ...]] = []
    tight_rows = []
    base_rank = rank_of(rows)
    for level in range(dim):
        unit = tuple(Fraction(1 if c == level else 0) for c in range(dim))
        if any(r[level] != 0 for r in bank):
            continue
        if rank_of(rows + [unit]) == base_rank:
            tight_rows.append(unit)
            continue
        point = cone_positive(rows, unit, dim, stats=stats)
        if point is None:
            tight_rows.append(unit)
        else:
            bank.append(point)
    return dim - rank_of(rows + tight_rows)


def enumerate_flats_geometric(n: int, *, cap: int = 6) -> FlatEnumeration:
    """Every flat, deduplicated by tight closure and tallied by dimension."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > cap:
        subsets = 2 ** (n * (n + 1) // 2)
        raise CapExceeded(
            f"flat enumeration at rank {n} ranges over 2^(n(n+1)/2) = "
            f"{subsets} generator subsets; the configured cap is {cap}"
        )
    stats: dict = {}
    cvecs = {idx: _cvector(n, idx) for idx in weight_indices(n)}
    cache: dict = {}
    whole = frozenset()
    dims = {whole: n}
    queue = deque([whole])
    while queue:
        current = queue.popleft()
        for u in weight_indices(n):
            if u in current:
                continue
            closed = _closure(n, current | {u}, cvecs, cache, stats)
            if closed not in dims:
                dims[closed] = _flat_dim(n, closed, cvecs, stats)
                queue.append(closed)
    flats = [
        GeometricFlat(n, tight, d)
        for tight, d in sorted(
            dims.items(), key=lambda kv: (kv[1], len(kv[0]), sorted(kv[0]))
        )
    ]
    counts = [0] * (n + 1)
    for flat in flats:
        counts[flat.dim] += 1
    stats["flats"] = len(flats)
    stats["closures"] = len(cache)
    return FlatEnumeration(n, counts, flats, stats)
