"""Incidence layer: which arrangement rays lie on which hyperplanes, faces as
chains, flats as ensembles, and the chamber adjacency graph.

Everything here is exact integer/rational combinatorics; the geometric
counterparts live in the oracle subpackage and are only used to cross-check.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .chambers import Chamber, all_chambers, extreme_rays, ray_from_index, ray_index
from .poset import (
    INF,
    Chain,
    Ensemble,
    PosetPoint,
    all_points,
    enumerate_ensembles,
    is_chain,
    sort_key,
)

WeightIndex = tuple[int, int]


def weight_indices(n: int) -> list[WeightIndex]:
    """All boxes (i, j) with 1 <= i <= j <= n, row-major."""
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def weight_functional(n: int, idx: WeightIndex) -> tuple[int, ...]:
    """Coefficients of x_i + x_j (the diagonal gives 2 x_i, same zero set)."""
    i, j = idx
    if not 1 <= i <= j <= n:
        raise ValueError(f"bad weight index {idx} for rank {n}")
    coeffs = [0] * n
    coeffs[i - 1] += 1
    coeffs[j - 1] += 1
    return tuple(coeffs)


def evaluate_weight(idx: WeightIndex, x: Sequence) -> Fraction:
    i, j = idx
    return Fraction(x[i - 1]) + Fraction(x[j - 1])


def hyperplane_rays(n: int, idx: WeightIndex) -> frozenset[PosetPoint]:
    """Rays lying on the hyperplane of box (i, j): the points below
    (i-1, n-j) together with those above (i, n-j+1)."""
    i, j = idx
    if not 1 <= i <= j <= n:
        raise ValueError(f"bad weight index {idx} for rank {n}")
    anchor = PosetPoint(i - 1, n - j)
    upper = anchor.shift(1, 1)
    return frozenset(
        p for p in all_points(n) if p <= anchor or upper <= p
    )


def rays_of(n: int, region: Iterable[WeightIndex]) -> frozenset[PosetPoint]:
    """Rays on every hyperplane of the region; the empty region gives the
    whole chamber cone, hence every ray."""
    rays = frozenset(all_points(n))
    for idx in region:
        rays &= hyperplane_rays(n, idx)
    return rays


@dataclass(frozen=True)
class Face:
    """A face of the decomposition, recorded by its chain (one ray per level).

    The empty chain is the origin; a k-chain spans a k-dimensional cone.
    """

    n: int
    chain: Chain

    @property
    def dim(self) -> int:
        return len(self.chain)

    def rays(self) -> tuple[tuple[int, ...], ...]:
        return tuple(ray_from_index(self.n, p) for p in self.chain)


def face_from_chain(n: int, points: Iterable[PosetPoint]) -> Face:
    pts = sorted(set(points), key=sort_key)
    for p in pts:
        if p.level < 1 or p.level > n:
            raise ValueError(f"{p} is not in E*_{n}")
    if not is_chain(pts):
        raise ValueError(f"{pts} is not a chain")
    return Face(n, tuple(pts))


def _nonneg_combination(gens, target):
    """Exact coefficients t >= 0 with sum t_c * gens[c] = target, else None."""
    m = len(target)
    k = len(gens)
    rows = [
        [Fraction(gens[c][r]) for c in range(k)] + [Fraction(target[r])]
        for r in range(m)
    ]
    pivots = []
    lead = 0
    for col in range(k):
        p = next((i for i in range(lead, m) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[lead], rows[p] = rows[p], rows[lead]
        pv = rows[lead][col]
        rows[lead] = [v / pv for v in rows[lead]]
        for i in range(m):
            if i != lead and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
    t = [Fraction(0)] * k
    for row_idx, col in enumerate(pivots):
        t[col] = rows[row_idx][k]
    if any(v < 0 for v in t):
        return None
    for r in range(m):
        if sum(t[c] * gens[c][r] for c in range(k)) != target[r]:
            return None
    return t


def rays_of_face(n: int, chain: Iterable[PosetPoint]) -> tuple[PosetPoint, ...]:
    """Arrangement rays inside the cone spanned by a chain, derived from the
    ray vectors alone.  The chain vectors sit at distinct levels so the
    coefficients of any representation are unique; membership is consistency
    plus nonnegativity, no search involved."""
    face = face_from_chain(n, chain)
    gens = face.rays()
    out = []
    for q in all_points(n):
        if _nonneg_combination(gens, ray_from_index(n, q)) is not None:
            out.append(q)
    return tuple(out)


@dataclass(frozen=True)
class Flat:
    """A flat: intersection of weight hyperplanes with the chamber cone,
    recorded by its ensemble of rays and a generating hyperplane set."""

    n: int
    ensemble: Ensemble
    hyperplanes: tuple[WeightIndex, ...]

    @property
    def dim(self) -> int:
        return self.ensemble.rank

    def rays(self) -> tuple[PosetPoint, ...]:
        return tuple(sorted(self.ensemble.realized(), key=sort_key))


def flat_from_two_point_data(
    n: int, B: PosetPoint, A: Union[PosetPoint, object]
) -> tuple[WeightIndex, ...]:
    """Hyperplanes whose common rays are exactly (0, B] u [A, inf) in E*_n.

    With A = INF the picture is a single down-set and B must sit below the
    top level; otherwise A must leave a genuine gap above B.  Returns one
    hyperplane when the two generators collapse, two otherwise.
    """
    x, y = B.a, B.b
    if B.level > n:
        raise ValueError(f"{B} is not in E_{n}")
    if A is INF:
        if B.level >= n:
            raise ValueError(f"down-set top {B} must have level < {n}")
        gens = {(x + 1, x + 1), (n - y, n - y)}
        return tuple(sorted(gens))
    if not isinstance(A, PosetPoint) or A.level > n:
        raise ValueError(f"{A} is not in E_{n}")
    if not B.shift(1, 1) <= A:
        raise ValueError(f"no gap between {B} and {A}")
    u, w = A.a, A.b
    gens = {(x + 1, n - w + 1), (u, n - y)}
    return tuple(sorted(gens))


def flat_from_ensemble(ensemble: Ensemble) -> Flat:
    """Cut out the flat whose ray set is the ensemble's realized set."""
    n = ensemble.n
    hyps: set[WeightIndex] = set()
    ivs = ensemble.intervals
    for iv, nxt in zip(ivs, ivs[1:]):
        hyps.update(flat_from_two_point_data(n, iv.hi, nxt.lo))
    if ivs[-1].hi is not INF:
        hyps.update(flat_from_two_point_data(n, ivs[-1].hi, INF))
    return Flat(n, ensemble, tuple(sorted(hyps)))


def flat_from_rays(n: int, points: Iterable[PosetPoint]) -> Flat:
    return flat_from_ensemble(Ensemble.from_points(n, points))


def flats_of(n: int, k: int):
    """All k-dimensional flats, in ensemble enumeration order."""
    for ensemble in enumerate_ensembles(n, k):
        yield flat_from_ensemble(ensemble)


def chamber_chain(chamber: Chamber) -> Chain:
    """The maximal chain indexing a chamber's extreme rays, one per level."""
    return tuple(ray_index(r) for r in extreme_rays(chamber))


def chamber_adjacency_graph(
    n: int, *, threads: int = 1
) -> tuple[list[Chamber], list[tuple[int, int]]]:
    """Chambers in characteristic-vector order plus sorted edge index pairs.

    Two chambers are adjacent when their chains share all but one element,
    i.e. they meet in a common wall.  Walls are collected in buckets; the
    thread count only partitions the bucket-building pass and cannot change
    the output.
    """
    if threads < 1:
        raise ValueError("threads must be at least 1")
    chambers = all_chambers(n)
    chains = [frozenset(chamber_chain(c)) for c in chambers]

    def build(bounds: tuple[int, int]) -> dict[frozenset, list[int]]:
        local: dict[frozenset, list[int]] = {}
        for idx in range(*bounds):
            for p in chains[idx]:
                local.setdefault(chains[idx] - {p}, []).append(idx)
        return local

    if threads == 1 or len(chambers) < 2 * threads:
        buckets = [build((0, len(chambers)))]
    else:
        step = -(-len(chambers) // threads)
        ranges = [
            (lo, min(lo + step, len(chambers)))
            for lo in range(0, len(chambers), step)
        ]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            buckets = list(pool.map(build, ranges))
    walls: dict[frozenset, list[int]] = {}
    for bucket in buckets:
        for wall, members in bucket.items():
            walls.setdefault(wall, []).extend(members)
    edges = set()
    for members in walls.values():
        for a, b in itertools.combinations(sorted(members), 2):
            edges.add((a, b))
    return chambers, sorted(edges)


def adjacency_dot(n: int, *, threads: int = 1) -> str:
    """Graphviz source for the chamber adjacency graph; stable output."""
    chambers, edges = chamber_adjacency_graph(n, threads=threads)
    lines = ["graph chambers {"]
    for i, c in enumerate(chambers):
        lines.append(f'  c{i} [label="{c.char_string()}"];')
    for a, b in edges:
        lines.append(f"  c{a} -- c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
