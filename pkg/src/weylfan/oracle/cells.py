"""Cell enumeration by exact sign-vector search.

Cells are the relatively open strata of the chamber cone under all weight
hyperplanes: one sign in {-,0,+} per weight box, one in {0,+} per
consecutive-difference facet.  The search walks sign prefixes depth first
and prunes with a strict-feasibility LP; a parent's witness settles the
child that shares its sign without any LP call.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..chambers import classify_point
from ..incidence import weight_functional, weight_indices
from .linalg import dot, rank_of
from .simplex import strict_feasible

N1_NOTE = (
    "rank 1 note: the chamber cone has no facet constraints, so it is the "
    "whole line and the single hyperplane x_1 = 0 cuts it into {x<0}, {0}, "
    "{x>0}; the counts by dimension are [1, 2].  The printed polynomial for "
    "this row reads 1 + t (one 1-cell), while the subset model (2^1 = 2 "
    "chambers) and the two one-point chains both give 2.  Golden values key "
    "to [1, 2]; the printed row is flagged in the bundled errata data."
)


class CapExceeded(RuntimeError):
    """Raised instead of silently attempting an oversized search."""


@dataclass(frozen=True)
class SignCondition:
    """Sign data of one stratum: weight boxes row-major, then facet slots."""

    n: int
    weight_signs: tuple[int, ...]
    root_signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weight_signs) != self.n * (self.n + 1) // 2:
            raise ValueError("wrong number of weight signs")
        if len(self.root_signs) != max(self.n - 1, 0):
            raise ValueError("wrong number of root signs")
        if any(s not in (-1, 0, 1) for s in self.weight_signs):
            raise ValueError("weight signs must be -1, 0 or 1")
        if any(s not in (0, 1) for s in self.root_signs):
            raise ValueError("root signs must be 0 or 1")


@dataclass(frozen=True)
class Cell:
    condition: SignCondition
    dim: int
    witness: tuple[Fraction, ...]


@dataclass
class CellEnumeration:
    n: int
    counts: list[int]
    cells: list[Cell]
    notes: tuple[str, ...]
    stats: dict = field(default_factory=dict)


def _root_rows(n: int) -> list[tuple[int, ...]]:
    rows = []
    for i in range(n - 1):
        row = [0] * n
        row[i] = 1
        row[i + 1] = -1
        rows.append(tuple(row))
    return rows


def _split_rows(cut_rows, facet_rows, cut_signs, facet_signs):
    eq, strict = [], []
    for row, s in zip(cut_rows, cut_signs):
        if s == 0:
            eq.append(row)
        elif s > 0:
            strict.append(row)
        else:
            strict.append(tuple(-v for v in row))
    for row, s in zip(facet_rows, facet_signs):
        (eq if s == 0 else strict).append(row)
    return eq, strict


def cell_feasible(n: int, condition: SignCondition, *, stats=None):
    """Decide one sign condition; returns (feasible, witness-or-None)."""
    cut_rows = [weight_functional(n, idx) for idx in weight_indices(n)]
    eq, strict = _split_rows(
        cut_rows, _root_rows(n), condition.weight_signs, condition.root_signs
    )
    witness = strict_feasible(eq, strict, [], n, stats=stats)
    return witness is not None, witness


def _cell_dim(dim, cut_rows, facet_rows, ambient_eqs, cut_signs, facet_signs) -> int:
    tight = list(ambient_eqs)
    tight += [row for row, s in zip(cut_rows, cut_signs) if s == 0]
    tight += [row for row, s in zip(facet_rows, facet_signs) if s == 0]
    return dim - rank_of(tight)


def enumerate_generic_cells(
    dim: int,
    cut_rows: Sequence[Sequence],
    facet_rows: Sequence[Sequence],
    *,
    ambient_eqs: Sequence[Sequence] = (),
    threads: int = 1,
    stats: Optional[dict] = None,
):
    """All feasible sign vectors over arbitrary cuts and facets.

    Returns (cells, counts) where each cell is (cut_signs, facet_signs,
    cell_dim, witness), in depth-first order independent of thread count.
    """
    if stats is None:
        stats = {}
    n_cuts = len(cut_rows)
    n_slots = n_cuts + len(facet_rows)

    def slot_rows(signs):
        cut_signs = signs[:n_cuts]
        facet_signs = signs[n_cuts:]
        eq, strict = _split_rows(cut_rows, facet_rows, cut_signs, facet_signs)
        eq = list(ambient_eqs) + eq
        # unassigned facet slots still confine the point to the closed cone
        weak = list(facet_rows[len(facet_signs):])
        return eq, strict, weak

    def check(signs, inherited, st):
        # the inherited witness may already realize every assigned sign
        if inherited is not None:
            ok = True
            for pos, s in enumerate(signs):
                row = cut_rows[pos] if pos < n_cuts else facet_rows[pos - n_cuts]
                val = dot(row, inherited)
                want = (val > 0) - (val < 0)
                if want != s:
                    ok = False
                    break
            if ok:
                st["witness_hits"] = st.get("witness_hits", 0) + 1
                return inherited
        st["nodes"] = st.get("nodes", 0) + 1
        eq, strict, weak = slot_rows(signs)
        return strict_feasible(eq, strict, weak, dim, stats=st)

    def branches(pos):
        return (-1, 0, 1) if pos < n_cuts else (0, 1)

    out = []

    def walk(signs, witness, sink, st):
        if len(signs) == n_slots:
            cut_signs = tuple(signs[:n_cuts])
            facet_signs = tuple(signs[n_cuts:])
            d = _cell_dim(
                dim, cut_rows, facet_rows, ambient_eqs, cut_signs, facet_signs
            )
            sink.append((cut_signs, facet_signs, d, witness))
            return
        for s in branches(len(signs)):
            child = signs + [s]
            w = check(child, witness, st)
            if w is not None:
                walk(child, w, sink, st)

    if threads <= 1:
        walk([], None, out, stats)
    else:
        depth = min(2, n_slots)
        prefixes = []

        def seed(signs, witness):
            if len(signs) == depth:
                prefixes.append((signs, witness))
                return
            for s in branches(len(signs)):
                child = signs + [s]
                w = check(child, witness, stats)
                if w is not None:
                    seed(child, w)

        seed([], None)

        def run(prefix):
            signs, witness = prefix
            collector: list = []
            local: dict = {}
            walk(signs, witness, collector, local)
            return collector, local

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for chunk, local in pool.map(run, prefixes):
                out.extend(chunk)
                for key, value in local.items():
                    stats[key] = stats.get(key, 0) + value
    counts = [0] * (dim + 1)
    for _, _, d, _ in out:
        counts[d] += 1
    return out, counts


def enumerate_cells(n: int, *, cap: int = 4, threads: int = 1) -> CellEnumeration:
    """Every cell of the rank-n picture, tallied by dimension."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > cap:
        space = 3 ** (n * (n + 1) // 2) * 2 ** (n - 1)
        raise CapExceeded(
            f"cell enumeration at rank {n} walks a 3^(n(n+1)/2) * 2^(n-1) "
            f"= {space} sign space; the configured cap is {cap}"
        )
    stats: dict = {}
    cut_rows = [weight_functional(n, idx) for idx in weight_indices(n)]
    raw, counts = enumerate_generic_cells(
        n, cut_rows, _root_rows(n), threads=threads, stats=stats
    )
    cells = [
        Cell(SignCondition(n, cut_signs, facet_signs), d, witness)
        for cut_signs, facet_signs, d, witness in raw
    ]
    stats["cells"] = len(cells)
    notes = (N1_NOTE,) if n == 1 else ()
    return CellEnumeration(n, counts, cells, notes, stats)


def rays_geometric(n: int, *, cap: int = 4, threads: int = 1, cells=None):
    """The 1-dimensional cells as exactly normalized direction vectors.

    Every witness, scaled by its largest absolute coordinate, must land on a
    vector with coordinates in {-1, 0, 1}; anything else is an error.
    """
    if cells is None:
        cells = enumerate_cells(n, cap=cap, threads=threads)
    rays = []
    for cell in cells.cells:
        if cell.dim != 1:
            continue
        scale = max(abs(v) for v in cell.witness)
        vec = tuple(v / scale for v in cell.witness)
        if any(v not in (-1, 0, 1) for v in vec):
            raise AssertionError(f"1-cell witness {cell.witness} is not a lattice ray")
        rays.append(vec)
    return sorted(rays, reverse=True)


def adjacency_from_cells(cells: CellEnumeration):
    """Chamber adjacency read off the cells alone: two top cells are adjacent
    iff some codimension-1 cell lies in both closures.  Indices follow the
    characteristic-vector chamber order so the combinatorial graph can be
    compared directly."""
    n = cells.n
    top = [c for c in cells.cells if c.dim == n]
    walls = [c for c in cells.cells if c.dim == n - 1]

    def chamber_index(cell: Cell) -> int:
        chamber = classify_point(n, cell.witness)
        vec = chamber.char_vector  # type: ignore[union-attr]
        idx = 0
        for s in vec:
            idx = 2 * idx + (1 if s > 0 else 0)
        return idx

    def extends(chamber: Cell, wall: Cell) -> bool:
        for a, b in zip(chamber.condition.weight_signs, wall.condition.weight_signs):
            if b != 0 and a != b:
                return False
        for a, b in zip(chamber.condition.root_signs, wall.condition.root_signs):
            if b != 0 and a != b:
                return False
        return True

    index = {id(c): chamber_index(c) for c in top}
    edges = set()
    for wall in walls:
        members = sorted(index[id(c)] for c in top if extends(c, wall))
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                edges.add((members[i], members[j]))
    return sorted(edges)
