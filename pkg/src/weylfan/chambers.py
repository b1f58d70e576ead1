"""Chambers of the restricted weight arrangement: subsets of [n], sign
tableaux with local flow validation, extreme rays, and exact point
classification.

A chamber is a full-dimensional cell of the closed cone x_1 >= ... >= x_n cut
by the hyperplanes x_i + x_j = 0 (i < j) and x_i = 0.  Chambers correspond to
subsets S of [n]: sort the coordinates of an interior point by absolute value
and record which positions carry a positive sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .poset import PosetPoint


class TableauError(ValueError):
    """A sign tableau violating the flow rules; names the offending boxes."""

    def __init__(self, box: tuple[int, int], neighbor: tuple[int, int]):
        self.boxes = (box, neighbor)
        super().__init__(
            f"box {box} is '+' but box {neighbor} is '-': "
            "every box above or left of a '+' must be '+'"
        )


@dataclass(frozen=True)
class Chamber:
    """A chamber, stored by its rank n and subset (strictly decreasing)."""

    n: int
    subset: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("rank must be nonnegative")
        if list(self.subset) != sorted(set(self.subset), reverse=True):
            raise ValueError("subset must be stored strictly decreasing")
        if any(not 1 <= a <= self.n for a in self.subset):
            raise ValueError(f"subset {self.subset} not contained in [{self.n}]")

    @property
    def char_vector(self) -> tuple[int, ...]:
        """s_i = +1 if i is in the subset, else -1 (i = 1..n)."""
        members = set(self.subset)
        return tuple(1 if i in members else -1 for i in range(1, self.n + 1))

    def char_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.char_vector)

    def sign(self, i: int, j: int) -> int:
        """Sign of x_i + x_j (or of x_i when i = j) on the chamber interior."""
        if not 1 <= i <= j <= self.n:
            raise ValueError(f"bad box ({i}, {j}) for rank {self.n}")
        a = self.subset
        return 1 if i <= len(a) and j - i + 1 <= a[i - 1] else -1

    def tableau(self) -> tuple[tuple[int, ...], ...]:
        """Row i holds the signs of boxes (i, i), ..., (i, n)."""
        return tuple(
            tuple(self.sign(i, j) for j in range(i, self.n + 1))
            for i in range(1, self.n + 1)
        )

    def tableau_text(self) -> str:
        """Right-justified triangular rendering, parseable by tableau_validate."""
        lines = []
        for i, row in enumerate(self.tableau()):
            lines.append(" " * i + "".join("+" if v > 0 else "-" for v in row))
        return "\n".join(lines)

    def interior_point(self) -> tuple[int, ...]:
        """The integer point (a_1, .., a_k, -b_1, .., -b_{n-k})."""
        complement = [b for b in range(1, self.n + 1) if b not in set(self.subset)]
        return tuple(list(self.subset) + [-b for b in complement])

    def __repr__(self) -> str:
        inner = ",".join(str(a) for a in self.subset)
        return f"Chamber(n={self.n}, {{{inner}}})"


def chamber_from_subset(n: int, S: Iterable[int]) -> Chamber:
    """The chamber attached to a subset of [n]; raises on out-of-range members."""
    members = set(S)
    for a in members:
        if not isinstance(a, int) or not 1 <= a <= n:
            raise ValueError(f"subset member {a!r} outside [1, {n}]")
    return Chamber(n, tuple(sorted(members, reverse=True)))


def all_chambers(n: int) -> list[Chamber]:
    """All 2^n chambers, ordered by characteristic vector read as a binary
    number with s_1 the most significant bit (the empty set comes first)."""
    out = []
    for mask in range(1 << n):
        subset = [i for i in range(1, n + 1) if mask >> (n - i) & 1]
        out.append(chamber_from_subset(n, subset))
    return out


def _parse_tableau(T: Union[str, Sequence[Sequence[int]]]) -> list[list[int]]:
    if isinstance(T, str):
        lines = [line.strip() for line in T.splitlines() if line.strip()]
        rows = []
        for line in lines:
            row = []
            for ch in line:
                if ch == "+":
                    row.append(1)
                elif ch == "-":
                    row.append(-1)
                else:
                    raise ValueError(f"unexpected character {ch!r} in tableau text")
            rows.append(row)
        return rows
    rows = []
    for raw in T:
        row = []
        for v in raw:
            if v in (1, -1):
                row.append(v)
            elif v in ("+", "-"):
                row.append(1 if v == "+" else -1)
            else:
                raise ValueError(f"unexpected sign value {v!r}")
        rows.append(row)
    return rows


def tableau_validate(T: Union[str, Sequence[Sequence[int]]]) -> Chamber:
    """Check a triangular sign array against the flow rules and identify its
    chamber.  Raises TableauError naming the offending pair of boxes, or
    ValueError for shape problems."""
    rows = _parse_tableau(T)
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n - i:
            raise ValueError(
                f"row {i + 1} has {len(row)} boxes, expected {n - i} for rank {n}"
            )
    # Box (i, j) is rows[i-1][j-i]; a '+' forces '+' above and to the left.
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if rows[i - 1][j - i] != 1:
                continue
            if j - 1 >= i and rows[i - 1][j - 1 - i] != 1:
                raise TableauError((i, j), (i, j - 1))
            if i >= 2 and rows[i - 2][j - (i - 1)] != 1:
                raise TableauError((i, j), (i - 1, j))
    plus_counts = [sum(1 for v in row if v == 1) for row in rows]
    subset = [p for p in plus_counts if p > 0]
    return chamber_from_subset(n, subset)


def extreme_rays(chamber: Chamber) -> tuple[tuple[int, ...], ...]:
    """The n extreme rays e_1, ..., e_l, ...: e_l has its top l slots filled
    with +-1 according to how much of the subset sits above n - l."""
    n = chamber.n
    members = set(chamber.subset)
    rays = []
    for l in range(1, n + 1):
        pi = sum(1 for a in members if a >= n - l + 1)
        rays.append(tuple([1] * pi + [0] * (n - l) + [-1] * (l - pi)))
    return tuple(rays)


def ray_from_index(n: int, point: PosetPoint) -> tuple[int, ...]:
    """The ray vector (1^a, 0^(n-a-b), (-1)^b) for a point of E*_n."""
    if point.level < 1 or point.level > n:
        raise ValueError(f"{point} is not in E*_{n}")
    return tuple([1] * point.a + [0] * (n - point.level) + [-1] * point.b)


def ray_index(r: Sequence) -> PosetPoint:
    """Recover (a, b) from any positive multiple of a ray vector (1^a, 0^*, (-1)^b)."""
    vec = [Fraction(v) for v in r]
    if not vec or all(v == 0 for v in vec):
        raise ValueError("the zero vector is not a ray")
    scale = max(abs(v) for v in vec)
    norm = [v / scale for v in vec]
    a = 0
    while a < len(norm) and norm[a] == 1:
        a += 1
    b = 0
    while b < len(norm) and norm[len(norm) - 1 - b] == -1:
        b += 1
    if a + b > len(norm) or any(v != 0 for v in norm[a : len(norm) - b]):
        raise ValueError(f"{list(r)} is not proportional to a (1..,0..,-1..) pattern")
    return PosetPoint(a, b)


@dataclass(frozen=True)
class FaceSignature:
    """Exact sign data of a non-generic point: one sign per weight box (i, j)
    in row-major order, plus the signs of the consecutive differences."""

    n: int
    weight_signs: tuple[int, ...]
    root_signs: tuple[int, ...]

    def weight_sign(self, i: int, j: int) -> int:
        if not 1 <= i <= j <= self.n:
            raise ValueError(f"bad box ({i}, {j})")
        # boxes (1,1)..(1,n), (2,2)..: row i starts after sum of previous row lengths
        offset = sum(self.n - r + 1 for r in range(1, i)) + (j - i)
        return self.weight_signs[offset]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def classify_point(n: int, x: Sequence) -> Union[Chamber, FaceSignature]:
    """Classify an exact rational point of the closed cone x_1 >= ... >= x_n.

    Generic points (no weight vanishes, all differences strict) return their
    Chamber; everything else returns the full FaceSignature.  Points outside
    the cone raise ValueError.
    """
    vec = [Fraction(v) for v in x]
    if len(vec) != n:
        raise ValueError(f"expected {n} coordinates, got {len(vec)}")
    for i in range(n - 1):
        if vec[i] < vec[i + 1]:
            raise ValueError(
                f"point is outside the chamber: x_{i + 1} < x_{i + 2}"
            )
    weight_signs = tuple(
        _sign(vec[i] + vec[j]) for i in range(n) for j in range(i, n)
    )
    root_signs = tuple(_sign(vec[i] - vec[i + 1]) for i in range(n - 1))
    if all(s != 0 for s in weight_signs) and all(s == 1 for s in root_signs):
        order = sorted(range(n), key=lambda i: abs(vec[i]))
        subset = [m + 1 for m, i in enumerate(order) if vec[i] > 0]
        return chamber_from_subset(n, subset)
    return FaceSignature(n, weight_signs, root_signs)
