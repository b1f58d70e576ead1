"""Small exact simplex solver plus the two feasibility questions the oracle
actually asks: strict feasibility of a sign system, and whether a functional
can be made positive on a cone.

Strict inequalities are handled the standard way: maximize a single margin
variable subject to every strict constraint shifted by it, inside the
normalization box |x_i| <= 1; the open set is non-empty iff the optimum is
positive.  Pivoting is greedy while it makes progress and switches to Bland's
rule through degenerate stretches, which guarantees termination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .linalg import dot, kernel_basis

_ZERO = Fraction(0)
_ONE = Fraction(1)


class UnboundedProgram(RuntimeError):
    pass


def simplex_max(rows, rhs, objective, basis, *, stats=None):
    """Maximize objective over {rows . x = rhs, x >= 0}.

    basis must name one column per row forming an identity submatrix with
    rhs >= 0 (an all-slack start in every use below).  Returns the optimal
    value and the primal solution.
    """
    m = len(rows)
    ncols = len(objective)
    tab = [
        [Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)
    ]
    z = [-Fraction(c) for c in objective] + [_ZERO]
    basis = list(basis)
    for r, col in enumerate(basis):
        if z[col] != 0:
            f = z[col]
            z = [a - f * b for a, b in zip(z, tab[r])]
    stall = 0
    bland = False
    while True:
        if bland:
            entering = next((j for j in range(ncols) if z[j] < 0), None)
        else:
            entering = None
            best = _ZERO
            for j in range(ncols):
                if z[j] < best:
                    best = z[j]
                    entering = j
        if entering is None:
            value = z[ncols]
            solution = [_ZERO] * ncols
            for r, col in enumerate(basis):
                solution[col] = tab[r][ncols]
            return value, solution
        ratio = None
        leaving = None
        for r in range(m):
            a = tab[r][entering]
            if a > 0:
                cand = tab[r][ncols] / a
                if (
                    ratio is None
                    or cand < ratio
                    or (cand == ratio and basis[r] < basis[leaving])
                ):
                    ratio = cand
                    leaving = r
        if leaving is None:
            raise UnboundedProgram("objective is unbounded on the feasible cone")
        if stats is not None:
            stats["pivots"] = stats.get("pivots", 0) + 1
        if ratio == 0:
            stall += 1
            if stall > 2 * m + 10:
                bland = True
        else:
            stall = 0
        pv = tab[leaving][entering]
        tab[leaving] = [v / pv for v in tab[leaving]]
        for r in range(m):
            if r != leaving and tab[r][entering] != 0:
                f = tab[r][entering]
                tab[r] = [a - f * b for a, b in zip(tab[r], tab[leaving])]
        if z[entering] != 0:
            f = z[entering]
            z = [a - f * b for a, b in zip(z, tab[leaving])]
        basis[leaving] = entering


def strict_feasible(
    eq_rows: Sequence[Sequence],
    strict_rows: Sequence[Sequence],
    weak_rows: Sequence[Sequence],
    dim: int,
    *,
    stats=None,
) -> Optional[tuple[Fraction, ...]]:
    """Interior witness of {eq = 0, strict > 0, weak >= 0}, or None.

    Equalities are eliminated through their kernel, the rest is the margin
    LP described in the module docstring.
    """
    if stats is not None:
        stats["lp_calls"] = stats.get("lp_calls", 0) + 1
    basis_vecs = kernel_basis(eq_rows, dim)
    d = len(basis_vecs)
    zero = tuple([_ZERO] * dim)
    if d == 0:
        if any(any(Fraction(v) != 0 for v in row) for row in strict_rows):
            return None
        return zero
    strict_proj = [[dot(row, b) for b in basis_vecs] for row in strict_rows]
    if any(all(v == 0 for v in row) for row in strict_proj):
        return None
    if not strict_rows:
        return zero  # kernel point; every weak row vanishes there
    weak_proj = [[dot(row, b) for b in basis_vecs] for row in weak_rows]
    # columns: p (d), q (d), margin, one slack per row below
    n_strict = len(strict_proj)
    n_weak = len(weak_proj)
    n_box = 2 * dim
    ncols = 2 * d + 1 + n_strict + n_weak + n_box
    margin_col = 2 * d
    rows = []
    rhs = []
    basis = []
    slack = margin_col + 1

    def with_slack(body, value):
        nonlocal slack
        row = body + [_ZERO] * (ncols - margin_col - 1)
        row[slack] = _ONE
        rows.append(row)
        rhs.append(value)
        basis.append(slack)
        slack += 1

    for srow in strict_proj:
        body = [-v for v in srow] + [v for v in srow] + [_ONE]
        with_slack(body, _ZERO)
    for wrow in weak_proj:
        body = [-v for v in wrow] + [v for v in wrow] + [_ZERO]
        with_slack(body, _ZERO)
    for i in range(dim):
        coord = [b[i] for b in basis_vecs]
        body = [v for v in coord] + [-v for v in coord] + [_ZERO]
        with_slack(body, _ONE)
        body = [-v for v in coord] + [v for v in coord] + [_ZERO]
        with_slack(body, _ONE)
    objective = [_ZERO] * ncols
    objective[margin_col] = _ONE
    value, solution = simplex_max(rows, rhs, objective, basis, stats=stats)
    if value <= 0:
        return None
    w = [solution[j] - solution[d + j] for j in range(d)]
    witness = tuple(
        sum((w[j] * basis_vecs[j][i] for j in range(d)), _ZERO) for i in range(dim)
    )
    for row in eq_rows:
        assert dot(row, witness) == 0
    for row in strict_rows:
        assert dot(row, witness) > 0
    for row in weak_rows:
        assert dot(row, witness) >= 0
    return witness


def cone_positive(
    eq_rows: Sequence[Sequence],
    functional: Sequence,
    dim: int,
    *,
    stats=None,
) -> Optional[tuple[Fraction, ...]]:
    """A point of {r >= 0, eq . r = 0} with functional . r > 0, or None."""
    if stats is not None:
        stats["lp_calls"] = stats.get("lp_calls", 0) + 1
    basis_vecs = kernel_basis(eq_rows, dim)
    d = len(basis_vecs)
    if d == 0:
        return None
    g = [dot(functional, b) for b in basis_vecs]
    if all(v == 0 for v in g):
        return None
    # columns: p, q, then a slack per coordinate row and one for the cap
    ncols = 2 * d + dim + 1
    rows = []
    rhs = []
    basis = []
    for i in range(dim):
        coord = [b[i] for b in basis_vecs]
        row = [-v for v in coord] + [v for v in coord] + [_ZERO] * (dim + 1)
        row[2 * d + i] = _ONE
        rows.append(row)
        rhs.append(_ZERO)
        basis.append(2 * d + i)
    cap = [v for v in g] + [-v for v in g] + [_ZERO] * (dim + 1)
    cap[2 * d + dim] = _ONE
    rows.append(cap)
    rhs.append(_ONE)
    basis.append(2 * d + dim)
    objective = [v for v in g] + [-v for v in g] + [_ZERO] * (dim + 1)
    value, solution = simplex_max(rows, rhs, objective, basis, stats=stats)
    if value <= 0:
        return None
    w = [solution[j] - solution[d + j] for j in range(d)]
    point = tuple(
        sum((w[j] * basis_vecs[j][i] for j in range(d)), _ZERO) for i in range(dim)
    )
    assert all(v >= 0 for v in point)
    assert dot(functional, point) > 0
    for row in eq_rows:
        assert dot(row, point) == 0
    return point
