"""Tiling counters: a perfect-matching oracle and lattice-path determinants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import kernels
from .exactmath import InternalDisagreement, binomial, exact_int, factorial
from .region import Region, balance, gap_fits, neighbors, strip_forced

DEFAULT_MAX_CELLS = 400


class SizeCapExceeded(ValueError):
    pass


# -- matching oracle -----------------------------------------------------------


def forward_offsets(region: Region) -> list[tuple[int, ...]]:
    """Row-major vertex order with each edge stored as an offset from its earlier end."""
    order = sorted(region.cells, key=lambda c: (c.row, c.col))
    index = {c: k for k, c in enumerate(order)}
    out = []
    for k, cell in enumerate(order):
        offs = sorted(index[d] - k for d in neighbors(cell) if d in index and index[d] > k)
        out.append(tuple(offs))
    return out


def matching_bound(region: Region) -> int:
    """Product of up-cell degrees (or down-cell degrees, whichever is smaller)."""
    ups = [sum(d in region.cells for d in neighbors(c)) for c in region.cells if c.is_up]
    downs = [sum(d in region.cells for d in neighbors(c)) for c in region.cells if not c.is_up]
    return min(kernels.degree_bound(ups), kernels.degree_bound(downs))


def count_matchings(region: Region, max_cells: int = DEFAULT_MAX_CELLS, kernel: str | None = None) -> int:
    """Exact number of lozenge tilings of ``region``.

    Forced lozenges are placed first; the remaining graph is swept in
    row-major order with partial matchings merged by their covered frontier.
    """
    if len(region) > max_cells:
        raise SizeCapExceeded(f"region has {len(region)} cells, cap is {max_cells}")
    if not region.cells:
        return 1
    up, down = balance(region)
    if up != down:
        return 0
    rest, _ = strip_forced(region)
    if not rest.cells:
        return 1
    up, down = balance(rest)
    if up != down:
        return 0
    return kernels.count_forward(forward_offsets(rest), matching_bound(rest), kernel)


# -- exact matrices --------------------------------------------------------------


class ExactMatrix:
    """Dense matrix of ints or Fractions."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [list(r) for r in rows]
        width = {len(r) for r in self.rows}
        if len(width) > 1:
            raise ValueError("ragged matrix")
        self.shape = (len(self.rows), width.pop() if width else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"ExactMatrix({self.rows!r})"

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def det(self):
        n, m = self.shape
        if n != m:
            raise ValueError(f"determinant of a {n}x{m} matrix")
        if n == 0:
            return 1
        if all(isinstance(x, int) for r in self.rows for x in r):
            return _bareiss(self.rows)
        return _gauss(self.rows)


def _bareiss(rows) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for s in range(k + 1, n):
                if a[s][k] != 0:
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _gauss(rows) -> Fraction:
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    out = Fraction(1)
    for k in range(n):
        piv = next((s for s in range(k, n) if a[s][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            out = -out
        out *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return out


# -- lattice paths -----------------------------------------------------------------


def lattice_paths(start: tuple[int, int], end: tuple[int, int]) -> int:
    """Number of north/east unit-step paths from start to end."""
    east, north = end[0] - start[0], end[1] - start[1]
    if east < 0 or north < 0:
        return 0
    return binomial(east + north, east)


@dataclass(frozen=True)
class PathEndpointLabeling:
    """Lattice endpoints of the rhombus paths in ``D(n, x)`` with an optional gap.

    Start labels 1 and 2 belong to the gap (when present); labels 3..n are
    the western boundary from top to bottom.  End labels 1..n run down the
    north-eastern side from the top.
    """

    n: int
    x: int = 1
    R: int | None = None
    v: int | None = None

    def starts(self) -> dict[int, tuple[int, int]]:
        pts = {j + 2: (j - 1, 1 - 2 * j) for j in range(1, self.n - 1)}
        if self.R is not None:
            first = (4 * self.v - 2 * self.R - 1 + (self.x - 1), 2 - 2 * self.v)
            pts[1] = first
            pts[2] = (first[0] + 1, first[1] - 1)
        return pts

    def ends(self) -> dict[int, tuple[int, int]]:
        return {k: (self.x + 2 * k - 2, 1 - k) for k in range(1, self.n + 1)}


def path_count_matrix(labeling: PathEndpointLabeling) -> ExactMatrix:
    """Matrix of single-path counts; row/column ``k-1`` holds label ``k``.

    Rows for gap labels are zero when the labeling has no gap.
    """
    starts, ends = labeling.starts(), labeling.ends()
    n = labeling.n
    rows = []
    for i in range(1, n + 1):
        s = starts.get(i)
        rows.append([lattice_paths(s, ends[j]) if s is not None else 0 for j in range(1, n + 1)])
    return ExactMatrix(rows)


def lgv_count(matrix, rows: Sequence[int], cols: Sequence[int]) -> int:
    """|det| of the minor on 1-based ``rows`` x ``cols``.

    ``matrix`` may be an :class:`ExactMatrix` or a zero-argument builder.
    """
    if callable(matrix):
        matrix = matrix()
    if len(rows) != len(cols):
        raise ValueError(f"minor is {len(rows)}x{len(cols)}, not square")
    return abs(exact_int(matrix.minor([i - 1 for i in rows], [j - 1 for j in cols]).det()))


def e_count_lgv(n: int, x: int, i: int, j: int) -> int:
    """Tilings of the doubly dented region through the path determinant."""
    if not 1 <= i < j <= n:
        raise ValueError("need 1 <= i < j <= n")
    matrix = path_count_matrix(PathEndpointLabeling(n, x))
    cols = [k for k in range(1, n + 1) if k not in (i, j)]
    return lgv_count(matrix, range(3, n + 1), cols)


def gapped_count_lgv(n: int, R: int, v: int, x: int = 1) -> int:
    """Tilings of the gapped region as |det| of the full path matrix."""
    if not gap_fits(n, x, R, v):
        raise ValueError(f"gap (R={R}, v={v}) does not fit for n={n}")
    matrix = path_count_matrix(PathEndpointLabeling(n, x, R, v))
    return lgv_count(matrix, range(1, n + 1), range(1, n + 1))


# -- Laplace expansion along the gap rows ----------------------------------------


def gap_weight(R: int, a: int) -> Fraction:
    """(R+a-1)! / ((2a)! (R-a)!)"""
    return Fraction(factorial(R + a - 1), factorial(2 * a) * factorial(R - a))


def gap_minor(R: int, a: int, b: int) -> Fraction:
    """2x2 minor of the gap rows at end labels ``2v-R+a`` and ``2v-R+b``.

    Computed both from the binomial entries and from the factorial closed
    form; a mismatch raises :class:`InternalDisagreement`.
    """
    entries = ExactMatrix([
        [binomial(R + a - 1, 2 * a), binomial(R + b - 1, 2 * b)],
        [binomial(R + a - 1, 2 * a - 1), binomial(R + b - 1, 2 * b - 1)],
    ])
    direct = Fraction(entries.det())
    closed = 2 * R * (b - a) * gap_weight(R, a) * gap_weight(R, b)
    if direct != closed:
        raise InternalDisagreement(f"gap minor R={R} a={a} b={b}: {direct} != {closed}")
    return direct


def count_gapped(n: int, R: int, v: int, e_counts: Callable[[int, int], object] | None = None, x: int = 1):
    """Tilings of the gapped region via Laplace expansion along the gap rows.

    ``e_counts(i, j)`` supplies the doubly dented counts (defaults to the
    product formula).  Passing normalized values, e.g. ratios to a fixed
    reference count, returns the correspondingly normalized total.
    """
    if R < 1 or v < 1:
        raise ValueError("R and v must be positive")
    if not gap_fits(n, x, R, v):
        raise ValueError(f"gap (R={R}, v={v}) does not fit for n={n}")
    if e_counts is None:
        from .formulas import m_E

        def e_counts(i, j):
            return m_E(n, x, i, j)

    total = Fraction(0)
    for a in range(R + 1):
        ia = 2 * v - R + a
        if ia < 1:
            continue
        for b in range(a + 1, R + 1):
            ib = 2 * v - R + b
            if ib > n:
                break
            sign = -1 if (a + b) % 2 else 1
            total += sign * (b - a) * gap_weight(R, a) * gap_weight(R, b) * e_counts(ia, ib)
    total = abs(2 * R * total)
    return total.numerator if total.denominator == 1 else total
