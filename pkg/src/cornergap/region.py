"""Triangular-lattice geometry and the parametric region families.

Coordinates
-----------
Rows are numbered 1, 2, ... downward from the top side.  Within a row a
cell's column is ``1 + 2*x_left`` where ``x_left`` is the abscissa of the
cell's leftmost vertex, measured in unit side lengths from the top-left
corner of the region.  Up- and down-pointing cells alternate along a row,
so ``(row, col)`` alone identifies a cell; the orientation is kept for
readability.

Every family shares the same skeleton:

* a top side of length ``x``;
* a north-eastern zig-zag made of ``n`` periods ("bumps"), each a unit step
  at -60 degrees followed by a unit step at 0 degrees, so the up-pointing
  cell at bump ``k`` has its apex at ``(x + 3(k-1)/2, -(k-1) h)``;
* a straight south-eastern side at -120 degrees;
* a horizontal bottom side;
* a western zig-zag of period two rows whose inner vertices lie on the
  vertical through the top-left corner.

The families differ only in the number of rows, which equals the length of
the western zig-zag: ``2n`` for G, ``2n-2`` for F and ``2n-4`` for D.  When
a family has fewer rows than bumps (D with n = 2, 3) the missing bump cells
are kept as isolated up-pointing cells so that the dent bookkeeping stays
uniform.

The inner vertices of the two zig-zags lie on lines meeting at the top-left
corner at 60 degrees; these are the mirror lines used by
:mod:`cornergap.correlation.images`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Iterable, Iterator

UP = "up"
DOWN = "down"


@dataclass(frozen=True, order=True)
class UnitTriangle:
    row: int
    col: int
    orientation: str = field(compare=False)

    def __post_init__(self):
        if self.orientation not in (UP, DOWN):
            raise ValueError(f"bad orientation {self.orientation!r}")

    @property
    def is_up(self) -> bool:
        return self.orientation == UP


def neighbors(cell: UnitTriangle) -> tuple[UnitTriangle, UnitTriangle, UnitTriangle]:
    """The three cells sharing an edge with ``cell``."""
    r, c = cell.row, cell.col
    if cell.is_up:
        return (UnitTriangle(r, c - 1, DOWN), UnitTriangle(r, c + 1, DOWN), UnitTriangle(r + 1, c, DOWN))
    return (UnitTriangle(r, c - 1, UP), UnitTriangle(r, c + 1, UP), UnitTriangle(r - 1, c, UP))


# -- region specifications ---------------------------------------------------


class RegionSpec:
    family: ClassVar[str]

    def validate(self) -> None:  # pragma: no cover - overridden
        raise NotImplementedError

    def params(self) -> dict[str, int]:
        return dict(self.__dict__)

    def label(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.family}({args})"


def _nonneg(**kw):
    for k, v in kw.items():
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{k} must be a non-negative integer, got {v!r}")


@dataclass(frozen=True)
class G(RegionSpec):
    n: int
    x: int
    family: ClassVar[str] = "G"

    def validate(self):
        if not isinstance(self.n, int):
            raise ValueError("n must be an integer")
        _nonneg(x=self.x)


@dataclass(frozen=True)
class F(RegionSpec):
    n: int
    x: int
    i: int
    family: ClassVar[str] = "F"

    def validate(self):
        _nonneg(x=self.x)
        if self.n < 1 or not 1 <= self.i <= self.n:
            raise ValueError(f"F needs n >= 1 and 1 <= i <= n, got n={self.n}, i={self.i}")


@dataclass(frozen=True)
class D(RegionSpec):
    n: int
    x: int
    family: ClassVar[str] = "D"

    def validate(self):
        _nonneg(x=self.x)
        if self.n < 2:
            raise ValueError(f"D needs n >= 2, got {self.n}")


@dataclass(frozen=True)
class DZero(RegionSpec):
    n: int
    x: int
    family: ClassVar[str] = "DZero"

    def validate(self):
        _nonneg(x=self.x)
        if self.n < 3:
            raise ValueError(f"DZero removes bump 3 and needs n >= 3, got {self.n}")


@dataclass(frozen=True)
class E(RegionSpec):
    n: int
    x: int
    i: int
    j: int
    family: ClassVar[str] = "E"

    def validate(self):
        _nonneg(x=self.x)
        if self.n < 2 or not 1 <= self.i < self.j <= self.n:
            raise ValueError(f"E needs 1 <= i < j <= n, got n={self.n}, i={self.i}, j={self.j}")


@dataclass(frozen=True)
class DGap(RegionSpec):
    n: int
    x: int
    R: int
    v: int
    family: ClassVar[str] = "DGap"

    def validate(self):
        _nonneg(x=self.x)
        if self.n < 2:
            raise ValueError(f"DGap needs n >= 2, got {self.n}")
        if self.R < 1 or self.v < 1:
            raise ValueError(f"DGap needs R, v >= 1, got R={self.R}, v={self.v}")


FAMILIES = {cls.family: cls for cls in (G, F, D, DZero, E, DGap)}


def make_spec(family: str, **params) -> RegionSpec:
    try:
        cls = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown region family {family!r}") from None
    spec = cls(**params)
    spec.validate()
    return spec


# -- region ------------------------------------------------------------------


@dataclass(frozen=True)
class Region:
    cells: frozenset[UnitTriangle]
    spec: RegionSpec | None = None

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[UnitTriangle]:
        return iter(sorted(self.cells))

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def ups(self) -> list[UnitTriangle]:
        return [c for c in self if c.is_up]

    def downs(self) -> list[UnitTriangle]:
        return [c for c in self if not c.is_up]

    def without(self, cells: Iterable[UnitTriangle]) -> "Region":
        return Region(self.cells - frozenset(cells), None)

    def to_text(self) -> str:
        """Line-oriented serialization: one ``row col orientation`` per line."""
        head = f"# region {self.spec.label()}\n" if self.spec is not None else ""
        return head + "".join(f"{c.row} {c.col} {c.orientation}\n" for c in self)

    @classmethod
    def from_text(cls, text: str) -> "Region":
        cells = set()
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'row col orientation'")
            cells.add(UnitTriangle(int(parts[0]), int(parts[1]), parts[2]))
        return cls(frozenset(cells))


def balance(region: Region) -> tuple[int, int]:
    ups = sum(1 for c in region.cells if c.is_up)
    return ups, len(region.cells) - ups


@dataclass(frozen=True)
class DualGraph:
    ups: tuple[UnitTriangle, ...]
    downs: tuple[UnitTriangle, ...]
    edges: tuple[tuple[UnitTriangle, UnitTriangle], ...]


def dual_graph(region: Region) -> DualGraph:
    """Bipartite dual: up-cells vs down-cells, edges between cells sharing a side."""
    ups = tuple(region.ups())
    downs = tuple(region.downs())
    edges = tuple(sorted((u, d) for u in ups for d in neighbors(u) if d in region.cells))
    return DualGraph(ups, downs, edges)


# -- construction --------------------------------------------------------------


def _row_bounds(r: int, n_bumps: int, x: int) -> tuple[int, int, int, int]:
    """Doubled abscissae (left_top, left_bottom, right_top, right_bottom) of row r."""
    if r % 2:
        left_top, left_bottom = 0, -1
    else:
        left_top, left_bottom = -1, 0
    if r <= n_bumps:
        right_top = 2 * x + 3 * (r - 1)
        right_bottom = right_top + 1
    else:
        right_top = 2 * x + 3 * n_bumps - (r - n_bumps - 1)
        right_bottom = right_top - 1
    return left_top, left_bottom, right_top, right_bottom


def _in_body(cell: UnitTriangle, n_rows: int, n_bumps: int, x: int) -> bool:
    if not 1 <= cell.row <= n_rows:
        return False
    lt, lb, rt, rb = _row_bounds(cell.row, n_bumps, x)
    p = cell.col - 1
    if cell.is_up:
        return (p - lb) % 2 == 0 and lb <= p <= rb - 2
    return (p - lt) % 2 == 0 and lt <= p <= rt - 2


def _body(n_rows: int, n_bumps: int, x: int) -> set[UnitTriangle]:
    cells = set()
    for r in range(1, n_rows + 1):
        lt, lb, rt, rb = _row_bounds(r, n_bumps, x)
        cells.update(UnitTriangle(r, p + 1, UP) for p in range(lb, rb - 1, 2))
        cells.update(UnitTriangle(r, p + 1, DOWN) for p in range(lt, rt - 1, 2))
    for r in range(n_rows + 1, n_bumps + 1):
        cells.add(bump_cell(r, x))
    return cells


def bump_cell(k: int, x: int) -> UnitTriangle:
    """The up-pointing cell fitting in the k-th bump of the north-eastern side."""
    return UnitTriangle(k, 2 * x + 3 * (k - 1), UP)


def gap_cells(R: int, v: int, x: int = 1) -> frozenset[UnitTriangle]:
    """The side-2 up-pointing triangle removed in ``DGap(n, x, R, v)``.

    For ``x = 1`` the midpoint of its base sits at ``(3v - 2R, -v*sqrt(3))``
    relative to the corner where the two mirror lines meet; other ``x``
    shift the gap sideways with the north-eastern boundary.
    """
    apex = 6 * v - 4 * R + 2 * (x - 1)  # doubled abscissa of the apex
    top = 2 * v - 1
    return frozenset({
        UnitTriangle(top, apex, UP),
        UnitTriangle(top + 1, apex - 1, UP),
        UnitTriangle(top + 1, apex + 1, UP),
        UnitTriangle(top + 1, apex, DOWN),
    })


def gap_fits(n: int, x: int, R: int, v: int) -> bool:
    """Whether the gap lies inside ``D(n, x)`` (checked without building it)."""
    n_rows = 2 * n - 4
    return all(_in_body(c, n_rows, n, x) for c in gap_cells(R, v, x))


def build(spec: RegionSpec) -> Region:
    spec.validate()
    if isinstance(spec, G):
        if spec.n < 0:
            return Region(frozenset(), spec)
        cells = _body(2 * spec.n, spec.n, spec.x)
    elif isinstance(spec, F):
        cells = _body(2 * spec.n - 2, spec.n, spec.x)
        cells.discard(bump_cell(spec.i, spec.x))
    elif isinstance(spec, D):
        cells = _body(2 * spec.n - 4, spec.n, spec.x)
    elif isinstance(spec, DZero):
        cells = _body(2 * spec.n - 4, spec.n, spec.x)
        cells -= {bump_cell(1, spec.x), bump_cell(3, spec.x)}
    elif isinstance(spec, E):
        cells = _body(2 * spec.n - 4, spec.n, spec.x)
        cells -= {bump_cell(spec.i, spec.x), bump_cell(spec.j, spec.x)}
    elif isinstance(spec, DGap):
        cells = _body(2 * spec.n - 4, spec.n, spec.x)
        gap = gap_cells(spec.R, spec.v, spec.x)
        if not gap <= cells:
            raise ValueError(f"gap (R={spec.R}, v={spec.v}) does not fit in D({spec.n}, {spec.x})")
        cells -= gap
    else:
        raise TypeError(f"unsupported spec {spec!r}")
    return Region(frozenset(cells), spec)


def strip_forced(region: Region) -> tuple[Region, list[tuple[UnitTriangle, UnitTriangle]]]:
    """Repeatedly place lozenges forced by cells with a single free neighbour.

    Returns the leftover region and the forced lozenges in placement order.
    Stops early if some cell has no neighbour at all (the region is then
    untileable and is returned as is).
    """
    cells = set(region.cells)
    forced = []
    changed = True
    while changed:
        changed = False
        for cell in sorted(cells):
            if cell not in cells:
                continue
            free = [d for d in neighbors(cell) if d in cells]
            if not free:
                return Region(frozenset(cells)), forced
            if len(free) == 1:
                cells.discard(cell)
                cells.discard(free[0])
                forced.append((cell, free[0]) if cell.is_up else (free[0], cell))
                changed = True
    return Region(frozenset(cells)), forced
