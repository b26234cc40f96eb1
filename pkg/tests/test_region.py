import pytest

from cornergap.region import (
    D,
    DGap,
    DZero,
    E,
    F,
    G,
    Region,
    UnitTriangle,
    balance,
    build,
    bump_cell,
    dual_graph,
    gap_cells,
    gap_fits,
    make_spec,
    neighbors,
    strip_forced,
)


def connected(region):
    cells = set(region.cells)
    if not cells:
        return True
    start = min(cells)
    seen, stack = {start}, [start]
    while stack:
        for d in neighbors(stack.pop()):
            if d in cells and d not in seen:
                seen.add(d)
                stack.append(d)
    return len(seen) == len(cells)


def test_empty_families():
    assert len(build(G(0, 3))) == 0
    assert len(build(G(-1, 3))) == 0
    assert len(build(F(1, 4, 1))) == 0


@pytest.mark.parametrize("x", range(4))
def test_f22_reduces_to_hexagon(x):
    rest, forced = strip_forced(build(F(2, x, 2)))
    # hexagon with sides 1, 1, x has 2(1 + 2x) unit triangles
    assert len(rest) == 4 * x + 2 or (x == 0 and len(rest) == 0)
    assert balance(rest)[0] == balance(rest)[1]
    if x > 0:
        assert len(forced) == 1


def test_neighbors_are_mutual():
    for cell in build(G(3, 2)):
        for d in neighbors(cell):
            assert cell in neighbors(d)
            assert d.is_up != cell.is_up


def test_dual_graph_single_edge():
    reg = Region(frozenset({UnitTriangle(1, 1, "up"), UnitTriangle(1, 2, "down")}))
    g = dual_graph(reg)
    assert len(g.ups) == len(g.downs) == 1
    assert g.edges == ((UnitTriangle(1, 1, "up"), UnitTriangle(1, 2, "down")),)


def test_dual_graph_edges_sorted():
    g = dual_graph(build(E(5, 1, 2, 4)))
    assert list(g.edges) == sorted(g.edges)
    assert all(u.is_up and not d.is_up for u, d in g.edges)


def test_balance():
    assert balance(Region(frozenset())) == (0, 0)
    for n in range(4, 9):
        up, down = balance(build(D(n, 1)))
        assert up - down == 2
        assert balance(build(DZero(n, 1)))[0] == balance(build(DZero(n, 1)))[1]
        for R in range(1, 2 * n):
            for v in range(1, n + 1):
                if gap_fits(n, 1, R, v):
                    a, b = balance(build(DGap(n, 1, R, v)))
                    assert a == b


def test_gap_is_side_two_triangle():
    cells = gap_cells(3, 4)
    assert sum(c.is_up for c in cells) == 3
    assert sum(not c.is_up for c in cells) == 1
    down = next(c for c in cells if not c.is_up)
    assert all(n in cells for n in neighbors(down))


def test_gap_fits_matches_construction():
    for n in range(2, 9):
        body = build(D(n, 1)).cells
        for R in range(1, 2 * n + 2):
            for v in range(1, n + 2):
                assert gap_fits(n, 1, R, v) == (gap_cells(R, v) <= body)


def test_unfitting_gap_rejected():
    with pytest.raises(ValueError):
        build(DGap(4, 1, 6, 1))


def test_connected_nondegenerate():
    for n in range(4, 8):
        assert connected(build(D(n, 1)))
        assert connected(build(G(n, 2)))
        assert connected(build(E(n, 1, 2, 3)))


def test_bumps_removed():
    body = build(D(6, 2)).cells
    e = build(E(6, 2, 2, 5)).cells
    assert body - e == {bump_cell(2, 2), bump_cell(5, 2)}
    assert build(DZero(6, 2)).cells == build(E(6, 2, 1, 3)).cells


def test_deterministic_and_roundtrip():
    spec = DGap(7, 1, 3, 4)
    a, b = build(spec), build(spec)
    assert a.to_text() == b.to_text()
    again = Region.from_text(a.to_text())
    assert again.cells == a.cells
    assert Region.from_text(again.to_text()).to_text().splitlines()[-1] == a.to_text().splitlines()[-1]


def test_from_text_rejects_garbage():
    with pytest.raises(ValueError):
        Region.from_text("1 2\n")
    with pytest.raises(ValueError):
        Region.from_text("1 2 sideways\n")


@pytest.mark.parametrize(
    "family, params",
    [
        ("D", dict(n=1, x=0)),
        ("E", dict(n=4, x=0, i=3, j=2)),
        ("E", dict(n=4, x=0, i=1, j=5)),
        ("F", dict(n=3, x=0, i=0)),
        ("G", dict(n=2, x=-1)),
        ("DGap", dict(n=5, x=1, R=0, v=1)),
        ("Hexagon", dict(n=1)),
    ],
)
def test_invalid_specs(family, params):
    with pytest.raises((ValueError, TypeError)):
        make_spec(family, **params)


def test_golden_serialization(datadir):
    golden = (datadir / "E_4_1_2_3.region").read_text()
    assert build(E(4, 1, 2, 3)).to_text() == golden
