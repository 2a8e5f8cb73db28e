"""Catalogue pairs: instantiation, windows, saturation and round trips.

Expected dimensions marked [DERIVED] were frozen from the independent
exterior-power/weight-count oracle in tests/oracles/oracle_pairs.py
(its full output is reproduced by running that script); structural
counts (registry size, part dimensions) are [TRIVIAL] consequences of
the algebra types.
"""

import pytest

from liecx.liealg import models, ops
from liecx.pairs import recipes, registry, spec
from liecx.pairs.recipes import PairError

# [DERIVED] (index values, dim g, dim h) for the three smallest admissible
# tuples of every row of the two single-ambient tables.
SIMPLE_ROW_DIMS = {
    ("T1", 1): [((2,), 3, 1), ((3,), 8, 3), ((4,), 15, 6)],
    ("T1", 2): [((1, 1), 3, 1), ((1, 2), 8, 4), ((2, 1), 8, 4)],
    ("T1", 3): [((1, 2), 8, 3), ((2, 1), 8, 3), ((1, 3), 15, 8)],
    ("T1", 4): [((2,), 15, 10), ((3,), 35, 21), ((4,), 63, 36)],
    ("T1", 5): [((1,), 8, 3), ((2,), 24, 10), ((3,), 48, 21)],
    ("T1", 6): [((1,), 8, 4), ((2,), 24, 11), ((3,), 48, 22)],
    ("T1", 7): [((3,), 15, 9), ((4,), 28, 16), ((5,), 45, 25)],
    ("T1", 8): [((1,), 15, 8), ((2,), 45, 24), ((3,), 91, 48)],
    ("T1", 9): [((1,), 3, 1), ((2,), 10, 4), ((3,), 21, 9)],
    ("T1", 10): [((2, 1), 3, 1), ((3, 2), 10, 4), ((4, 1), 10, 6)],
    ("T1", 11): [((), 36, 21)],
    ("T1", 12): [((), 21, 14)],
    ("T1", 13): [((), 28, 14)],
    ("T1", 14): [((), 45, 22)],
    ("T1", 15): [((1,), 3, 1), ((2,), 10, 4), ((3,), 21, 9)],
    ("T1", 16): [((1, 1), 10, 6), ((1, 2), 21, 13), ((2, 1), 21, 13)],
    ("T1", 17): [((1,), 3, 1), ((2,), 10, 4), ((3,), 21, 11)],
    ("T1", 18): [((), 14, 8)],
    ("T1", 19): [((), 14, 6)],
    ("T1", 20): [((), 52, 36)],
    ("T1", 21): [((), 52, 24)],
    ("T1", 22): [((), 78, 36)],
    ("T1", 23): [((), 78, 52)],
    ("T1", 24): [((), 78, 45)],
    ("T1", 25): [((), 78, 46)],
    ("T1", 26): [((), 78, 38)],
    ("T1", 27): [((), 133, 79)],
    ("T1", 28): [((), 133, 63)],
    ("T1", 29): [((), 133, 69)],
    ("T1", 30): [((), 248, 120)],
    ("T1", 31): [((), 248, 136)],
    ("T2", 1): [((1,), 3, 0), ((2,), 15, 6), ((3,), 35, 16)],
    ("T2", 2): [((3,), 8, 2), ((4,), 15, 5), ((5,), 24, 10)],
    ("T2", 3): [((5,), 24, 9), ((6,), 35, 16), ((7,), 48, 25)],
    ("T2", 4): [((), 35, 14)],
    ("T2", 5): [((5,), 10, 3), ((6,), 15, 6), ((7,), 21, 10)],
    ("T2", 6): [((3,), 21, 8), ((4,), 36, 15), ((5,), 55, 24)],
    ("T2", 7): [((2,), 28, 15), ((3,), 66, 35), ((4,), 120, 63)],
    ("T2", 8): [((), 36, 15)],
    ("T2", 9): [((), 55, 24)],
    ("T2", 10): [((), 45, 21)],
    ("T2", 11): [((2,), 10, 3), ((3,), 21, 8), ((4,), 36, 15)],
    ("T2", 12): [((2,), 10, 3), ((3,), 21, 10), ((4,), 36, 21)],
    ("T2", 13): [((3,), 21, 9), ((4,), 36, 16), ((5,), 55, 27)],
    ("T2", 14): [((), 10, 3)],
    ("T2", 15): [((), 78, 37)],
    ("T2", 16): [((), 133, 78)],
    ("T2", 17): [((), 52, 28)],
}


def _inst(table, item, **vals):
    return spec.instantiate(registry.get_entry(table, item).spec, vals)


# ---------------------------------------------------------------------------
# registry shape
# ---------------------------------------------------------------------------


def test_registry_row_counts():
    reg = registry.get_registry()
    counts = {}
    for table, _ in reg:
        counts[table] = counts.get(table, 0) + 1
    assert counts == {1: 31, 2: 17, 3: 9, 4: 30}


def test_registry_lookup_and_errors():
    e = registry.get_entry(2, 14)
    assert e.key == "T2:14"
    assert e.expected_c == 1
    assert e.ambient == (("sp", "4"),)
    with pytest.raises(PairError):
        registry.get_entry(5, 1)


def test_admissible_tuples_respect_constraints():
    # sums ascend, ties break lexicographically, constraints filter
    e = registry.get_entry(1, 10)
    tuples = [tuple(env[k] for k in e.spec.indices) for env in registry.admissible_tuples(e, 3)]
    assert tuples == [(2, 1), (3, 2), (4, 1)]
    e = registry.get_entry(1, 3)
    tuples = [tuple(env[k] for k in e.spec.indices) for env in registry.admissible_tuples(e, 3)]
    assert tuples == [(1, 2), (2, 1), (1, 3)]
    e = registry.get_entry(3, 9)
    assert [env["h"] for env in registry.admissible_tuples(e, 5)] == list(registry.H_SWEEP)


def test_couplings_listed_per_entry():
    assert registry.get_entry(4, 13).couplings == (0, 1)
    assert registry.get_entry(3, 9).couplings == (0,)
    assert registry.get_entry(1, 16).couplings == ()


# ---------------------------------------------------------------------------
# instantiation dimensions against the frozen oracle values
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("table,item", sorted(SIMPLE_ROW_DIMS.keys(), key=lambda k: (k[0], k[1])))
def test_single_ambient_rows_match_frozen_dims(table, item):
    tnum = int(table[1:])
    entry = registry.get_entry(tnum, item)
    frozen = SIMPLE_ROW_DIMS[(table, item)]
    tuples = registry.admissible_tuples(entry, len(frozen))
    assert len(tuples) == len(frozen)
    for env, (vals, dim_g, dim_h) in zip(tuples, frozen):
        assert tuple(env[k] for k in entry.spec.indices) == vals
        rp = spec.instantiate(entry.spec, dict(env))
        assert rp.model.dim == dim_g
        assert rp.h_basis().dim == dim_h


@pytest.mark.parametrize("item", range(1, 10))
def test_paired_ambient_rows_dimensions(item):
    # [TRIVIAL] dim h must be the sum of the part dimensions plus centre lines
    entry = registry.get_entry(3, item)
    for env in registry.admissible_tuples(entry, 3):
        rp = spec.instantiate(entry.spec, dict(env))
        expect = sum(p.dim for p in rp.parts) + len(rp.centers)
        assert rp.h_basis().dim == expect
        assert rp.model.dim == sum(
            recipes.alg_dim(c.alg) if c.alg[0] != "so" or c.alg[1] != 2 else 1
            for c in rp.comps
        )


@pytest.mark.parametrize("item", range(1, 31))
def test_doubled_ambient_rows_instantiate(item):
    entry = registry.get_entry(4, item)
    count = 1 if any(a[0] in ("e7", "e8") for a in entry.ambient) else 3
    for env in registry.admissible_tuples(entry, count):
        rp = spec.instantiate(entry.spec, dict(env))
        assert rp.h_basis().dim == sum(p.dim for p in rp.parts) + len(rp.centers)


# ---------------------------------------------------------------------------
# subalgebra closure and the invariant complement
# ---------------------------------------------------------------------------

CLOSURE_CASES = [
    (1, 6, {"n": 2}), (1, 7, {"n": 3}), (1, 9, {"n": 1}), (1, 10, {"n": 2, "m": 1}),
    (1, 13, {}), (1, 16, {"n": 1, "m": 1}), (1, 17, {"n": 1}), (1, 21, {}),
    (2, 2, {"n": 5}), (2, 4, {}), (2, 9, {}), (2, 13, {"n": 3}), (2, 14, {}),
    (3, 3, {"n": 1, "m": 1}), (3, 8, {"n": 3}), (3, 8, {"n": 4}), (3, 9, {"h": ("so", 7)}),
    (4, 2, {"n": 1}), (4, 7, {"n": 0, "k": 3}), (4, 22, {"n": 0}), (4, 29, {}),
]


@pytest.mark.parametrize("table,item,vals", CLOSURE_CASES)
def test_h_is_a_subalgebra(table, item, vals):
    rp = _inst(table, item, **vals)
    assert ops.is_subalgebra(rp.model, rp.h_basis())


@pytest.mark.parametrize("table,item,vals", [
    (1, 5, {"n": 2}), (2, 12, {"n": 2}), (4, 11, {"n": 0}),
    (1, 16, {"n": 1, "m": 2}), (3, 3, {"n": 1, "m": 0}),
])
def test_killing_complement_is_invariant(table, item, vals):
    rp = _inst(table, item, **vals)
    h = rp.h_basis()
    m = ops.killing_complement(rp.model, h)
    assert h.dim + m.dim == rp.model.dim
    for v in rp.h_columns:
        for w in m.vectors:
            assert m.contains(rp.model.bracket_vec(v, list(w)))


# ---------------------------------------------------------------------------
# saturation: the scalar hull of the centre
# ---------------------------------------------------------------------------

SATURATION_CASES = [
    # (table, item, values, centre dim, hull dim, saturated)
    (2, 2, {"n": 5}, 2, 2, True),     # both scalar lines already present
    (2, 3, {"n": 5}, 1, 2, False),    # one generic line inside a 2-dim hull
    (1, 2, {"n": 1, "m": 2}, 1, 1, True),
    (1, 5, {"n": 1}, 0, 0, True),     # no centre at all
    (1, 6, {"n": 1}, 1, 1, True),
    (1, 7, {"n": 3}, 1, 1, True),
    (1, 9, {"n": 2}, 1, 1, True),
    (1, 10, {"n": 2, "m": 1}, 1, 1, True),
    (1, 14, {}, 1, 1, True),
    (1, 17, {"n": 2}, 1, 1, True),
    (1, 25, {}, 1, 1, True),
    (2, 8, {}, 1, 1, True),
]


@pytest.mark.parametrize("table,item,vals,z_dim,hull_dim,sat", SATURATION_CASES)
def test_saturation(table, item, vals, z_dim, hull_dim, sat):
    rp = _inst(table, item, **vals)
    res = spec.saturate(rp)
    assert (res.center_dim, res.hull_dim, res.saturated) == (z_dim, hull_dim, sat)
    assert len(res.h_saturated) == len(rp.semisimple_columns) + res.hull_dim
    if sat:
        basis = ops.SubspaceBasis(rp.model.dim, list(res.h_saturated))
        assert basis == rp.h_basis()


def test_saturated_hull_is_central():
    rp = _inst(2, 3, n=5)
    res = spec.saturate(rp)
    for v in res.hull.vectors:
        for col in rp.h_columns:
            assert not any(rp.model.bracket_vec(list(v), col))


# ---------------------------------------------------------------------------
# couple / decompose round trips
# ---------------------------------------------------------------------------


def test_couple_adds_a_diagonal_component():
    base = registry.get_entry(2, 12).spec  # sp(2n) > sp(2n-2)
    coupled = spec.couple(base, 0)
    rp = spec.instantiate(coupled, {"n": 2})
    assert [c.alg for c in rp.comps] == [("sp", 4), ("sp", 2)]
    assert rp.dim_h == 3
    assert rp.projection_rank(0, 0) == 3
    assert rp.projection_rank(0, 1) == 3


def test_couple_with_explicit_recipe():
    base = registry.get_entry(2, 14).spec  # principal sl2 in sp4
    coupled = spec.couple(
        base, 0, ambient=("sl", "3"), recipe=spec.EmbeddingRecipe("sym_power_sl2", 0, 2)
    )
    rp = spec.instantiate(coupled, {})
    assert [c.alg for c in rp.comps] == [("sp", 4), ("sl", 3)]
    assert rp.dim_h == 3
    assert rp.projection_rank(0, 1) == 3


@pytest.mark.parametrize("table,item,vals", [
    (2, 12, {"n": 3}), (4, 13, {"n": 1, "m": 0}), (3, 7, {"n": 2}), (1, 6, {"n": 2}),
])
def test_decompose_round_trip(table, item, vals):
    rp = _inst(table, item, **vals)
    concrete = spec.decompose(rp)
    rp2 = spec.instantiate(concrete, {})
    assert rp2.h_basis() == rp.h_basis()
    assert [c.alg for c in rp2.comps] == [c.alg for c in rp.comps]


# ---------------------------------------------------------------------------
# projections of parts onto ambient components
# ---------------------------------------------------------------------------


def test_projections_of_self_paired_parts_are_surjective():
    rp = _inst(3, 9, h=("sp", 4))
    assert rp.projection_rank(0, 0) == 10
    assert rp.projection_rank(0, 1) == 10
    rp = _inst(4, 30)
    assert all(rp.projection_rank(0, k) == 8 for k in range(3))


def test_semisimple_part_components_project_iso_or_zero():
    # a part placed in several components projects onto each with full rank
    # or rank zero, never something in between
    for table, item, vals in [(4, 2, {"n": 1}), (4, 23, {"n": 0}), (3, 5, {"n": 0, "m": 1})]:
        rp = _inst(table, item, **vals)
        for i, part in enumerate(rp.parts):
            if part.is_torus or part.dim == 0:
                continue
            for k in range(len(rp.comps)):
                assert rp.projection_rank(i, k) in (0, part.dim)


# ---------------------------------------------------------------------------
# placement recipes not used by the catalogue
# ---------------------------------------------------------------------------


def test_tensor_window_gives_a_subalgebra():
    model, comps = recipes.realize_ambient([("sl", 6)])
    win = comps[0].alloc_plain(6)
    left = models.classical_model("sl", 2)
    right = models.classical_model("sl", 3)
    lc, rc = recipes.tensor_columns(model, comps[0], win, left, right)
    basis = ops.SubspaceBasis(model.dim, lc + rc)
    assert basis.dim == 11  # [TRIVIAL] sl2 (+) sl3, factors commute
    assert ops.is_subalgebra(model, basis)


def test_adjoint_into_defining_window():
    model, comps = recipes.realize_ambient([("sl", 3)])
    win = comps[0].alloc_plain(3)
    cols = recipes.adjoint_defining_columns(
        model, comps[0], win, models.classical_model("sl", 2)
    )
    basis = ops.SubspaceBasis(model.dim, cols)
    assert basis.dim == 3
    assert ops.is_subalgebra(model, basis)


def test_unknown_recipe_and_bad_window_errors():
    entry = registry.get_entry(1, 1)
    with pytest.raises(PairError):
        spec.instantiate(entry.spec, {"n": 1})  # constraint n >= 2
    with pytest.raises(PairError):
        spec.instantiate(entry.spec, {"n": 2, "m": 3})  # unknown index
    model, comps = recipes.realize_ambient([("sp", 4)])
    with pytest.raises(PairError):
        comps[0].alloc_iso(3, "sp")  # odd symplectic window
    with pytest.raises(PairError):
        comps[0].alloc_iso(6, "sp")  # wider than the component
