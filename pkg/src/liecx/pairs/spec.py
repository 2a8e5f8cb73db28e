"""Pair descriptions and their realization as subalgebra bases.

A :class:`PairSpec` describes a reductive pair symbolically: ambient
components with size expressions, parts carrying one placement recipe
per target component, and centre lines given by window weights.
:func:`instantiate` evaluates the sizes, realizes every placement and
returns a :class:`RealizedPair` with verified coordinate columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from liecx.liealg import ops
from liecx.pairs import recipes
from liecx.pairs.recipes import PairError, Window

ZERO = Fraction(0)

_EVAL_ENV = {"__builtins__": {}, "d": lambda a, b: 1 if a == b else 0}


def eval_expr(expr, env):
    try:
        return eval(expr, _EVAL_ENV, dict(env))
    except Exception as exc:  # noqa: BLE001 - surfaced as a pair error
        raise PairError(f"cannot evaluate {expr!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# symbolic description
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddingRecipe:
    """One placement of a part into one ambient component."""

    kind: str  # block_direct_sum | sym_power_sl2 | root_subsystem |
    #            diagram_fixed_points | hardcoded | adjoint_into_defining |
    #            tensor_product
    target: int
    param: object = None


@dataclass(frozen=True)
class PartSpec:
    alg: tuple  # (kind, size expression); kind "$h" defers to the values
    recipes: tuple


@dataclass(frozen=True)
class CenterSpec:
    style: str  # "diag" | "pairs" | "zc"
    target: int
    weights: tuple = ()  # ((ref, weight expression), ...); ref like "p0", "l1", "f0"


@dataclass(frozen=True)
class PairSpec:
    ambient: tuple
    parts: tuple
    centers: tuple = ()
    indices: tuple = ()
    constraint: str = "True"
    extras: tuple = ()  # ((name, default expression), ...)


def build_env(spec: PairSpec, values=None):
    """Index environment: supplied values with spec defaults filled in."""
    values = dict(values or {})
    env = {}
    for name in spec.indices:
        if name == "h":
            if "h" not in values:
                raise PairError("this entry needs an algebra value h=...")
            env["h"] = values.pop("h")
        else:
            if name not in values:
                raise PairError(f"missing index value {name}")
            env[name] = int(values.pop(name))
    for name, default in spec.extras:
        env[name] = int(values.pop(name)) if name in values else eval_expr(default, env)
    if values:
        raise PairError(f"unknown index values {sorted(values)}")
    if not bool(eval_expr(spec.constraint, env)):
        raise PairError(f"index values violate the entry constraint {spec.constraint!r}")
    return env


def _eval_alg(alg, env):
    kind, size = alg
    if kind == "$h":
        return tuple(env["h"])
    return (kind, int(eval_expr(str(size), env)))


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------


@dataclass
class Placement:
    target: int
    recipe: EmbeddingRecipe
    columns: tuple
    window: object = None


@dataclass
class RealizedPart:
    alg: tuple
    model: object  # LieAlgebraModel | "torus" | None
    placements: tuple
    columns: tuple

    @property
    def dim(self):
        return len(self.columns)

    @property
    def is_torus(self):
        return self.model == "torus"


class RealizedPair:
    """A pair (g, h) with h realized as coordinate columns in the model of g."""

    def __init__(self, spec, env, model, comps, parts, centers):
        self.spec = spec
        self.env = env
        self.model = model
        self.comps = comps
        self.parts = parts
        self.centers = centers  # list of (CenterSpec, column)
        self._basis = None

    @property
    def h_columns(self):
        cols = []
        for part in self.parts:
            cols.extend(part.columns)
        cols.extend(col for _, col in self.centers)
        return cols

    @property
    def center_columns(self):
        """Columns of the centre of h: explicit centre lines plus torus parts."""
        cols = [col for _, col in self.centers]
        for part in self.parts:
            if part.is_torus:
                cols.extend(part.columns)
        return cols

    @property
    def semisimple_columns(self):
        cols = []
        for part in self.parts:
            if not part.is_torus:
                cols.extend(part.columns)
        return cols

    @property
    def dim_h(self):
        return len(self.h_columns)

    def h_basis(self):
        if self._basis is None:
            self._basis = ops.SubspaceBasis(self.model.dim, self.h_columns)
        return self._basis

    def projection_rank(self, part_idx, target):
        """Rank of the part's columns restricted to one ambient component."""
        part = self.parts[part_idx]
        for pl in part.placements:
            if pl.target == target:
                return recipes.projection_rank(list(pl.columns), self.comps[target].blocks)
        return 0

    def __repr__(self):
        gname = "+".join(f"{k}{n}" for k, n in (c.alg for c in self.comps))
        return f"RealizedPair({gname}, dim_h={self.dim_h})"


def _window_width(alg, pmodel):
    if pmodel == "torus":
        return 2
    if pmodel is None:
        kind, n = alg
        return max(n, 0) if kind in ("sl", "so", "sp") else 0
    return pmodel.matsize


def _part_matrices(pmodel):
    return [pmodel.sparse_matrix(i) for i in range(pmodel.dim)]


def _place(model, comp, alg, pmodel, recipe):
    """Realize one placement; returns (columns, window, pmodel, verified)."""
    kind = recipe.kind
    if kind == "block_direct_sum" and recipe.param == "paired":
        if comp.style == "expanded":
            # gl_1 inside an expanded so_3: the window is a Cartan line
            if alg != ("sl", 1):
                raise PairError("expanded components only take scalar paired windows")
            return [], Window("torus"), pmodel, True
        if comp.style not in ("so", "sp") or alg[0] != "sl":
            raise PairError("paired windows place sl parts in so/sp components")
        width = _window_width(alg, pmodel)
        win = comp.alloc_pairs(width, "paired")
        if pmodel in (None, "torus"):
            return [], win, pmodel, True
        cols = recipes.paired_columns(model, comp, win, _part_matrices(pmodel), width)
        return cols, win, pmodel, False

    if kind == "block_direct_sum":
        width = _window_width(alg, pmodel)
        if comp.style == "sl":
            win = comp.alloc_plain(width)
            if pmodel == "torus":
                terms = [([win.positions[0]], Fraction(1)), ([win.positions[1]], Fraction(-1))]
                return [recipes.diag_center_column(model, comp, terms)], win, pmodel, True
            if pmodel is None:
                return [], win, pmodel, True
            cols = recipes.plain_columns(model, comp, win, _part_matrices(pmodel), width)
            return cols, win, pmodel, False
        if comp.style in ("so", "sp"):
            if pmodel == "torus":
                win = comp.alloc_pairs(1, "torus")
                col = recipes.pair_center_column(model, comp, [(win.pairs, Fraction(1))])
                return [col], win, pmodel, True
            if pmodel is None:
                if width == 0:
                    return [], Window("none"), pmodel, True
                win = comp.alloc_iso(width, "so") if comp.style == "so" else None
                if win is None:
                    raise PairError("degenerate part does not fit an sp component")
                return [], win, pmodel, True
            form = alg[0]
            if form == "sl":
                if pmodel.matsize != 2 or comp.style != "sp":
                    raise PairError("only sl2 parts take symplectic block windows")
                form = "sp"
            win = comp.alloc_iso(width, form)
            cols = recipes.iso_columns(model, comp, win, _part_matrices(pmodel), width)
            return cols, win, pmodel, False
        if comp.style == "expanded":
            if pmodel == "torus":
                return [recipes.expanded_torus_column(model, comp)], None, pmodel, True
            if pmodel is None:
                return [], None, pmodel, True
            return recipes.expanded_columns(model, comp, pmodel), None, pmodel, True
        # adjoint or g2-defining component: only the identity placement
        if (comp.style == "g2def" and alg[0] == "g2") or (
            comp.style == "adjoint" and alg[0] == comp.alg[0]
        ):
            return recipes.identity_columns(model, comp, pmodel), None, pmodel, True
        raise PairError(f"no block placement of {alg} in a {comp.alg} component")

    if kind == "sym_power_sl2":
        k = int(recipe.param)
        if pmodel in (None, "torus") or pmodel.matsize != 2:
            raise PairError("symmetric power recipes need an sl2 part")
        if comp.style == "sl":
            win = comp.alloc_plain(k + 1)
            cols = recipes.plain_columns(
                model, comp, win, recipes.sym_plain_matrices(pmodel, k), k + 1
            )
            return cols, win, pmodel, False
        if comp.style == "so" and k == 2:
            win = comp.alloc_iso(3, "so")
        elif comp.style == "sp" and k == 3:
            win = comp.alloc_iso(4, "sp")
        else:
            raise PairError(f"symmetric power {k} does not fit a {comp.alg} component")
        cols = recipes.iso_columns(model, comp, win, recipes.sym_power_matrices(pmodel, k), k + 1)
        return cols, win, pmodel, False

    if kind == "root_subsystem":
        cols = recipes.subsystem_columns(model, comp, recipe.param, pmodel)
        return cols, None, pmodel, True

    if kind == "diagram_fixed_points":
        source, cols = recipes.fixed_columns(model, comp, recipe.param)
        return cols, None, source, True

    if kind == "hardcoded":
        name = recipe.param
        if name == "g2v7":
            if comp.style != "so":
                raise PairError("the 7-dim window needs an so component")
            win = comp.alloc_iso(7, "so")
            cols = recipes.iso_columns(model, comp, win, _part_matrices(pmodel), 7)
            return cols, win, pmodel, False
        if name == "spin7":
            if comp.style != "so":
                raise PairError("the spin window needs an so component")
            source, mats = recipes.spin_matrices()
            win = comp.alloc_iso(8, "so")
            cols = recipes.iso_columns(model, comp, win, mats, 8)
            return cols, win, source, False
        source, cols = recipes.fixed_columns(model, comp, name)
        return cols, None, source, True

    if kind == "adjoint_into_defining":
        if comp.style != "sl":
            raise PairError("adjoint-into-defining placements need an sl component")
        win = comp.alloc_plain(pmodel.dim)
        cols = recipes.adjoint_defining_columns(model, comp, win, pmodel)
        return cols, win, pmodel, False

    raise PairError(f"unknown recipe kind {recipe.kind!r}")


def _verify_columns(model, pmodel, cols):
    for i in range(pmodel.dim):
        for j in range(i + 1, pmodel.dim):
            expected = [ZERO] * model.dim
            for k, c in pmodel.bracket_coords(i, j):
                expected = [a + c * b for a, b in zip(expected, cols[k])]
            if model.bracket_vec(cols[i], cols[j]) != expected:
                raise PairError(f"placement violates the bracket at pair ({i}, {j})")


def instantiate(spec: PairSpec, values=None, check=True) -> RealizedPair:
    """Realize a pair description at concrete index values."""
    env = build_env(spec, values)
    algs = [_eval_alg(a, env) for a in spec.ambient]
    model, comps = recipes.realize_ambient(algs)
    parts = []
    for pspec in spec.parts:
        alg = _eval_alg(pspec.alg, env)
        pmodel = recipes.part_model(alg)
        placements = []
        summed = None
        seen_targets = set()
        for rec in pspec.recipes:
            if rec.target in seen_targets:
                raise PairError("one placement per component per part")
            seen_targets.add(rec.target)
            comp = comps[rec.target]
            cols, win, pmodel_used, verified = _place(model, comp, alg, pmodel, rec)
            if win is not None:
                comp.windows.append(win)
            if cols and check and not verified:
                _verify_columns(model, pmodel_used, cols)
            pmodel = pmodel_used
            placements.append(Placement(rec.target, rec, tuple(tuple(c) for c in cols)))
            if cols:
                if summed is None:
                    summed = [list(c) for c in cols]
                else:
                    summed = [
                        [a + b for a, b in zip(u, v)] for u, v in zip(summed, cols)
                    ]
        parts.append(
            RealizedPart(alg, pmodel, tuple(placements), tuple(tuple(c) for c in (summed or [])))
        )

    semisimple = []
    for part in parts:
        if not part.is_torus:
            semisimple.extend(part.columns)

    centers = []
    for cspec in spec.centers:
        comp = comps[cspec.target]
        if cspec.style == "zc":
            basis = recipes.fold_centralizer(model, semisimple)
            if basis.dim != 1:
                raise PairError(f"centralizer is {basis.dim}-dimensional, expected a line")
            centers.append((cspec, list(basis.vectors[0])))
            continue
        if comp.style == "expanded":
            # the only scalar line an expanded so_3 offers is its Cartan
            weight = Fraction(eval_expr(str(cspec.weights[0][1]), env))
            col = recipes.expanded_torus_column(model, comp)
            centers.append((cspec, [weight * v for v in col]))
            continue
        terms = []
        for ref, expr in cspec.weights:
            weight = Fraction(eval_expr(str(expr), env))
            item = _resolve_ref(comp, ref)
            terms.append((item, weight))
        if cspec.style == "diag":
            if comp.style != "sl":
                raise PairError("diag centres live on sl components")
            centers.append((cspec, recipes.diag_center_column(model, comp, terms)))
        elif cspec.style == "pairs":
            if comp.style not in ("so", "sp"):
                raise PairError("pair-weight centres live on so/sp components")
            centers.append((cspec, recipes.pair_center_column(model, comp, terms)))
        else:
            raise PairError(f"unknown centre style {cspec.style!r}")

    rp = RealizedPair(spec, env, model, comps, tuple(parts), tuple(centers))
    if check:
        _check_realized(rp)
    return rp


def _resolve_ref(comp, ref):
    kind, idx = ref[0], int(ref[1:])
    if kind == "p":
        win = comp.windows[idx]
        if comp.style == "sl":
            return win
        if win.style in ("paired", "torus"):
            return win.pairs
        raise PairError(f"window {ref} carries no scalar weight")
    if kind == "l":
        return comp.leftover_lines()[idx]
    if kind == "f":
        return [comp.free_pairs()[idx]]
    raise PairError(f"unknown window reference {ref!r}")


def _check_realized(rp):
    expected = sum(p.dim for p in rp.parts) + len(rp.centers)
    if rp.h_basis().dim != expected:
        raise PairError(
            f"columns are dependent: got dim {rp.h_basis().dim}, expected {expected}"
        )
    model = rp.model
    h_cols = rp.h_columns
    for _, z in rp.centers:
        for col in h_cols:
            if any(model.bracket_vec(z, col)):
                raise PairError("a centre column fails to commute with h")


# ---------------------------------------------------------------------------
# operations on specs and realized pairs
# ---------------------------------------------------------------------------


def couple(spec: PairSpec, part_idx: int, ambient=None, recipe=None) -> PairSpec:
    """Add one more ambient component and place the chosen part into it too.

    By default the part is coupled into a fresh copy of itself by a block
    placement; ``ambient=(kind, size-expr)`` and ``recipe`` override that.
    """
    part = spec.parts[part_idx]
    new_target = len(spec.ambient)
    new_comp = tuple(ambient) if ambient is not None else part.alg
    if recipe is None:
        recipe = EmbeddingRecipe("block_direct_sum", new_target)
    else:
        recipe = EmbeddingRecipe(recipe.kind, new_target, recipe.param)
    parts = list(spec.parts)
    parts[part_idx] = PartSpec(part.alg, part.recipes + (recipe,))
    return PairSpec(
        ambient=spec.ambient + (new_comp,),
        parts=tuple(parts),
        centers=spec.centers,
        indices=spec.indices,
        constraint=spec.constraint,
        extras=spec.extras,
    )


def decompose(rp: RealizedPair) -> PairSpec:
    """Concrete spec recovered from a realized pair (all sizes literal)."""
    ambient = tuple((c.alg[0], str(c.alg[1])) for c in rp.comps)
    parts = []
    for part in rp.parts:
        recs = tuple(
            EmbeddingRecipe(pl.recipe.kind, pl.target, pl.recipe.param)
            for pl in part.placements
        )
        parts.append(PartSpec((part.alg[0], str(part.alg[1])), recs))
    centers = []
    for cspec, _ in rp.centers:
        weights = tuple(
            (ref, str(eval_expr(str(expr), rp.env))) for ref, expr in cspec.weights
        )
        centers.append(CenterSpec(cspec.style, cspec.target, weights))
    return PairSpec(ambient=ambient, parts=tuple(parts), centers=tuple(centers))


def couplings(spec: PairSpec):
    """Indices of the parts placed into more than one ambient component."""
    return tuple(i for i, p in enumerate(spec.parts) if len(p.recipes) > 1)


@dataclass
class SaturationResult:
    center_dim: int
    hull_dim: int
    saturated: bool
    hull: object  # SubspaceBasis
    h_saturated: tuple

    def __bool__(self):
        return self.saturated


def saturate(rp: RealizedPair) -> SaturationResult:
    """Scalar-torus hull of the centre of h.

    The hull is the centre of the full centralizer z_g(h): the largest
    torus acting by a scalar on every irreducible summand that the centre
    already separates.  The pair is saturated when the centre fills it.
    """
    z_cols = rp.center_columns
    if not z_cols:
        hull = ops.SubspaceBasis(rp.model.dim, [])
        return SaturationResult(0, 0, True, hull, tuple(rp.h_columns))
    zg = recipes.fold_centralizer(rp.model, rp.h_columns)
    hull = recipes.fold_centralizer(rp.model, list(zg.vectors), within=zg)
    for col in z_cols:
        if not hull.contains(col):
            raise PairError("centre escapes its scalar hull")
    z_dim = ops.SubspaceBasis(rp.model.dim, z_cols).dim
    h_sat = list(rp.semisimple_columns) + [list(v) for v in hull.vectors]
    return SaturationResult(z_dim, hull.dim, z_dim == hull.dim, hull, tuple(h_sat))
