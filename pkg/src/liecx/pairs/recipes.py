"""Placement recipes: realizing part algebras inside ambient components.

An ambient algebra is a direct sum of classical matrix blocks (with the
split antidiagonal forms), the 7x7 G2 block, and adjoint exceptional
blocks.  Each part of a subalgebra is placed into one or more ambient
components by a named recipe; the builders here produce ambient
coordinate columns for the part's basis together with the window
bookkeeping needed for centre weights.

Window conventions inside an ``so``/``sp`` component of size N: column
positions pair up as (q, N-1-q); windows consume pairs outermost first.
An odd-width orthogonal window needs a norm vector for its middle slot
and takes, in order of preference: the true middle column, the leftover
half of a previously split pair (flipping the window's form scale to
-1), or a fresh pair split as e_q + e_qbar/2 (leaving the minus half
behind as a line).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from liecx import rootsys
from liecx.liealg import embed
from liecx.liealg.linalg import rank_exact
from liecx.liealg.models import build_model, classical_model

ZERO = Fraction(0)
ONE = Fraction(1)

_EXCEPTIONAL = {"g2": ("G", 2), "f4": ("F", 4), "e6": ("E", 6), "e7": ("E", 7), "e8": ("E", 8)}
_EXC_DIM = {"g2": 14, "f4": 52, "e6": 78, "e7": 133, "e8": 248}


class PairError(ValueError):
    """Unrealizable placement or malformed pair description."""


# ---------------------------------------------------------------------------
# part algebras
# ---------------------------------------------------------------------------


def alg_dim(alg):
    """Dimension of a part algebra token; degenerate sizes give 0."""
    kind, n = alg
    if kind in _EXC_DIM:
        return _EXC_DIM[kind]
    if n <= 0:
        return 0
    if kind == "sl":
        return n * n - 1
    if kind == "so":
        return n * (n - 1) // 2
    if kind == "sp":
        return n * (n + 1) // 2 if n % 2 == 0 else 0
    raise PairError(f"unknown algebra kind {kind!r}")


def alg_rank(alg):
    """Reductive rank of a part algebra token."""
    kind, n = alg
    if kind in _EXC_DIM:
        return _EXCEPTIONAL[kind][1]
    if n <= 0:
        return 0
    if kind == "sl":
        return n - 1
    if kind == "so":
        return n // 2
    if kind == "sp":
        return n // 2
    raise PairError(f"unknown algebra kind {kind!r}")


@lru_cache(maxsize=None)
def part_model(alg):
    """Model of a part algebra; ``"torus"`` for so_2, ``None`` if zero-dim."""
    kind, n = alg
    if kind == "g2":
        return embed.g2_defining_model()
    if kind in _EXCEPTIONAL:
        return build_model([_EXCEPTIONAL[kind]], "adjoint")
    if kind == "sl":
        return classical_model("sl", n) if n >= 2 else None
    if kind == "so":
        if n == 2:
            return "torus"
        return classical_model("so", n) if n >= 3 else None
    if kind == "sp":
        return classical_model("sp", n) if n >= 2 and n % 2 == 0 else None
    raise PairError(f"unknown algebra kind {kind!r}")


def _unit(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


# ---------------------------------------------------------------------------
# ambient components
# ---------------------------------------------------------------------------


class AmbientComp:
    """One ambient summand: its blocks in the assembled model plus window state."""

    __slots__ = (
        "index",
        "alg",
        "style",
        "blocks",
        "single",
        "windows",
        "_next",
        "_pairs",
        "_middle",
        "_minus",
    )

    def __init__(self, index, alg, style, blocks, single):
        self.index = index
        self.alg = alg
        self.style = style  # "sl" | "so" | "sp" | "expanded" | "adjoint" | "g2def"
        self.blocks = blocks
        self.single = single
        self.windows = []
        n = alg[1]
        self._next = 0
        self._pairs = [(q, n - 1 - q) for q in range(n // 2)] if style in ("so", "sp") else []
        self._middle = (n - 1) // 2 if style == "so" and n % 2 == 1 else None
        self._minus = None

    @property
    def size(self):
        return self.alg[1]

    @property
    def start(self):
        return self.blocks[0].start

    # -- window allocation ------------------------------------------------

    def alloc_plain(self, width):
        if self.style != "sl":
            raise PairError("plain windows live in sl components")
        if self._next + width > self.size:
            raise PairError("component is full")
        pos = list(range(self._next, self._next + width))
        self._next += width
        return Window("plain", positions=pos)

    def alloc_pairs(self, count, style):
        if len(self._pairs) < count:
            raise PairError("component is out of column pairs")
        pairs, self._pairs = self._pairs[:count], self._pairs[count:]
        return Window(style, pairs=pairs)

    def alloc_iso(self, width, form):
        """Isometric window of the given width; ``form`` is "so" or "sp"."""
        if self.style not in ("so", "sp"):
            raise PairError("isometric windows live in so/sp components")
        if form == "sp" and (width % 2 or self.style != "sp"):
            raise PairError("symplectic windows need even width in an sp component")
        if form == "so" and self.style != "so":
            raise PairError("orthogonal windows live in so components")
        win = self.alloc_pairs(width // 2, "iso")
        win.form = form
        if width % 2:
            win.middle, win.scale = self._take_middle()
        return win

    def _take_middle(self):
        if self._middle is not None:
            pos, self._middle = self._middle, None
            return {pos: ONE}, ONE
        if self._minus is not None:
            vec, self._minus = self._minus, None
            return vec, Fraction(-1)
        if not self._pairs:
            raise PairError("no middle column available for an odd window")
        q, qb = self._pairs.pop(0)
        self._minus = {q: ONE, qb: Fraction(-1, 2)}
        return {q: ONE, qb: Fraction(1, 2)}, ONE

    # -- leftovers (after all parts are placed) ----------------------------

    def free_pairs(self):
        return list(self._pairs)

    def leftover_lines(self):
        if self.style == "sl":
            return [{p: ONE} for p in range(self._next, self.size)]
        out = []
        if self._middle is not None:
            out.append({self._middle: ONE})
        if self._minus is not None:
            out.append(dict(self._minus))
        return out


class Window:
    """Columns of one placement inside a component."""

    __slots__ = ("style", "positions", "pairs", "middle", "scale", "form")

    def __init__(self, style, positions=None, pairs=None):
        self.style = style  # "plain" | "iso" | "paired" | "torus" | "none"
        self.positions = positions or []
        self.pairs = pairs or []
        self.middle = None
        self.scale = ONE
        self.form = None


def realize_ambient(algs):
    """Build the ambient model for component tokens; returns (model, comps)."""
    build_comps, kinds, plan = [], [], []
    for alg in algs:
        kind, n = alg
        if kind in _EXCEPTIONAL:
            style = "g2def" if kind == "g2" else "adjoint"
            plan.append((alg, style, 1, None))
            build_comps.append(_EXCEPTIONAL[kind])
            kinds.append("defining" if kind == "g2" else "adjoint")
        elif kind == "sl":
            if n < 2:
                raise PairError(f"ambient sl component needs size >= 2, got {n}")
            plan.append((alg, "sl", 1, ("sl", n)))
            build_comps.append(("A", n - 1))
            kinds.append("defining")
        elif kind == "sp":
            if n < 2 or n % 2:
                raise PairError(f"ambient sp component needs even size >= 2, got {n}")
            single = ("sl", 2) if n == 2 else ("sp", n)
            plan.append((alg, "sp", 1, single))
            build_comps.append(("A", 1) if n == 2 else ("C", n // 2))
            kinds.append("defining")
        elif kind == "so":
            if n in (3, 4):
                blocks = 1 if n == 3 else 2
                plan.append((alg, "expanded", blocks, None))
                build_comps.extend([("A", 1)] * blocks)
                kinds.extend(["defining"] * blocks)
                continue
            if n < 5:
                raise PairError(f"ambient so component needs size >= 3, got {n}")
            plan.append((alg, "so", 1, ("so", n)))
            build_comps.append(("B", n // 2) if n % 2 else ("D", n // 2))
            kinds.append("defining")
        else:
            raise PairError(f"unknown algebra kind {kind!r}")
    model = build_model(build_comps, kinds)
    comps, at = [], 0
    for i, (alg, style, nblocks, single) in enumerate(plan):
        blocks = model.blocks[at : at + nblocks]
        single_model = classical_model(*single) if single else None
        if style == "g2def":
            single_model = embed.g2_defining_model()
        comps.append(AmbientComp(i, alg, style, blocks, single_model))
        at += nblocks
    return model, comps


# ---------------------------------------------------------------------------
# matrix window builders
# ---------------------------------------------------------------------------


def _form_sign(style, n, pos):
    """J_N is antidiagonal: entry (pos, n-1-pos) carries this sign."""
    if style == "so":
        return ONE
    return ONE if pos < n // 2 else -ONE


def _local_coords(comp, sparse):
    """Coordinates of a component-local sparse matrix, shifted to the model."""
    coords = comp.single.matrix_coords(sparse)
    if coords is None:
        raise PairError("matrix does not lie in the component algebra")
    start = comp.start
    dim = start + comp.blocks[0].dim
    return [(start + i, v) for i, v in enumerate(coords) if v], dim


def _columns_from_local(model, comp, mats):
    out = []
    for sparse in mats:
        terms, _ = _local_coords(comp, sparse)
        col = [ZERO] * model.dim
        for i, v in terms:
            col[i] = v
        out.append(col)
    return out


def _dense_from_sparse(mat, w):
    out = [[ZERO] * w for _ in range(w)]
    for (r, c), v in mat.items():
        out[r][c] = v
    return out


def plain_columns(model, comp, window, mats, width):
    """Part matrices dropped at the window's positions of an sl component."""
    pos = window.positions
    cols = []
    for mat in mats:
        cols.append({(pos[r], pos[c]): v for (r, c), v in mat.items() if v})
    return _columns_from_local(model, comp, cols)


def iso_columns(model, comp, window, mats, width):
    """Isometric window: A = W X (cJ_w)^{-1} W^T J_N for each part matrix X."""
    n = comp.size
    w = width
    # window vectors, as sparse comp-local columns
    W = [None] * w
    for i, (q, qb) in enumerate(window.pairs):
        W[i] = {q: ONE}
        W[w - 1 - i] = {qb: window.scale}
    if w % 2:
        W[(w - 1) // 2] = window.middle
    # (c J_w)^{-1}: antidiagonal; for so J^2 = I, for sp J^2 = -I
    inv = [[ZERO] * w for _ in range(w)]
    for i in range(w):
        s = _form_sign(window.form, w, i)
        inv[i][w - 1 - i] = (s if window.form == "so" else -s) / window.scale
    out = []
    for mat in mats:
        X = _dense_from_sparse(mat, w)
        Y = [[sum(X[k][s] * inv[s][t] for s in range(w)) for t in range(w)] for k in range(w)]
        # M[k][t] = (Y W^T)[k][t] over ambient positions t
        M = [dict() for _ in range(w)]
        for k in range(w):
            for s in range(w):
                if Y[k][s]:
                    for t, v in W[s].items():
                        M[k][t] = M[k].get(t, ZERO) + Y[k][s] * v
        A = {}
        for k in range(w):
            for t, mv in M[k].items():
                j = n - 1 - t
                jv = mv * _form_sign(comp.style, n, t)
                if not jv:
                    continue
                for p, wv in W[k].items():
                    A[(p, j)] = A.get((p, j), ZERO) + wv * jv
        out.append({pos: v for pos, v in A.items() if v})
    return _columns_from_local(model, comp, out)


def paired_columns(model, comp, window, mats, size):
    """gl-style window: X acts on the upper positions, -X^T on their mirrors."""
    n = comp.size
    up = [q for q, _ in window.pairs]
    out = []
    for mat in mats:
        A = {}
        for (r, c), v in mat.items():
            if not v:
                continue
            A[(up[r], up[c])] = A.get((up[r], up[c]), ZERO) + v
            key = (n - 1 - up[c], n - 1 - up[r])
            A[key] = A.get(key, ZERO) - v
        out.append(A)
    return _columns_from_local(model, comp, out)


def pair_weight_matrix(comp, pairs, weight):
    """Sparse diag matrix with the given weight on each pair (q, qbar)."""
    A = {}
    for q, qb in pairs:
        A[(q, q)] = A.get((q, q), ZERO) + weight
        A[(qb, qb)] = A.get((qb, qb), ZERO) - weight
    return A


# ---------------------------------------------------------------------------
# symmetric powers of sl2
# ---------------------------------------------------------------------------


def sym2_matrix(X):
    """3x3 orthogonal-form image of a 2x2 traceless matrix."""
    a, b, c = X[0][0], X[0][1], X[1][0]
    return {
        (0, 0): 2 * a, (0, 1): b,
        (1, 0): 2 * c, (1, 2): -b,
        (2, 1): -2 * c, (2, 2): -2 * a,
    }


def sym3_matrix(X):
    """4x4 symplectic-form image of a 2x2 traceless matrix."""
    a, b, c = X[0][0], X[0][1], X[1][0]
    return {
        (0, 0): 3 * a, (0, 1): 3 * b,
        (1, 0): c, (1, 1): a, (1, 2): Fraction(-2, 3) * b,
        (2, 1): -6 * c, (2, 2): -a, (2, 3): -3 * b,
        (3, 2): -c, (3, 3): -3 * a,
    }


def sym_power_matrices(pmodel, k):
    """Window matrices of the sl2 basis under the k-th symmetric power."""
    if pmodel.matsize != 2:
        raise PairError("symmetric power recipes need an sl2 part")
    build = {2: sym2_matrix, 3: sym3_matrix}.get(k)
    if build is None:
        raise PairError(f"unsupported symmetric power {k}")
    mats = []
    for i in range(pmodel.dim):
        X = _dense_from_sparse(pmodel.sparse_matrix(i), 2)
        mats.append({pos: v for pos, v in build(X).items() if v})
    return mats


def sym_plain_matrices(pmodel, k):
    """Monomial-basis k-th symmetric power, for plain sl windows."""
    if pmodel.matsize != 2:
        raise PairError("symmetric power recipes need an sl2 part")
    mats = []
    for i in range(pmodel.dim):
        X = _dense_from_sparse(pmodel.sparse_matrix(i), 2)
        a, b, c = X[0][0], X[0][1], X[1][0]
        A = {}
        for j in range(k + 1):
            A[(j, j)] = (k - 2 * j) * a
            if j < k:
                A[(j, j + 1)] = (j + 1) * b
                A[(j + 1, j)] = (k - j) * c
        mats.append({pos: v for pos, v in A.items() if v})
    return mats


# ---------------------------------------------------------------------------
# further recipe builders (tensor / adjoint-into-defining)
# ---------------------------------------------------------------------------


def tensor_columns(model, comp, window, left_model, right_model):
    """Columns of sl_a (+) sl_b acting on a tensor window of width a*b.

    Returns the two column lists (left factor acting as X (x) I, right as
    I (x) Y) for a plain window inside an sl component.
    """
    a, b = left_model.matsize, right_model.matsize
    if len(window.positions) != a * b:
        raise PairError("tensor window width must be the product of the part sizes")
    pos = window.positions

    def embed_left(mat):
        return {(pos[r * b + t], pos[c * b + t]): v for (r, c), v in mat.items() for t in range(b)}

    def embed_right(mat):
        return {(pos[t * b + r], pos[t * b + c]): v for (r, c), v in mat.items() for t in range(a)}

    left = [embed_left(left_model.sparse_matrix(i)) for i in range(left_model.dim)]
    right = [embed_right(right_model.sparse_matrix(i)) for i in range(right_model.dim)]
    return (
        _columns_from_local(model, comp, left),
        _columns_from_local(model, comp, right),
    )


def adjoint_defining_columns(model, comp, window, pmodel):
    """Adjoint representation of the part dropped into a plain sl window."""
    if len(window.positions) != pmodel.dim:
        raise PairError("adjoint window width must equal the part dimension")
    pos = window.positions
    mats = []
    for i in range(pmodel.dim):
        A = {}
        for j in range(pmodel.dim):
            for k, c in pmodel.bracket_coords(i, j):
                A[(pos[k], pos[j])] = c
        mats.append(A)
    return _columns_from_local(model, comp, mats)


# ---------------------------------------------------------------------------
# root-subsystem and fixed sporadic placements
# ---------------------------------------------------------------------------


def _lowest(fam_key):
    theta = {
        "g2": (3, 2),
        "f4": (2, 3, 4, 2),
        "e6": (1, 2, 2, 3, 2, 1),
        "e7": (2, 2, 3, 4, 3, 2, 1),
        "e8": (2, 3, 4, 6, 5, 4, 3, 2),
    }[fam_key]
    return tuple(-c for c in theta)


def _simple(rank, i):
    return tuple(1 if k == i else 0 for k in range(rank))


_SUBSYSTEMS = {
    "g2.a2": ("g2", ((0, 1), (3, 1))),
    "g2.a1l": ("g2", ((3, 2),)),
    "g2.a1s": ("g2", ((1, 0),)),
    "f4.b4": ("f4", (_lowest("f4"), _simple(4, 0), _simple(4, 1), _simple(4, 2))),
    "f4.c3": ("f4", (_simple(4, 3), _simple(4, 2), _simple(4, 1))),
    "f4.a1": ("f4", (_lowest("f4"),)),
    "f4.d4": ("f4", ((0, 1, 0, 0), (0, 1, 2, 0), (0, 1, 2, 2), (1, 0, 0, 0))),
    "e6.a5": ("e6", tuple(_simple(6, i) for i in (0, 2, 3, 4, 5))),
    "e6.a1": ("e6", (_lowest("e6"),)),
    "e6.d5": ("e6", tuple(_simple(6, i) for i in range(5))),
    "e7.e6": ("e7", tuple(_simple(7, i) for i in range(6))),
    "e7.a7": ("e7", (_lowest("e7"),) + tuple(_simple(7, i) for i in (0, 2, 3, 4, 5, 6))),
    "e7.d6": ("e7", (_lowest("e7"),) + tuple(_simple(7, i) for i in (0, 2, 3, 1, 4))),
    "e7.d6a1": ("e7", (_simple(7, 6),)),
    "e8.d8": ("e8", (_lowest("e8"),) + tuple(_simple(8, i) for i in (7, 6, 5, 4, 3, 2, 1))),
    "e8.a1": ("e8", (_lowest("e8"),)),
    "e8.e7": ("e8", tuple(_simple(8, i) for i in range(7))),
}


def _inner_product(rs, a, b):
    ab = tuple(x + y for x, y in zip(a, b))
    return Fraction(rs.norm2(ab) - rs.norm2(a) - rs.norm2(b), 2)


def subsystem_columns(model, comp, tag, pmodel):
    """Chevalley-image placement of a part on a root subsystem of the component."""
    fam_key, gens = _SUBSYSTEMS[tag]
    if comp.alg[0] != fam_key:
        raise PairError(f"recipe {tag} does not apply to a {comp.alg[0]} component")
    rs = rootsys.root_system(*_EXCEPTIONAL[fam_key])
    sub = rootsys.root_subsystem(rs, gens)
    if len(sub.components) != 1 or len(pmodel.components) != 1:
        raise PairError("subsystem placements handle one simple part at a time")
    pf, pr = pmodel.components[0]
    sf, sr, _ = sub.components[0]
    if (sf, sr) != (pf, pr):
        raise PairError(f"subsystem {tag} has type {sf}{sr}, part is {pf}{pr}")
    gram = [[_inner_product(rs, a, b) for b in gens] for a in gens]
    perm = rootsys.match_simple_order(gram, pf, pr)
    ordered = [gens[perm[i]] for i in range(pr)]
    gcomp = comp.blocks[0].comp_start
    images = [[]]
    for root in ordered:
        neg = tuple(-c for c in root)
        images[0].append(
            (
                _unit(model.dim, model.root_index[(gcomp, root)]),
                _unit(model.dim, model.root_index[(gcomp, neg)]),
            )
        )
    hom = embed.hom_from_chevalley_images(pmodel, model, images)
    return [list(col) for col in hom.columns]


_FIXED = {"f4e6": embed.f4_in_e6, "sp8e6": embed.sp8_in_e6, "so9e6": embed.so9_in_e6}


def fixed_columns(model, comp, name):
    """Sporadic fixed embeddings into an e6 component; returns (part model, columns)."""
    build = _FIXED.get(name)
    if build is None:
        raise PairError(f"unknown fixed embedding {name!r}")
    _, hom = build()
    block = comp.blocks[0]
    if hom.target.dim != block.dim:
        raise PairError(f"fixed embedding {name} does not fit the component")
    cols = []
    for col in hom.columns:
        out = [ZERO] * model.dim
        for i, v in enumerate(col):
            if v:
                out[block.start + i] = v
        cols.append(out)
    return hom.source, cols


def spin_matrices():
    """(part model, 8x8 window matrices) of the triality-twisted so_7 in so_8."""
    hom = embed.spin7_in_so8()
    mats = [hom.target.vector_matrix(col) for col in hom.columns]
    return hom.source, mats


def identity_columns(model, comp, pmodel):
    """The part is the whole component (same algebra, same model data)."""
    block = comp.blocks[0]
    if pmodel.dim != block.dim:
        raise PairError("identity placement needs matching dimensions")
    return [_unit(model.dim, block.start + i) for i in range(pmodel.dim)]


def expanded_columns(model, comp, pmodel):
    """so_3/so_4 parts placed on expanded (sl2-block) so components."""
    blocks = comp.blocks
    sources = [c for c in pmodel.components]
    if any(c == "c" for c in sources):
        raise PairError("expanded placements need semisimple parts")
    if len(sources) == len(blocks):
        groups = [[b] for b in blocks]
    elif len(sources) == 1:
        groups = [list(blocks)]
    else:
        raise PairError("part does not match the expanded component")
    images = []
    for grp in groups:
        e_img = [ZERO] * model.dim
        f_img = [ZERO] * model.dim
        for b in grp:
            e_img = [x + y for x, y in zip(e_img, _unit(model.dim, model.root_index[(b.comp_start, (1,))]))]
            f_img = [x + y for x, y in zip(f_img, _unit(model.dim, model.root_index[(b.comp_start, (-1,))]))]
        images.append([(e_img, f_img)])
    hom = embed.hom_from_chevalley_images(pmodel, model, images)
    return [list(col) for col in hom.columns]


def expanded_torus_column(model, comp):
    """A Cartan line of an expanded so_3 component (so_2 part)."""
    block = comp.blocks[0]
    idx = next(i for i in model.cartan_indices if block.start <= i < block.start + block.dim)
    return _unit(model.dim, idx)


# ---------------------------------------------------------------------------
# centres and centralizers
# ---------------------------------------------------------------------------


def diag_center_column(model, comp, terms):
    """Traceless diagonal centre on an sl component.

    ``terms``: list of (window-or-line, weight); windows contribute their
    positions, leftover lines their single position.
    """
    A = {}
    for item, weight in terms:
        positions = item.positions if isinstance(item, Window) else list(item)
        for p in positions:
            A[(p, p)] = A.get((p, p), ZERO) + weight
    A = {pos: v for pos, v in A.items() if v}
    if sum(A.values()):
        raise PairError("centre weights must be traceless")
    return _columns_from_local(model, comp, [A])[0]


def pair_center_column(model, comp, terms):
    """Pair-weight centre on an so/sp component (paired windows, free pairs)."""
    A = {}
    for pairs, weight in terms:
        for pos, v in pair_weight_matrix(comp, pairs, weight).items():
            A[pos] = A.get(pos, ZERO) + v
    return _columns_from_local(model, comp, [{p: v for p, v in A.items() if v}])[0]


def fold_centralizer(model, columns, within=None):
    """Basis of {x in g (or `within`) : [x, c] = 0 for every column c}."""
    from liecx.liealg import ops

    if within is None:
        within = ops.SubspaceBasis(model.dim, [_unit(model.dim, i) for i in range(model.dim)])
    cols = sorted(columns, key=lambda c: sum(1 for v in c if v))
    if cols:
        # seed with a generic combination to shrink the constraint fast
        seed = [ZERO] * model.dim
        for j, col in enumerate(cols):
            seed = [a + (j + 1) * b for a, b in zip(seed, col)]
        within = ops.bracket_kernel(model, within, seed)
    for col in cols:
        if within.dim == 0:
            break
        within = ops.bracket_kernel(model, within, col)
    return within


def center_of(model, columns):
    """Centre of the subalgebra spanned by the given columns."""
    from liecx.liealg import ops

    sub = ops.SubspaceBasis(model.dim, [list(c) for c in columns])
    return fold_centralizer(model, list(sub.vectors), within=sub)


def projection_rank(columns, blocks):
    """Rank of the columns restricted to the rows of the given blocks."""
    rows = []
    for col in columns:
        row = []
        for b in blocks:
            row.extend(col[b.start : b.start + b.dim])
        rows.append(row)
    if not rows or not rows[0]:
        return 0
    return rank_exact(rows)
