"""Exact structure-constant models of split reductive Lie algebras.

A model fixes, once and for all, a basis of the algebra together with the
full bracket table in that basis, a weight grading (Cartan / root-vector /
central labels) and lazily computed Killing and matrix data.  Everything is
``Fraction``-exact.

Two model kinds exist per simple factor:

* ``defining`` — classical matrix algebras in their split realisations:
  ``sl(n)`` as traceless matrices, ``so(n)`` preserving the antidiagonal
  symmetric form, ``sp(n)`` preserving the antidiagonal alternating form
  (``+1`` upper half, ``-1`` lower half).  These forms make the diagonal
  matrices a split Cartan subalgebra, so all basis elements are integral
  matrices with at most two entries.
* ``adjoint`` — basis indexed by simple coroots and roots, brackets taken
  from the Chevalley constants of the root system.  Exceptional types are
  only available in this kind, except ``G2`` which additionally has a
  7-dimensional defining model (see :mod:`liecx.liealg.embed`).

Direct sums are block-diagonal; a ``"c"`` component is a one-dimensional
centre block.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from liecx import rootsys
from liecx.liealg.linalg import SpanSolver, solve_exact

SparseMat = dict[tuple[int, int], Fraction]


class ModelError(ValueError):
    """Invalid model request or inconsistent model data."""


class _Block:
    """One direct summand: a matrix block with its own basis range."""

    __slots__ = ("kind", "name", "start", "dim", "mat_offset", "matsize", "comp_start", "comp_count")

    def __init__(self, kind, name, start, dim, mat_offset, matsize, comp_start, comp_count):
        self.kind = kind
        self.name = name
        self.start = start
        self.dim = dim
        self.mat_offset = mat_offset
        self.matsize = matsize
        self.comp_start = comp_start
        self.comp_count = comp_count


class LieAlgebraModel:
    """Immutable basis-level description of a split reductive Lie algebra.

    Attributes of interest:

    ``components``    tuple of ``(family, rank)`` pairs and ``"c"`` markers.
    ``grading``       per basis index: ``("cartan", block)``,
                      ``("center", block)`` or ``("root", component, coords)``.
    ``bracket table`` sparse, accessed through :meth:`bracket_coords` /
                      :meth:`bracket_vec`.
    ``killing``       dense Killing matrix (lazy; exact trace form of the
                      adjoint representation).
    """

    def __init__(self, name, components, blocks, grading, brackets, sparse_matrices):
        self.name = name
        self.components = tuple(components)
        self.blocks = tuple(blocks)
        self.grading = tuple(grading)
        self.dim = len(grading)
        self.matsize = sum(b.matsize for b in self.blocks)
        self._brackets = brackets
        self._sparse = sparse_matrices
        self._killing = None
        self._solver = None
        self.root_index = {
            (lab[1], lab[2]): i for i, lab in enumerate(self.grading) if lab[0] == "root"
        }
        self.cartan_indices = tuple(i for i, lab in enumerate(self.grading) if lab[0] == "cartan")
        self.center_indices = tuple(i for i, lab in enumerate(self.grading) if lab[0] == "center")
        self.positive_indices = tuple(
            i
            for i, lab in enumerate(self.grading)
            if lab[0] == "root" and all(c >= 0 for c in lab[2])
        )

    # ----- classification helpers -------------------------------------

    @property
    def semisimple_components(self):
        return tuple(c for c in self.components if c != "c")

    @property
    def rank(self):
        """Rank of the semisimple part."""
        return sum(r for (_f, r) in self.semisimple_components)

    @property
    def num_positive(self):
        """Number of positive roots, summed over components."""
        return len(self.positive_indices)

    def component_system(self, idx):
        fam, rank = self.components[idx]
        return rootsys.root_system(fam, rank)

    # ----- brackets ----------------------------------------------------

    def bracket_coords(self, i, j):
        """``[b_i, b_j]`` as a sparse tuple of ``(index, coefficient)``."""
        if i == j:
            return ()
        if i < j:
            return self._brackets.get((i, j), ())
        return tuple((k, -c) for k, c in self._brackets.get((j, i), ()))

    def bracket_vec(self, x, y):
        """``[x, y]`` for coordinate vectors (full-length sequences)."""
        out = [Fraction(0)] * self.dim
        xs = [(i, v) for i, v in enumerate(x) if v]
        ys = [(j, w) for j, w in enumerate(y) if w]
        for i, v in xs:
            for j, w in ys:
                for k, c in self.bracket_coords(i, j):
                    out[k] += v * w * c
        return out

    # ----- matrices ----------------------------------------------------

    def sparse_matrix(self, i) -> SparseMat:
        """Basis matrix ``b_i`` as a sparse ``{(row, col): value}`` dict."""
        if self._sparse is not None:
            return self._sparse[i]
        # adjoint models: the representing matrices are the ad matrices
        mat: SparseMat = {}
        for j in range(self.dim):
            for k, c in self.bracket_coords(i, j):
                mat[(k, j)] = c
        return mat

    def basis_matrix(self, i):
        """Dense basis matrix as a tuple of row tuples."""
        mat = self.sparse_matrix(i)
        n = self.matsize if self._sparse is not None else self.dim
        dense = [[Fraction(0)] * n for _ in range(n)]
        for (r, c), v in mat.items():
            dense[r][c] = v
        return tuple(tuple(row) for row in dense)

    def vector_matrix(self, coords) -> SparseMat:
        """Sparse matrix of the element with the given coordinates."""
        out: SparseMat = {}
        for i, v in enumerate(coords):
            if v:
                for pos, e in self.sparse_matrix(i).items():
                    out[pos] = out.get(pos, Fraction(0)) + v * e
        return {pos: v for pos, v in out.items() if v}

    def matrix_coords(self, mat: SparseMat):
        """Coordinates of a (sparse) matrix in the model basis, or ``None``.

        Only available when every block is a defining matrix block.
        """
        if self._sparse is None:
            raise ModelError("matrix_coords requires a defining (matrix) model")
        if self._solver is None:
            rows = [_flatten(self._sparse[i], self.matsize) for i in range(self.dim)]
            self._solver = SpanSolver(rows)
        return self._solver.coordinates(_flatten(mat, self.matsize))

    # ----- killing form ------------------------------------------------

    @property
    def killing(self):
        if self._killing is None:
            self._killing = _killing_matrix(self)
        return self._killing

    # ----- serialization ------------------------------------------------

    def serialize(self):
        """Deterministic text dump of basis labels and the bracket table."""
        lines = [f"model {self.name}", f"dim {self.dim}", f"matsize {self.matsize}"]
        lines.append(
            "components " + " ".join("c" if c == "c" else f"{c[0]}{c[1]}" for c in self.components)
        )
        for i, lab in enumerate(self.grading):
            if lab[0] == "root":
                lines.append(f"b{i} root {lab[1]} " + ",".join(str(c) for c in lab[2]))
            else:
                lines.append(f"b{i} {lab[0]} {lab[1]}")
        for (i, j), terms in sorted(self._brackets.items()):
            rhs = " ".join(f"{k}:{c}" for k, c in terms)
            lines.append(f"[{i},{j}] {rhs}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"LieAlgebraModel({self.name}, dim={self.dim})"


def _flatten(mat: SparseMat, n):
    row = [Fraction(0)] * (n * n)
    for (r, c), v in mat.items():
        row[r * n + c] = v
    return row


# ---------------------------------------------------------------------------
# classical defining blocks
# ---------------------------------------------------------------------------


def _position_weight(kind, n, p):
    """epsilon-weight of matrix row/column position ``p`` (length n//2 tuple)."""
    if kind == "sl":
        w = [0] * n
        w[p] = 1
        return tuple(w)
    k = n // 2
    w = [0] * k
    if p < k:
        w[p] = 1
    elif p >= n - k:
        w[n - 1 - p] = -1
    return tuple(w)


def _form(kind, n) -> SparseMat:
    if kind == "so":
        return {(i, n - 1 - i): Fraction(1) for i in range(n)}
    return {
        (i, n - 1 - i): Fraction(1) if i < n // 2 else Fraction(-1) for i in range(n)
    }


def _cond(mat: SparseMat, form: SparseMat) -> SparseMat:
    """``A^T J + J A`` for sparse ``A`` and ``J``."""
    out: SparseMat = {}
    for (p, q), a in mat.items():
        for (u, v), j in form.items():
            if u == p:  # (A^T J)_{q, v} picks A_{p, q} J_{p, v}
                out[(q, v)] = out.get((q, v), Fraction(0)) + a * j
            if v == p:  # (J A)_{u, q} picks J_{u, p} A_{p, q}
                out[(u, q)] = out.get((u, q), Fraction(0)) + j * a
    return {pos: c for pos, c in out.items() if c}


def _classical_elements(kind, n):
    """Basis matrices with epsilon-weights for one split classical algebra.

    Returns ``(cartan, roots)`` where ``cartan`` is a list of sparse diagonal
    matrices and ``roots`` a list of ``(weight, sparse matrix)``.
    """
    if kind == "sl":
        if n < 2:
            raise ModelError(f"sl({n}) is not supported (need n >= 2)")
        cartan = [
            {(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)} for i in range(n - 1)
        ]
        roots = []
        for p in range(n):
            for q in range(n):
                if p != q:
                    w = tuple(
                        a - b
                        for a, b in zip(_position_weight("sl", n, p), _position_weight("sl", n, q))
                    )
                    roots.append((w, {(p, q): Fraction(1)}))
        return cartan, roots
    if kind == "so":
        if n < 3:
            raise ModelError(f"so({n}) has no semisimple model (need n >= 3)")
    elif kind == "sp":
        if n < 2 or n % 2:
            raise ModelError(f"sp({n}) requires even n >= 2")
    else:
        raise ModelError(f"unknown classical kind {kind!r}")
    form = _form(kind, n)
    cartan, roots = [], []
    for p in range(n):
        for q in range(n):
            p2, q2 = n - 1 - q, n - 1 - p
            if (p2, q2) < (p, q):
                continue
            if (p, q) == (p2, q2):
                single = {(p, q): Fraction(1)}
                if _cond(single, form):
                    continue
                mat = single
            else:
                t1 = _cond({(p, q): Fraction(1)}, form)
                t2 = _cond({(p2, q2): Fraction(1)}, form)
                pos, coeff = next(iter(t2.items()))
                c = -t1.get(pos, Fraction(0)) / coeff
                mat = {(p, q): Fraction(1)}
                if c:
                    mat[(p2, q2)] = c
                if _cond(mat, form):
                    raise ModelError(f"inconsistent form condition at position {(p, q)}")
            w = tuple(
                a - b
                for a, b in zip(_position_weight(kind, n, p), _position_weight(kind, n, q))
            )
            if any(w):
                roots.append((w, mat))
            else:
                cartan.append(mat)
    return cartan, roots


def _component_split(weights):
    """Partition nonzero weights into irreducible components (index lists)."""
    weights = list(weights)
    adj = {i: set() for i in range(len(weights))}
    for i in range(len(weights)):
        for j in range(i + 1, len(weights)):
            if sum(a * b for a, b in zip(weights[i], weights[j])):
                adj[i].add(j)
                adj[j].add(i)
    seen, comps = set(), []
    for i in range(len(weights)):
        if i in seen:
            continue
        stack, comp = [i], []
        seen.add(i)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    comps.sort(key=lambda comp: min(weights[i] for i in comp if weights[i] > tuple([0] * len(weights[i]))))
    return comps


def _simple_system(pos_weights):
    """Indecomposable positive weights (the simple roots of the component)."""
    pos_set = set(pos_weights)
    simples = []
    for beta in pos_weights:
        if not any(tuple(b - g for b, g in zip(beta, gamma)) in pos_set for gamma in pos_set if gamma != beta):
            simples.append(beta)
    return simples


def _classical_block_data(kind, n):
    """Grading, bracket table and matrices for one classical block."""
    cartan, roots = _classical_elements(kind, n)
    expected = {"sl": n * n - 1, "so": n * (n - 1) // 2, "sp": n * (n + 1) // 2}[kind]
    if len(cartan) + len(roots) != expected:
        raise ModelError(f"{kind}({n}): built {len(cartan) + len(roots)} elements, expected {expected}")

    weights = [w for w, _ in roots]
    comps = _component_split(weights)
    zero = tuple([0] * len(weights[0]))
    components, labels = [], {}
    for comp in comps:
        cw = [weights[i] for i in comp]
        positives = sorted(w for w in cw if w > zero)
        simples = _simple_system(positives)
        gram = [[sum(a * b for a, b in zip(u, v)) for v in simples] for u in simples]
        fam, rank = rootsys.classify_gram(gram)
        perm = rootsys.match_simple_order(gram, fam, rank)
        ordered = [simples[p] for p in perm]
        comp_idx = len(components)
        components.append((fam, rank))
        rs = rootsys.root_system(fam, rank)
        for w in cw:
            sol = solve_exact([list(s) for s in zip(*ordered)], list(w))
            if sol is None or any(c.denominator != 1 for c in sol):
                raise ModelError(f"{kind}({n}): weight {w} outside simple-root lattice")
            coords = tuple(int(c) for c in sol)
            if not rs.is_root(coords):
                raise ModelError(f"{kind}({n}): weight {w} is not a root of {fam}{rank}")
            labels[w] = (comp_idx, coords)

    matrices = cartan + [m for _, m in roots]
    grading = [("cartan", 0)] * len(cartan) + [("root",) + labels[w] for w, _ in roots]
    order = sorted(range(len(matrices)), key=lambda i: _grading_sort_key(grading[i]))
    matrices = [matrices[i] for i in order]
    grading = [grading[i] for i in order]
    brackets = _brackets_from_matrices(matrices, grading)
    return components, grading, matrices, brackets


def _grading_sort_key(lab):
    if lab[0] == "cartan":
        return (0, 0, ())
    comp, coords = lab[1], lab[2]
    positive = all(c >= 0 for c in coords)
    return (1, comp, (0 if positive else 1, tuple(coords)))


def _brackets_from_matrices(matrices, grading):
    """Bracket table from sparse matrix commutators, using the grading."""
    dim = len(matrices)
    weight_of = {}
    for i, lab in enumerate(grading):
        if lab[0] == "root":
            weight_of[i] = (lab[1], lab[2])
    index_of = {w: i for i, w in weight_of.items()}
    diag_rows = []
    cartan_idx = [i for i, lab in enumerate(grading) if lab[0] == "cartan"]
    size = max((pos[0] for m in matrices for pos in m), default=-1) + 1
    for i in cartan_idx:
        diag_rows.append([matrices[i].get((p, p), Fraction(0)) for p in range(size)])

    brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            li, lj = grading[i], grading[j]
            if li[0] == "cartan" and lj[0] == "cartan":
                continue
            comm = _commutator(matrices[i], matrices[j])
            if not comm:
                continue
            if li[0] == "cartan" or lj[0] == "cartan":
                target = j if li[0] == "cartan" else i
                coeff = _proportion(comm, matrices[target])
                brackets[(i, j)] = ((target, coeff),)
                continue
            (ci, wi), (cj, wj) = weight_of[i], weight_of[j]
            if ci == cj and tuple(a + b for a, b in zip(wi, wj)) == tuple([0] * len(wi)):
                diag = [comm.get((p, p), Fraction(0)) for p in range(size)]
                sol = solve_exact([list(col) for col in zip(*diag_rows)], diag)
                if sol is None:
                    raise ModelError("Cartan bracket outside Cartan span")
                terms = tuple(
                    (cartan_idx[t], c) for t, c in enumerate(sol) if c
                )
                brackets[(i, j)] = terms
                continue
            key = (ci, tuple(a + b for a, b in zip(wi, wj))) if ci == cj else None
            target = index_of.get(key) if key else None
            if target is None:
                raise ModelError("commutator with no target root space")
            coeff = _proportion(comm, matrices[target])
            brackets[(i, j)] = ((target, coeff),)
    return brackets


def _commutator(a: SparseMat, b: SparseMat) -> SparseMat:
    out: SparseMat = {}
    for (p, q), x in a.items():
        for (u, v), y in b.items():
            if q == u:
                out[(p, v)] = out.get((p, v), Fraction(0)) + x * y
            if v == p:
                out[(u, q)] = out.get((u, q), Fraction(0)) - y * x
    return {pos: c for pos, c in out.items() if c}


def _proportion(mat: SparseMat, target: SparseMat) -> Fraction:
    """``c`` with ``mat == c * target``; raises when not proportional."""
    pos, base = next(iter(target.items()))
    c = mat.get(pos, Fraction(0)) / base
    scaled = {p: c * v for p, v in target.items() if c * v}
    if scaled != mat:
        raise ModelError("matrix is not proportional to its target root vector")
    return c


# ---------------------------------------------------------------------------
# adjoint blocks
# ---------------------------------------------------------------------------


def _adjoint_block_data(family, rank):
    rs = rootsys.root_system(family, rank)
    r = rs.rank
    roots = rs.all_roots()
    grading = [("cartan", 0)] * r + [("root", 0, g) for g in roots]
    idx = {g: r + i for i, g in enumerate(roots)}
    brackets = {}
    for i in range(r):
        for k, g in enumerate(roots):
            c = Fraction(rs.pairing(g, i))
            if c:
                key = (i, r + k)
                brackets[key] = ((r + k, c),)
    for a_pos, a in enumerate(roots):
        for b_pos in range(a_pos + 1, len(roots)):
            b = roots[b_pos]
            s = tuple(x + y for x, y in zip(a, b))
            if all(x == 0 for x in s):
                terms = tuple(
                    (i, Fraction(c)) for i, c in enumerate(rs.coroot_coords(a)) if c
                )
                brackets[(r + a_pos, r + b_pos)] = terms
            elif rs.is_root(s):
                n = rs.structure_constant(a, b)
                if n:
                    brackets[(r + a_pos, r + b_pos)] = ((idx[s], Fraction(n)),)
    return [(family, rank)], grading, brackets


# ---------------------------------------------------------------------------
# killing form
# ---------------------------------------------------------------------------


def _killing_matrix(model):
    dim = model.dim
    K = [[Fraction(0)] * dim for _ in range(dim)]
    block_of = [None] * dim
    for bi, blk in enumerate(model.blocks):
        for i in range(blk.start, blk.start + blk.dim):
            block_of[i] = bi

    def trace_pair(i, j):
        total = Fraction(0)
        blk = model.blocks[block_of[i]]
        for k in range(blk.start, blk.start + blk.dim):
            for m, c in model.bracket_coords(j, k):
                for l, d in model.bracket_coords(i, m):
                    if l == k:
                        total += c * d
        return total

    pairs = []
    for i in model.cartan_indices:
        for j in model.cartan_indices:
            if j >= i and block_of[i] == block_of[j]:
                pairs.append((i, j))
    for (comp, coords), i in model.root_index.items():
        j = model.root_index[(comp, tuple(-c for c in coords))]
        if j >= i:
            pairs.append((i, j))
    for i, j in pairs:
        v = trace_pair(i, j)
        K[i][j] = v
        K[j][i] = v
    return tuple(tuple(row) for row in K)


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------


_EXCEPTIONAL = {("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)}


def _assemble(parts):
    """Combine per-block data into a model.

    ``parts``: list of (name, kind, components, grading, matrices-or-None,
    brackets, matsize).
    """
    blocks, components, grading = [], [], []
    brackets = {}
    sparse: list[SparseMat] | None = []
    start = mat_offset = 0
    for name, kind, comps, blk_grading, matrices, blk_brackets, matsize in parts:
        comp_start = len(components)
        blocks.append(
            _Block(kind, name, start, len(blk_grading), mat_offset, matsize, comp_start, len(comps))
        )
        components.extend(comps)
        for lab in blk_grading:
            if lab[0] == "root":
                grading.append(("root", comp_start + lab[1], lab[2]))
            else:
                grading.append((lab[0], len(blocks) - 1))
        for (i, j), terms in blk_brackets.items():
            brackets[(start + i, start + j)] = tuple((start + k, c) for k, c in terms)
        if matrices is None:
            sparse = None
        elif sparse is not None:
            for m in matrices:
                sparse.append({(p + mat_offset, q + mat_offset): v for (p, q), v in m.items()})
        start += len(blk_grading)
        mat_offset += matsize
    name = "+".join(b.name for b in blocks)
    return LieAlgebraModel(name, components, blocks, grading, brackets, sparse)


@lru_cache(maxsize=None)
def classical_model(kind, n):
    """Split classical matrix algebra ``sl``/``so``/``sp`` of size ``n``."""
    components, grading, matrices, brackets = _classical_block_data(kind, n)
    name = f"{kind}{n}"
    return _assemble([(name, "defining", components, grading, matrices, brackets, n)])


@lru_cache(maxsize=None)
def _adjoint_model(family, rank):
    components, grading, brackets = _adjoint_block_data(family, rank)
    return _assemble([(f"{family}{rank}ad", "adjoint", components, grading, None, brackets, 0)])


def _center_part():
    return ("c", "defining", ["c"], [("center", 0)], [{(0, 0): Fraction(1)}], {}, 1)


def _block_part(comp, kind):
    """Build the raw part tuple for one requested component."""
    if comp == "c":
        return _center_part()
    fam, rank = comp
    if kind == "adjoint":
        m = _adjoint_model(fam, rank)
    elif (fam, rank) == ("G", 2):
        from liecx.liealg.embed import g2_defining_model

        m = g2_defining_model()
    elif (fam, rank) in _EXCEPTIONAL:
        raise ModelError(f"{fam}{rank} admits only the adjoint model kind")
    else:
        kind_map = {
            "A": ("sl", rank + 1),
            "B": ("so", 2 * rank + 1),
            "C": ("sp", 2 * rank),
            "D": ("so", 2 * rank),
        }
        m = classical_model(*kind_map[fam])
    sparse = None if m._sparse is None else [m.sparse_matrix(i) for i in range(m.dim)]
    return (m.blocks[0].name, kind, list(m.components), list(m.grading), sparse, dict(m._brackets), m.matsize)


def _model_parts(model):
    """Per-block raw part tuples; the inverse of :func:`_assemble`.

    Brackets never cross blocks (direct sums are block-diagonal), so each
    block's slice of the grading, matrices and bracket table reassembles
    into the same model.
    """
    parts = []
    for blk in model.blocks:
        comps = list(model.components[blk.comp_start : blk.comp_start + blk.comp_count])
        grading = []
        for i in range(blk.start, blk.start + blk.dim):
            lab = model.grading[i]
            if lab[0] == "root":
                grading.append(("root", lab[1] - blk.comp_start, lab[2]))
            else:
                grading.append((lab[0], 0))
        if model._sparse is None:
            matrices = None
        else:
            matrices = [
                {(p - blk.mat_offset, q - blk.mat_offset): v for (p, q), v in model._sparse[i].items()}
                for i in range(blk.start, blk.start + blk.dim)
            ]
        brackets = {
            (i - blk.start, j - blk.start): tuple((k - blk.start, c) for k, c in terms)
            for (i, j), terms in model._brackets.items()
            if blk.start <= i < blk.start + blk.dim
        }
        parts.append((blk.name, blk.kind, comps, grading, matrices, brackets, blk.matsize))
    return parts


def concat_models(*model_list):
    """Block-diagonal direct sum of models, bases concatenated in order."""
    parts = []
    for m in model_list:
        parts.extend(_model_parts(m))
    if not parts:
        raise ModelError("a model needs at least one component")
    return _assemble(parts)


def drop_center_blocks(model):
    """The model without its one-dimensional centre blocks.

    Returns ``(model', keep)`` where ``keep`` lists the surviving original
    basis indices in order.  A model that is all centre has no semisimple
    part left and is rejected.
    """
    if not model.center_indices:
        return model, tuple(range(model.dim))
    keep, parts = [], []
    for blk, part in zip(model.blocks, _model_parts(model)):
        if part[2] == ["c"]:
            continue
        parts.append(part)
        keep.extend(range(blk.start, blk.start + blk.dim))
    if not parts:
        raise ModelError("the model has no semisimple part")
    return _assemble(parts), tuple(keep)


def build_model(components, kinds="defining"):
    """Assemble a model from ``(family, rank)`` components and ``"c"`` markers.

    ``kinds`` is a single kind applied to every component or a sequence
    aligned with ``components``.  Exceptional components force ``adjoint``
    (rejecting a ``defining`` request), except ``G2`` which also admits its
    7-dimensional defining model.
    """
    components = list(components)
    if isinstance(kinds, str):
        kinds = [kinds] * len(components)
    kinds = list(kinds)
    if len(kinds) != len(components):
        raise ModelError("one kind per component is required")
    parts = []
    for comp, kind in zip(components, kinds):
        if kind not in ("defining", "adjoint"):
            raise ModelError(f"unknown model kind {kind!r}")
        if comp != "c":
            fam, rank = comp
            rootsys.root_system(fam, rank)  # validates the type
            if kind == "defining" and (fam, rank) in _EXCEPTIONAL and (fam, rank) != ("G", 2):
                raise ModelError(f"{fam}{rank} admits only the adjoint model kind")
        parts.append(_block_part(comp, "defining" if comp == "c" else kind))
    if not parts:
        raise ModelError("a model needs at least one component")
    return _assemble(parts)
