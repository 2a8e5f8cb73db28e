"""Homomorphisms between models, diagram automorphisms, fixed-point algebras.

The machinery here turns a small amount of combinatorial input into exact
subalgebra embeddings:

* a homomorphism is determined by images of the Chevalley generators
  ``e_i, f_i`` of each source component, extended along bracket words and
  fully verified against the source bracket table;
* diagram (sign-twisted) automorphisms arise from node permutations;
* fixed-point subspaces of automorphisms give the classical constructions
  of the exceptional embeddings used elsewhere: the 7-dimensional matrix
  model of ``G2`` (triality in ``so(8)``), the spinor copy of ``so(7)``
  inside ``so(8)``, and the three maximal fixed-point subalgebras of ``E6``;
* :func:`subalgebra_generators` recovers canonical Chevalley generators of
  a closed subspace from scratch (weight decomposition under its Cartan,
  root strings, diagram matching), so any such subspace can be promoted to
  a canonical model plus an embedding.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from liecx import rootsys
from liecx.liealg.linalg import SpanSolver, kernel_exact, solve_exact
from liecx.liealg.models import LieAlgebraModel, ModelError, _assemble, _adjoint_model, classical_model
from liecx.liealg.ops import SubspaceBasis, intersect, span_of_indices
from liecx.liealg.rng import SplitMix64


class Hom:
    """Lie algebra homomorphism between two models, stored column-wise."""

    __slots__ = ("source", "target", "columns")

    def __init__(self, source: LieAlgebraModel, target: LieAlgebraModel, columns):
        self.source = source
        self.target = target
        self.columns = tuple(tuple(Fraction(x) for x in col) for col in columns)
        if len(self.columns) != source.dim:
            raise ModelError("one image per source basis element is required")

    def apply(self, vec):
        out = [Fraction(0)] * self.target.dim
        for v, col in zip(vec, self.columns):
            if v:
                out = [a + v * b for a, b in zip(out, col)]
        return out

    def image(self) -> SubspaceBasis:
        return SubspaceBasis(self.target.dim, list(self.columns))

    def compose(self, inner: "Hom") -> "Hom":
        """``self ∘ inner`` (inner's target must be this hom's source)."""
        if inner.target is not self.source:
            raise ModelError("homomorphisms do not compose")
        return Hom(inner.source, self.target, [self.apply(col) for col in inner.columns])

    def verify(self):
        """Check bracket preservation on every pair of source basis elements."""
        for i in range(self.source.dim):
            for j in range(i + 1, self.source.dim):
                expected = [Fraction(0)] * self.target.dim
                for k, c in self.source.bracket_coords(i, j):
                    expected = [a + c * b for a, b in zip(expected, self.columns[k])]
                actual = self.target.bracket_vec(self.columns[i], self.columns[j])
                if actual != expected:
                    raise ModelError(f"bracket mismatch at source pair ({i}, {j})")
        return self


def _unit(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def _simple_indices(model, comp):
    """(e_index, f_index) pairs for the simple roots of one component."""
    fam, rank = model.components[comp]
    out = []
    for node in range(rank):
        coords = tuple(1 if k == node else 0 for k in range(rank))
        neg = tuple(-c for c in coords)
        out.append((model.root_index[(comp, coords)], model.root_index[(comp, neg)]))
    return out


def hom_from_chevalley_images(source: LieAlgebraModel, target: LieAlgebraModel, images) -> Hom:
    """Extend generator images to a verified homomorphism.

    ``images[comp][node] = (e_image, f_image)`` gives target coordinate
    vectors for the Chevalley generators of each source component.  The
    source must be semisimple (no centre components).
    """
    if any(c == "c" for c in source.components):
        raise ModelError("generator extension requires a semisimple source")
    columns: list = [None] * source.dim
    torals = []  # (source coords of [e_i, f_i], image vector)
    for comp in range(len(source.components)):
        for (ei, fi), (e_img, f_img) in zip(_simple_indices(source, comp), images[comp]):
            e_img = list(map(Fraction, e_img))
            f_img = list(map(Fraction, f_img))
            # normalisations of [e, f] may differ between the source model
            # and the supplied pair; rescale the f-image to match the source
            t_src = [Fraction(0)] * source.dim
            for k, c in source.bracket_coords(ei, fi):
                t_src[k] += c
            src_w = source.bracket_vec(t_src, _unit(source.dim, ei))
            kappa_src = src_w[ei]
            t_img = target.bracket_vec(e_img, f_img)
            img_w = target.bracket_vec(t_img, e_img)
            r = next((k for k, c in enumerate(e_img) if c), None)
            if r is None:
                raise ModelError("zero generator image")
            kappa_img = img_w[r] / e_img[r]
            if kappa_src == 0 or kappa_img == 0:
                raise ModelError("degenerate generator pair")
            scale = kappa_src / kappa_img
            f_img = [scale * c for c in f_img]
            columns[ei] = e_img
            columns[fi] = f_img
            torals.append((t_src, target.bracket_vec(e_img, f_img)))
    # Cartan images: solve H_j as a combination of the [e_i, f_i]
    cartan = source.cartan_indices
    t_matrix = [[t[k] for t, _ in torals] for k in cartan]
    for j in cartan:
        rhs = [Fraction(1) if k == j else Fraction(0) for k in cartan]
        sol = solve_exact(t_matrix, rhs)
        if sol is None:
            raise ModelError("simple coroots do not span the source Cartan")
        img = [Fraction(0)] * target.dim
        for c, (_, t_img) in zip(sol, torals):
            if c:
                img = [a + c * b for a, b in zip(img, t_img)]
        columns[j] = img
    # remaining root vectors, by increasing distance from the simples
    pending = [
        (sum(abs(c) for c in lab[2]), i)
        for i, lab in enumerate(source.grading)
        if lab[0] == "root" and columns[i] is None
    ]
    pending.sort()
    for _, i in pending:
        _, comp, coords = source.grading[i]
        positive = all(c >= 0 for c in coords)
        rank = len(coords)
        done = None
        for node in range(rank):
            step = tuple(1 if k == node else 0 for k in range(rank))
            if positive:
                partner = tuple(a - b for a, b in zip(coords, step))
                gen_idx = source.root_index[(comp, step)]
            else:
                partner = tuple(a + b for a, b in zip(coords, step))
                gen_idx = source.root_index[(comp, tuple(-s for s in step))]
            pi = source.root_index.get((comp, partner))
            if pi is None or columns[pi] is None or columns[gen_idx] is None:
                continue
            coeff = next((c for k, c in source.bracket_coords(gen_idx, pi) if k == i), None)
            if not coeff:
                continue
            img = target.bracket_vec(columns[gen_idx], columns[pi])
            columns[i] = [x / coeff for x in img]
            done = True
            break
        if not done:
            raise ModelError(f"no bracket word reaches source basis element {i}")
    return Hom(source, target, columns).verify()


def automorphism_from_node_map(model: LieAlgebraModel, node_map, signs=None) -> Hom:
    """Automorphism from a permutation of simple nodes, optionally sign-twisted.

    ``node_map[(comp, node)] = (comp', node')``; ``signs[(comp, node)]`` scales
    the image ``e_i -> s * e_{i'}`` (and ``f_i -> (1/s) * f_{i'}``).
    """
    images = []
    for comp in range(len(model.components)):
        fam, rank = model.components[comp]
        comp_images = []
        for node in range(rank):
            comp2, node2 = node_map.get((comp, node), (comp, node))
            s = Fraction(signs.get((comp, node), 1)) if signs else Fraction(1)
            rank2 = model.components[comp2][1]
            coords = tuple(1 if k == node2 else 0 for k in range(rank2))
            e_img = [Fraction(0)] * model.dim
            e_img[model.root_index[(comp2, coords)]] = s
            f_img = [Fraction(0)] * model.dim
            f_img[model.root_index[(comp2, tuple(-c for c in coords))]] = 1 / s
            comp_images.append((e_img, f_img))
        images.append(comp_images)
    return hom_from_chevalley_images(model, model, images)


def fixed_subspace(phi: Hom) -> SubspaceBasis:
    """Fixed points of an endomorphism of one model."""
    if phi.source is not phi.target:
        raise ModelError("fixed points need an endomorphism")
    n = phi.source.dim
    rows = [[phi.columns[i][r] - (1 if i == r else 0) for i in range(n)] for r in range(n)]
    return SubspaceBasis(n, kernel_exact(rows))


# ---------------------------------------------------------------------------
# canonical generators of a closed subspace
# ---------------------------------------------------------------------------


def _ad_eigenvalues(model, t):
    """Possible eigenvalues of ``ad t`` for ``t`` in the Cartan span."""
    values = {Fraction(0)}
    for (comp, coords), idx in model.root_index.items():
        e = [Fraction(0)] * model.dim
        e[idx] = Fraction(1)
        w = model.bracket_vec(t, e)
        values.add(w[idx])
    return sorted(values)


def _restricted_kernel(model, space: SubspaceBasis, t, lam) -> SubspaceBasis:
    """Kernel of ``ad(t) - lam`` restricted to ``space``."""
    cols = []
    for v in space.vectors:
        w = model.bracket_vec(t, v)
        cols.append([a - lam * b for a, b in zip(w, v)])
    rows = [[col[r] for col in cols] for r in range(model.dim)]
    out = []
    for sol in kernel_exact(rows):
        vec = [Fraction(0)] * model.dim
        for c, sv in zip(sol, space.vectors):
            if c:
                vec = [x + c * y for x, y in zip(vec, sv)]
        out.append(vec)
    return SubspaceBasis(model.dim, out)


def subalgebra_generators(model: LieAlgebraModel, sub: SubspaceBasis):
    """Canonical Chevalley generators of a semisimple closed subspace.

    The subspace must be a subalgebra whose intersection with the model's
    Cartan span is a Cartan subalgebra of it (true for all the fixed-point
    and root-closed subalgebras built in this package).  Returns a list of
    components ``(family, rank, nodes)`` with ``nodes[i] = (e_vec, f_vec)``
    in canonical node order.
    """
    cartan_span = span_of_indices(model, model.cartan_indices + model.center_indices)
    c0 = intersect(sub, cartan_span)
    if c0.dim == 0:
        raise ModelError("subspace meets the Cartan trivially")
    spaces = {(): sub}
    for t in c0.vectors:
        candidates = _ad_eigenvalues(model, t)
        refined = {}
        for label, space in spaces.items():
            remaining = space.dim
            for lam in candidates:
                if remaining == 0:
                    break
                ker = _restricted_kernel(model, space, t, lam)
                if ker.dim:
                    refined[label + (lam,)] = ker
                    remaining -= ker.dim
            if remaining:
                raise ModelError("subspace is not ad-diagonalisable over its Cartan")
        spaces = refined
    zero = tuple([Fraction(0)] * c0.dim)
    if spaces.get(zero) != c0:
        raise ModelError("Cartan intersection is not self-centralising in the subspace")
    roots = {}
    for label, space in spaces.items():
        if label == zero:
            continue
        if space.dim != 1:
            raise ModelError(f"weight space of dimension {space.dim}; expected root lines")
        roots[label] = space.vectors[0]
    root_set = set(roots)

    def pairing(beta, alpha):
        p = 0
        cur = tuple(b - a for b, a in zip(beta, alpha))
        while cur in root_set:
            p += 1
            cur = tuple(b - a for b, a in zip(cur, alpha))
        q = 0
        cur = tuple(b + a for b, a in zip(beta, alpha))
        while cur in root_set:
            q += 1
            cur = tuple(b + a for b, a in zip(cur, alpha))
        return p - q

    positives = sorted(r for r in root_set if r > zero)
    simples = [
        b
        for b in positives
        if not any(tuple(x - y for x, y in zip(b, g)) in root_set and tuple(x - y for x, y in zip(b, g)) > zero for g in positives if g != b)
    ]
    k = len(simples)
    cart = [[pairing(simples[i], simples[j]) if i != j else 2 for j in range(k)] for i in range(k)]
    # split into connected components
    seen, comps = set(), []
    for i in range(k):
        if i in seen:
            continue
        stack, comp = [i], []
        seen.add(i)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in range(k):
                if u not in seen and cart[v][u]:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        sub_cart = [[cart[i][j] for j in comp] for i in comp]
        gram = _cartan_to_gram(sub_cart)
        fam, rank = rootsys.classify_gram(gram)
        perm = rootsys.match_simple_order(gram, fam, rank)
        nodes = []
        for node in range(rank):
            alpha = simples[comp[perm[node]]]
            e = roots[alpha]
            f_raw = roots[tuple(-a for a in alpha)]
            t_raw = model.bracket_vec(e, f_raw)
            w = model.bracket_vec(t_raw, e)
            r = next(i for i, c in enumerate(e) if c)
            kappa = w[r] / e[r]
            if w != [kappa * c for c in e] or kappa == 0:
                raise ModelError("degenerate sl2 triple in subspace")
            f = [Fraction(2, 1) / kappa * c for c in f_raw]
            nodes.append((e, f))
        out.append((fam, rank, nodes))
    return out


def _cartan_to_gram(cart):
    """Synthesise a Gram matrix from a Cartan matrix (relative norms by BFS)."""
    k = len(cart)
    norms = [None] * k
    for start in range(k):
        if norms[start] is not None:
            continue
        norms[start] = Fraction(2)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(k):
                if cart[i][j] and norms[j] is None:
                    norms[j] = norms[i] * Fraction(cart[j][i], cart[i][j])
                    stack.append(j)
    gram = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            gram[i][j] = Fraction(cart[i][j]) * norms[j] / 2
    for i in range(k):
        for j in range(k):
            if gram[i][j] != gram[j][i]:
                raise ModelError("inconsistent Cartan matrix")
    return gram


def embed_subalgebra(model: LieAlgebraModel, sub: SubspaceBasis, kind="defining"):
    """Promote a closed subspace to (canonical model, verified embedding)."""
    comps = subalgebra_generators(model, sub)
    from liecx.liealg.models import build_model

    sub_model = build_model([(fam, rank) for fam, rank, _ in comps], kind)
    images = [nodes for _, _, nodes in comps]
    hom = hom_from_chevalley_images(sub_model, model, images)
    img = hom.image()
    if img.dim != sub_model.dim or not all(sub.contains(v) for v in img.vectors):
        raise ModelError("embedding image does not match the subspace")
    return sub_model, hom


# ---------------------------------------------------------------------------
# split-form adaptation
# ---------------------------------------------------------------------------


def _gram_apply(gram, x, y):
    return sum(xi * sum(g * yj for g, yj in zip(row, y)) for xi, row in zip(x, gram))


def _find_isotropic(gram):
    k = len(gram)

    def unit(i):
        v = [Fraction(0)] * k
        v[i] = Fraction(1)
        return v

    for i in range(k):
        if gram[i][i] == 0:
            return unit(i)
    for i in range(k):
        for j in range(i + 1, k):
            a, b, c = gram[i][i], 2 * gram[i][j], gram[j][j]
            # a + b t + c t^2 = 0 with rational t
            disc = b * b - 4 * a * c
            root = _fraction_sqrt(disc)
            if root is None:
                continue
            t = (-b + root) / (2 * c) if c else (-Fraction(a) / b if b else None)
            if t is None:
                continue
            v = unit(i)
            v[j] = t
            if _gram_apply(gram, v, v) == 0:
                return v
    rng = SplitMix64(0x150)
    for _ in range(20000):
        v = [Fraction(rng.randint(-6, 6)) for _ in range(k)]
        if any(v) and _gram_apply(gram, v, v) == 0:
            return v
    raise ModelError("no rational isotropic vector found; form may be anisotropic")


def _fraction_sqrt(x: Fraction):
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(n: int):
    r = math.isqrt(n)
    return r if r * r == n else None


def split_adapt(gram):
    """Basis bringing a symmetric form to the split shape ``mu * antidiag(1)``.

    Returns ``(T, mu)`` where the rows of ``T`` are coordinates of the new
    basis in the old one, ordered so that the form's matrix becomes ``mu``
    times the antidiagonal identity.  Works for any nondegenerate rational
    form that is split (maximal Witt index); raises otherwise.
    """
    k = len(gram)
    pairs = []
    leftover = None
    basis = [[Fraction(1 if i == j else 0) for j in range(k)] for i in range(k)]
    cur_gram = [row[:] for row in gram]
    current = basis
    while len(current) > 1:
        x_local = _find_isotropic(cur_gram)
        x = _combine(current, x_local)
        y_local = next(
            (v for v in _units(len(current)) if _gram_apply(cur_gram, x_local, v) != 0), None
        )
        if y_local is None:
            raise ModelError("degenerate form in split adaptation")
        gxy = _gram_apply(cur_gram, x_local, y_local)
        gyy = _gram_apply(cur_gram, y_local, y_local)
        y_local = [a - gyy / (2 * gxy) * b for a, b in zip(y_local, x_local)]
        y = _combine(current, y_local)
        pairs.append((x, y))
        # orthogonal complement of (x, y) inside the current space
        rows = []
        for w_local in (x_local, y_local):
            rows.append([_gram_apply(cur_gram, w_local, v) for v in _units(len(current))])
        comp = kernel_exact(rows)
        current = [_combine(current, v) for v in comp]
        cur_gram = [[_gram_apply(gram, u, v) for v in current] for u in current]
    if current:
        leftover = current[0]
    if leftover is not None:
        mu = _gram_apply(gram, leftover, leftover)
    else:
        mu = _gram_apply(gram, pairs[0][0], pairs[0][1])
    if mu == 0:
        raise ModelError("degenerate form in split adaptation")
    fixed_pairs = []
    for x, y in pairs:
        scale = mu / _gram_apply(gram, x, y)
        fixed_pairs.append((x, [scale * c for c in y]))
    T = [x for x, _ in fixed_pairs]
    if leftover is not None:
        T.append(leftover)
    T.extend(y for _, y in reversed(fixed_pairs))
    # verify
    for i in range(k):
        for j in range(k):
            expected = mu if i + j == k - 1 else Fraction(0)
            if _gram_apply(gram, T[i], T[j]) != expected:
                raise ModelError("split adaptation failed verification")
    return T, mu


def _units(k):
    for i in range(k):
        v = [Fraction(0)] * k
        v[i] = Fraction(1)
        yield v


def _combine(basis, coeffs):
    out = [Fraction(0)] * len(basis[0])
    for c, b in zip(coeffs, basis):
        if c:
            out = [a + c * e for a, e in zip(out, b)]
    return out


# ---------------------------------------------------------------------------
# cached fixed-point constructions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def triality_fixed_g2():
    """(so8 model, 14-dim fixed subspace of an order-3 diagram rotation)."""
    so8 = classical_model("so", 8)
    cart = rootsys.root_system("D", 4).cartan
    center = next(i for i in range(4) if sum(1 for j in range(4) if j != i and cart[i][j]) == 3)
    leaves = [i for i in range(4) if i != center]
    cycle = {(0, leaves[0]): (0, leaves[1]), (0, leaves[1]): (0, leaves[2]), (0, leaves[2]): (0, leaves[0])}
    phi = automorphism_from_node_map(so8, cycle)
    fixed = fixed_subspace(phi)
    if fixed.dim != 14:
        raise ModelError(f"triality fixed algebra has dimension {fixed.dim}")
    return so8, fixed


def _common_kernel_vectors(model, sub: SubspaceBasis):
    """Common kernel in the defining space of all matrices of a subspace."""
    rows = []
    for v in sub.vectors:
        mat = model.vector_matrix(v)
        dense = [[Fraction(0)] * model.matsize for _ in range(model.matsize)]
        for (r, c), val in mat.items():
            dense[r][c] = val
        rows.extend(dense)
    return kernel_exact(rows)


@lru_cache(maxsize=None)
def g2_defining_model() -> LieAlgebraModel:
    """The 7x7 matrix model of G2 inside split so(7), built from triality."""
    so8, fixed = triality_fixed_g2()
    sub_model, hom = embed_subalgebra(so8, fixed, kind="adjoint")
    if sub_model.components != (("G", 2),):
        raise ModelError("triality fixed algebra is not of type G2")
    kern = _common_kernel_vectors(so8, fixed)
    if len(kern) != 1:
        raise ModelError("expected a single invariant vector in the 8-dim space")
    v = kern[0]
    J8 = [[Fraction(1 if i + j == 7 else 0) for j in range(8)] for i in range(8)]
    if _gram_apply(J8, v, v) == 0:
        raise ModelError("invariant vector is isotropic")
    # 7-dimensional invariant complement: orthogonal to v
    comp = kernel_exact([[sum(J8[r][c] * v[c] for c in range(8)) for r in range(8)]])
    gram7 = [[_gram_apply(J8, a, b) for b in comp] for a in comp]
    T, _ = split_adapt(gram7)
    w_basis = [_combine(comp, t) for t in T]  # vectors in the 8-dim space
    solver = SpanSolver(w_basis)
    sparse_mats = []
    for col_src in range(sub_model.dim):
        x = hom.columns[col_src]
        mat8 = so8.vector_matrix(x)
        cols = []
        for w in w_basis:
            img = [sum(mat8.get((r, c), Fraction(0)) * w[c] for c in range(8)) for r in range(8)]
            coords = solver.coordinates(img)
            if coords is None:
                raise ModelError("complement is not invariant")
            cols.append(coords)
        sparse_mats.append(
            {(r, c): cols[c][r] for c in range(7) for r in range(7) if cols[c][r]}
        )
    # brackets and grading are those of the adjoint model (the map is an iso)
    part = (
        "g2v7",
        "defining",
        list(sub_model.components),
        list(sub_model.grading),
        sparse_mats,
        dict(sub_model._brackets),
        7,
    )
    model = _assemble([part])
    # safety: commutators must reproduce the bracket table
    for i in range(model.dim):
        for j in range(i + 1, model.dim):
            a, b = model.sparse_matrix(i), model.sparse_matrix(j)
            comm = {}
            for (p, q), xv in a.items():
                for (u, w), yv in b.items():
                    if q == u:
                        comm[(p, w)] = comm.get((p, w), Fraction(0)) + xv * yv
                    if w == p:
                        comm[(u, q)] = comm.get((u, q), Fraction(0)) - yv * xv
            comm = {kpos: c for kpos, c in comm.items() if c}
            table = {}
            for k, c in model.bracket_coords(i, j):
                for pos, e in model.sparse_matrix(k).items():
                    table[pos] = table.get(pos, Fraction(0)) + c * e
            if {kpos: c for kpos, c in table.items() if c} != comm:
                raise ModelError("7-dimensional model fails its bracket table")
    return model


@lru_cache(maxsize=None)
def spin7_in_so8() -> Hom:
    """Embedding of split so(7) into so(8) acting spinorially."""
    so8 = classical_model("so", 8)
    cart = rootsys.root_system("D", 4).cartan
    center = next(i for i in range(4) if sum(1 for j in range(4) if j != i and cart[i][j]) == 3)
    leaves = [i for i in range(4) if i != center]
    for a in range(3):
        for b in range(a + 1, 3):
            swap = {(0, leaves[a]): (0, leaves[b]), (0, leaves[b]): (0, leaves[a])}
            phi = automorphism_from_node_map(so8, swap)
            fixed = fixed_subspace(phi)
            if fixed.dim != 21:
                continue
            if _common_kernel_vectors(so8, fixed):
                continue  # vector-type copy: the 8-dim space has an invariant line
            sub_model, hom = embed_subalgebra(so8, fixed, kind="defining")
            if sub_model.components != (("B", 3),):
                raise ModelError("flip fixed algebra is not so(7)")
            return hom
    raise ModelError("no spinor so(7) found among diagram flips")


def _e6_structure():
    """Branch node, short leaf and the two long arms of the E6 diagram.

    Returns ``(center, short_leaf, arms)`` where each arm is the node list
    ``[inner, end]`` walking away from the branch node.
    """
    cart = rootsys.root_system("E", 6).cartan
    deg = [sum(1 for j in range(6) if j != i and cart[i][j]) for i in range(6)]
    center = deg.index(3)
    short_leaf = next(i for i in range(6) if deg[i] == 1 and cart[i][center])
    arms = []
    for inner in range(6):
        if inner in (center, short_leaf) or not cart[center][inner]:
            continue
        end = next(j for j in range(6) if j not in (center, inner) and cart[inner][j])
        arms.append([inner, end])
    if len(arms) != 2:
        raise ModelError("unexpected E6 diagram shape")
    return center, short_leaf, arms


def _e6_flip():
    """The order-2 diagram symmetry of E6: swap the two long arms."""
    _, _, arms = _e6_structure()
    (i1, e1), (i2, e2) = arms
    return {(0, i1): (0, i2), (0, i2): (0, i1), (0, e1): (0, e2), (0, e2): (0, e1)}


@lru_cache(maxsize=None)
def f4_in_e6():
    """(F4 adjoint model, embedding into adjoint E6) via the diagram flip."""
    e6 = _adjoint_model("E", 6)
    phi = automorphism_from_node_map(e6, _e6_flip())
    fixed = fixed_subspace(phi)
    if fixed.dim != 52:
        raise ModelError(f"E6 flip fixed algebra has dimension {fixed.dim}")
    sub_model, hom = embed_subalgebra(e6, fixed, kind="adjoint")
    if sub_model.components != (("F", 4),):
        raise ModelError("E6 flip fixed algebra is not F4")
    return sub_model, hom


@lru_cache(maxsize=None)
def sp8_in_e6():
    """(sp8 model, embedding into adjoint E6): sign-twisted diagram flip."""
    e6 = _adjoint_model("E", 6)
    center, short_leaf, arms = _e6_structure()
    mapping = _e6_flip()
    # sign patterns constant on flip orbits keep the twisted map an involution
    orbits = [[center], [short_leaf], [arms[0][0], arms[1][0]], [arms[0][1], arms[1][1]]]
    for mask in range(1, 16):
        signs = {}
        for bit, orbit in enumerate(orbits):
            for node in orbit:
                signs[(0, node)] = Fraction(-1) if (mask >> bit) & 1 else Fraction(1)
        phi = automorphism_from_node_map(e6, mapping, signs)
        fixed = fixed_subspace(phi)
        if fixed.dim != 36:
            continue
        sub_model, hom = embed_subalgebra(e6, fixed, kind="defining")
        if sub_model.components != (("C", 4),):
            continue
        return sub_model, hom
    raise ModelError("no sign twist of the E6 flip has an sp(8) fixed algebra")


@lru_cache(maxsize=None)
def so9_in_e6():
    """(so9 model, embedding into adjoint E6) through the D5 subalgebra."""
    e6 = _adjoint_model("E", 6)
    _, _, arms = _e6_structure()
    # the D5 subalgebra spanned by five of the six nodes: drop the end of
    # one long arm and take the root-closed span of the rest
    drop = arms[0][1]
    keep = [i for i in range(6) if i != drop]
    indices = list(e6.cartan_indices)
    for (comp, coords), idx in e6.root_index.items():
        support = [i for i, c in enumerate(coords) if c]
        if all(i in keep for i in support):
            indices.append(idx)
    sub = span_of_indices(e6, indices)
    d5_model, psi = embed_subalgebra(e6, sub, kind="defining")
    if d5_model.components != (("D", 5),):
        raise ModelError("kept nodes do not span a D5 subalgebra")
    # so(9) inside split so(10): stabiliser of a non-isotropic vector
    so10 = d5_model
    u = [Fraction(0)] * 10
    u[4], u[5] = Fraction(1), Fraction(-1)
    rows = []
    for i in range(so10.dim):
        mat = so10.sparse_matrix(i)
        col = [sum(mat.get((r, c), Fraction(0)) * u[c] for c in range(10)) for r in range(10)]
        rows.append(col)
    stab = []
    for sol in kernel_exact([[rows[i][r] for i in range(so10.dim)] for r in range(10)]):
        stab.append(list(sol))
    sub9 = SubspaceBasis(so10.dim, stab)
    if sub9.dim != 36:
        raise ModelError(f"vector stabiliser has dimension {sub9.dim}")
    so9_model, iota = embed_subalgebra(so10, sub9, kind="defining")
    if so9_model.components != (("B", 4),):
        raise ModelError("vector stabiliser is not so(9)")
    return so9_model, psi.compose(iota)
