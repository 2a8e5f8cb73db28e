"""Subspace-level operations on Lie algebra models.

All subspaces live in the coordinate space of a fixed
:class:`~liecx.liealg.models.LieAlgebraModel` and are represented by
:class:`SubspaceBasis`, which canonicalises its spanning set to reduced row
echelon form — two bases are equal iff they span the same subspace.

Group elements never appear explicitly: a conjugation is a word of root
exponentials ``exp(t * ad(e))``; each ``ad(e)`` is nilpotent, so the series
terminates and everything stays rational.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from liecx.liealg.linalg import RankKernel, kernel_exact, rank_exact, rref
from liecx.liealg.models import LieAlgebraModel, ModelError
from liecx.liealg.rng import SplitMix64


class SubspaceBasis:
    """RREF-canonical basis of a subspace of a model's coordinate space."""

    __slots__ = ("ambient_dim", "vectors")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence[Fraction | int]]):
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError(f"vector length {len(v)} != ambient dimension {ambient_dim}")
        rows, _ = rref(vecs)
        self.ambient_dim = ambient_dim
        self.vectors = tuple(tuple(r) for r in rows)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, vec: Sequence[Fraction | int]) -> bool:
        residual = [Fraction(e) for e in vec]
        for row in self.vectors:
            pivot = next(i for i, e in enumerate(row) if e)
            c = residual[pivot]
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        return not any(residual)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceBasis)
            and self.ambient_dim == other.ambient_dim
            and self.vectors == other.vectors
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.vectors))

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"


def span_of_indices(model: LieAlgebraModel, indices: Iterable[int]) -> SubspaceBasis:
    """Subspace spanned by the given basis elements of the model."""
    vecs = []
    for i in indices:
        v = [Fraction(0)] * model.dim
        v[i] = Fraction(1)
        vecs.append(v)
    return SubspaceBasis(model.dim, vecs)


def borel_basis(model: LieAlgebraModel) -> SubspaceBasis:
    """Borel subalgebra: Cartan, centre and all positive root vectors."""
    return span_of_indices(
        model, model.cartan_indices + model.center_indices + model.positive_indices
    )


def subspace_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("subspaces of different ambient spaces")
    return SubspaceBasis(a.ambient_dim, list(a.vectors) + list(b.vectors))


def subspace_sum_dim(a: SubspaceBasis, b: SubspaceBasis, policy: RankKernel | None = None) -> int:
    """``dim(a + b)`` under the given rank policy (exact by default)."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("subspaces of different ambient spaces")
    rows = list(a.vectors) + list(b.vectors)
    if policy is None:
        return rank_exact(rows)
    return policy.rank(rows)


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Intersection of two subspaces."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("subspaces of different ambient spaces")
    if not a.vectors or not b.vectors:
        return SubspaceBasis(a.ambient_dim, [])
    ka = len(a.vectors)
    rows = [
        [a.vectors[i][r] for i in range(ka)] + [-v for v in (bv[r] for bv in b.vectors)]
        for r in range(a.ambient_dim)
    ]
    out = []
    for sol in kernel_exact(rows):
        vec = [Fraction(0)] * a.ambient_dim
        for c, av in zip(sol[:ka], a.vectors):
            if c:
                vec = [x + c * y for x, y in zip(vec, av)]
        out.append(vec)
    return SubspaceBasis(a.ambient_dim, out)


def bracket_kernel(
    model: LieAlgebraModel, constraint: SubspaceBasis, element: Sequence[Fraction | int]
) -> SubspaceBasis:
    """``{x in constraint : [x, element] = 0}``, exactly."""
    if constraint.ambient_dim != model.dim:
        raise ValueError("constraint space does not match the model")
    columns = [model.bracket_vec(v, element) for v in constraint.vectors]
    rows = [[col[r] for col in columns] for r in range(model.dim)]
    out = []
    for sol in kernel_exact(rows):
        vec = [Fraction(0)] * model.dim
        for c, cv in zip(sol, constraint.vectors):
            if c:
                vec = [x + c * y for x, y in zip(vec, cv)]
        out.append(vec)
    return SubspaceBasis(model.dim, out)


def killing_complement(model: LieAlgebraModel, sub: SubspaceBasis) -> SubspaceBasis:
    """Killing-orthogonal complement ``m`` with ``g = sub + m``.

    Requires the Killing form of the model to restrict nondegenerately to
    ``sub``; otherwise the complement would meet ``sub`` and no invariant
    splitting exists, so a ``ModelError`` is raised.
    """
    if sub.ambient_dim != model.dim:
        raise ValueError("subspace does not match the model")
    K = model.killing
    h = sub.vectors
    rows_hk = [
        [sum(v[i] * K[i][j] for i in range(model.dim) if v[i]) for j in range(model.dim)]
        for v in h
    ]
    gram = [[sum(row[j] * w[j] for j in range(model.dim) if w[j]) for w in h] for row in rows_hk]
    if rank_exact(gram) != len(h):
        raise ModelError("Killing form is degenerate on the subspace; no invariant complement")
    complement = SubspaceBasis(model.dim, kernel_exact(rows_hk))
    if complement.dim != model.dim - sub.dim:
        raise ModelError("complement dimension mismatch")  # unreachable if gram check passed
    return complement


def is_subalgebra(model: LieAlgebraModel, sub: SubspaceBasis) -> bool:
    """Whether the subspace is closed under the bracket."""
    for i, v in enumerate(sub.vectors):
        for w in sub.vectors[i + 1 :]:
            if not sub.contains(model.bracket_vec(v, w)):
                return False
    return True


# ---------------------------------------------------------------------------
# conjugation by unipotent words
# ---------------------------------------------------------------------------


def exp_ad_apply(
    model: LieAlgebraModel, idx: int, t: Fraction | int, vec: Sequence[Fraction | int]
) -> list[Fraction]:
    """Apply ``exp(t * ad(b_idx))`` to a coordinate vector (exact; b_idx nilpotent)."""
    acc = [Fraction(e) for e in vec]
    term = list(acc)
    k = 0
    while any(term):
        k += 1
        nxt = [Fraction(0)] * model.dim
        for j, c in enumerate(term):
            if c:
                for m, b in model.bracket_coords(idx, j):
                    nxt[m] += c * b
        term = [Fraction(t, k) * e for e in nxt]
        acc = [x + y for x, y in zip(acc, term)]
        if k > 2 * model.dim:
            raise ModelError(f"ad(b_{idx}) is not nilpotent")
    return acc


def random_word(model: LieAlgebraModel, seed: int, factors: int | None = None):
    """Word of root exponentials: pairs ``(root index, t)``.

    By default the word makes two passes over *every* root direction (both
    signs) in independently shuffled orders, with nonzero amplitudes in
    ``[-3, 3]``: full coverage keeps the composite generic even on direct
    sums, where a uniformly drawn word routinely misses directions in one
    summand.  An explicit ``factors`` draws that many uniform letters
    instead.
    """
    root_indices = [i for i, lab in enumerate(model.grading) if lab[0] == "root"]
    if not root_indices:
        return ()
    rng = SplitMix64(seed)
    if factors is not None:
        return tuple((rng.choice(root_indices), rng.nonzero_int(3)) for _ in range(factors))
    word = []
    for _ in range(2):
        order = list(root_indices)
        for k in range(len(order) - 1, 0, -1):
            j = rng.randint(0, k)
            order[k], order[j] = order[j], order[k]
        word.extend((i, rng.nonzero_int(3)) for i in order)
    return tuple(word)


def conjugate_by_word(model: LieAlgebraModel, word, sub: SubspaceBasis) -> SubspaceBasis:
    """Image of the subspace under the product of the word's exponentials."""
    vectors = [list(v) for v in sub.vectors]
    for idx, t in word:
        vectors = [exp_ad_apply(model, idx, t, v) for v in vectors]
    return SubspaceBasis(model.dim, vectors)


def random_group_conjugate(model: LieAlgebraModel, sub: SubspaceBasis, seed: int) -> SubspaceBasis:
    """Conjugate of the subspace by a seed-determined generic group element."""
    return conjugate_by_word(model, random_word(model, seed), sub)
