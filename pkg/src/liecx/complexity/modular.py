"""Modular fast paths for the generic-orbit linear algebra.

The orbit computations repeat three expensive kernels many times:
conjugating the Borel by a long word of root exponentials, ranking a
stacked basis, and measuring bracket-map kernels.  Exact ``Fraction``
arithmetic is hopeless there on the big exceptional algebras — entries
grow to thousands of digits through an exponential chain — so this module
carries those kernels over two random word-sized primes in dense
``numpy`` ``int64`` arrays and only falls back to the exact path when the
primes disagree.

Soundness notes:

* Matrices are integerised before reduction, so reducing mod ``p`` can
  only *lower* a rank, never raise it.  Agreement of two independent
  primes is accepted as the rational rank; disagreement falls back to
  exact elimination.
* Kernel *bases* are certified unconditionally: candidate vectors are
  CRT-combined across primes, rationally reconstructed, and verified by
  exact substitution.  A modular kernel can only be too large, so a full
  set of exactly-verified independent vectors pins the kernel exactly;
  any failure falls back to exact elimination.
* With primes below ``2**20``, every intermediate product stays far below
  ``2**63``, so the ``int64`` arithmetic itself is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence
from weakref import WeakKeyDictionary

import numpy as np

from liecx.liealg import ops as la
from liecx.liealg.linalg import (
    integerize_rows,
    kernel_exact,
    pick_primes,
    rank_exact,
    rank_modp,
    to_modular,
)
from liecx.liealg.models import LieAlgebraModel
from liecx.liealg.ops import SubspaceBasis

# per-model cache of grouped ad-action data; models are cached upstream,
# so keying weakly by the model object deduplicates across calls
_AD_CACHE: WeakKeyDictionary = WeakKeyDictionary()


def _ad_mod(model: LieAlgebraModel, idx: int, p: int):
    """Grouped sparse data of ``ad b_idx`` over ``GF(p)``.

    Returns ``(js, cs, starts, uks)``: contribution ``cs[i] * x[js[i]]``
    goes to output coordinate ``uks[g]`` for the group of positions
    starting at ``starts[g]`` (groups are contiguous because the triples
    are sorted by target).
    """
    per_model = _AD_CACHE.setdefault(model, {})
    key = (idx, p)
    cached = per_model.get(key)
    if cached is not None:
        return cached
    raw = per_model.get(idx)
    if raw is None:
        triples = sorted(
            (k, j, c) for j in range(model.dim) for k, c in model.bracket_coords(idx, j)
        )
        uks, starts = [], []
        for pos, (k, _, _) in enumerate(triples):
            if not uks or k != uks[-1]:
                uks.append(k)
                starts.append(pos)
        raw = (
            tuple(t[1] for t in triples),
            tuple(Fraction(t[2]) for t in triples),
            tuple(starts),
            tuple(uks),
        )
        per_model[idx] = raw
    js, cs, starts, uks = raw
    cs_p = np.array(
        [c.numerator % p * pow(c.denominator, -1, p) % p for c in cs], dtype=np.int64
    )
    cached = (
        np.array(js, dtype=np.intp),
        cs_p,
        np.array(starts, dtype=np.intp),
        np.array(uks, dtype=np.intp),
    )
    per_model[key] = cached
    return cached


def _apply_letter(model: LieAlgebraModel, idx: int, t: int, rows: np.ndarray, p: int) -> np.ndarray:
    """``exp(t * ad b_idx)`` applied to every row, over ``GF(p)``."""
    js, cs, starts, uks = _ad_mod(model, idx, p)
    if js.size == 0:
        return rows
    acc = rows.copy()
    term = rows
    k = 1
    t_mod = t % p
    while True:
        contrib = term[:, js] * cs  # < p**2, summed over <= dim terms: < 2**60
        nxt = np.zeros_like(rows)
        nxt[:, uks] = np.add.reduceat(contrib, starts, axis=1) % p
        term = nxt * (t_mod * pow(k, -1, p) % p) % p
        if not term.any():
            return acc
        acc = (acc + term) % p
        k += 1
        if k > 2 * model.dim:
            raise ArithmeticError(f"ad(b_{idx}) did not nilpotate")


def apply_word_mod(model: LieAlgebraModel, word, rows: np.ndarray, p: int) -> np.ndarray:
    """The word's product of exponentials applied to every row, over ``GF(p)``."""
    for idx, t in word:
        rows = _apply_letter(model, idx, t, rows, p)
    return rows


def _rows_mod(vectors, dim: int, p: int) -> np.ndarray:
    arr = to_modular(vectors, p)
    if arr.size == 0:
        return np.zeros((0, dim), dtype=np.int64)
    return arr


def _primitive(vec: Sequence[Fraction]) -> list[Fraction]:
    """The primitive integer vector on the same line (for span-level rescaling)."""
    den = 1
    for x in vec:
        if x.denominator != 1:
            den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return [Fraction(x) for x in ints]


def conjugate_rows(model: LieAlgebraModel, word, vectors) -> list[list[Fraction]]:
    """Exact ``Ad(word)`` image of each vector, kept at word-sized entries.

    Each vector is rescaled to a primitive integer vector after every
    letter; scaling individual vectors preserves the span of the set, and
    it stops the denominators of a long exponential chain from compounding.
    """
    rows = [[Fraction(x) for x in v] for v in vectors]
    for idx, t in word:
        rows = [_primitive(la.exp_ad_apply(model, idx, t, v)) for v in rows]
    return rows


def conjugated_sum_dim(model: LieAlgebraModel, h: SubspaceBasis, b: SubspaceBasis, word, primes) -> int:
    """``dim(h + Ad(word) * b)``: modular with exact fallback on disagreement."""
    ranks = set()
    for p in primes:
        hm = _rows_mod(h.vectors, model.dim, p)
        bm = apply_word_mod(model, word, _rows_mod(b.vectors, model.dim, p), p)
        ranks.add(rank_modp(np.vstack([hm, bm]), p))
    if len(ranks) == 1:
        return ranks.pop()
    return rank_exact(list(h.vectors) + conjugate_rows(model, word, b.vectors))


def rows_rank(rows, primes) -> int:
    """Rank of exact rows: two-prime agreement with exact fallback."""
    rows = [r for r in rows]
    if not rows:
        return 0
    ranks = {rank_modp(to_modular(rows, p), p) for p in primes}
    if len(ranks) == 1:
        return ranks.pop()
    return rank_exact(rows)


def bracket_rows(model: LieAlgebraModel, x_row: np.ndarray, rows: np.ndarray, p: int) -> np.ndarray:
    """``[x, y_j]`` over ``GF(p)`` for every row ``y_j``, via the ad tables."""
    out = np.zeros_like(rows)
    for i in np.nonzero(x_row)[0]:
        js, cs, starts, uks = _ad_mod(model, int(i), p)
        if js.size == 0:
            continue
        add = np.zeros_like(rows)
        add[:, uks] = np.add.reduceat(rows[:, js] * cs, starts, axis=1) % p
        out = (out + int(x_row[i]) * add) % p
    return out


def bracket_kernel_dim(model: LieAlgebraModel, constraint_vectors, element, primes) -> int:
    """``dim {x in span : [x, element] = 0}`` for an independent spanning set.

    Rescaling individual basis vectors or the element (integerisation does
    both) changes neither the kernel dimension nor the bracket span, so the
    whole computation can run mod p; two-prime agreement, exact fallback.
    """
    if not constraint_vectors:
        return 0
    dims = set()
    for p in primes:
        mat = _rows_mod(constraint_vectors, len(element), p)
        v = to_modular([element], p)[0]
        dims.add(mat.shape[0] - rank_modp(bracket_rows(model, v, mat, p), p))
    if len(dims) == 1:
        return dims.pop()
    cols = [model.bracket_vec(x, element) for x in constraint_vectors]
    return len(cols) - rank_exact(cols)


def is_closed_mod(model: LieAlgebraModel, basis: SubspaceBasis, primes) -> bool:
    """Bracket-closure check by two-prime ranks.

    All pairwise brackets are stacked on the basis; closure holds iff the
    rank stays at ``basis.dim``.  (Row integerisation rescales vectors,
    which preserves both the span and the bracket span.)
    """
    if basis.dim <= 1:
        return True
    for p in primes:
        mat = _rows_mod(basis.vectors, model.dim, p)
        stacked = [mat]
        for k in range(mat.shape[0] - 1):
            stacked.append(bracket_rows(model, mat[k], mat[k + 1 :], p))
        if rank_modp(np.vstack(stacked), p) != basis.dim:
            return False
    return True


# ---------------------------------------------------------------------------
# certified fast kernels
# ---------------------------------------------------------------------------


def _kernel_modp_pivots(arr: np.ndarray, p: int):
    """Full RREF over ``GF(p)``: ``(pivot columns, kernel basis rows)``.

    Kernel vectors are in the normal form with a unit at their free column,
    so bases from different primes describe the same rational vectors
    entry by entry whenever the pivot patterns agree.
    """
    a = arr % p
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        for j in range(nrows):
            if j != r and a[j, c]:
                a[j] = (a[j] - int(a[j, c]) * a[r]) % p
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for row_idx, pc in enumerate(pivots):
            basis[k, pc] = (-int(a[row_idx, fc])) % p
    return tuple(pivots), basis


def _rat_recon(a: int, m: int) -> Fraction | None:
    """Rational ``n/d`` with ``n = a*d mod m`` and ``|n|, d <= sqrt(m/2)``."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    return Fraction(r1, s1)


def kernel_vectors(rows, seed: int) -> list[list[Fraction]]:
    """Exact right-kernel basis, modular-first and certified exactly.

    The kernel is computed in RREF normal form modulo several primes; when
    the pivot patterns agree, entries are CRT-combined, rationally
    reconstructed and then verified by exact substitution into the
    original rows.  Verified vectors are independent (unit at distinct
    free columns) and the modular kernel can never be smaller than the
    rational one, so a fully verified set is exactly the kernel.  Any
    failure falls back to the exact elimination.
    """
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return []
    ints = integerize_rows(rows)
    ints = [r for r in ints if any(r)]
    if not ints:
        ncols = len(rows[0])
        return [
            [Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)
        ]
    primes = pick_primes(seed ^ 0x6B65726E, 8)
    data: list[tuple[int, tuple, np.ndarray]] = []

    def extend_to(count: int) -> bool:
        while len(data) < count:
            p = primes[len(data)]
            arr = np.array([[e % p for e in row] for row in ints], dtype=np.int64)
            pivots, basis = _kernel_modp_pivots(arr, p)
            if data and pivots != data[0][1]:
                return False
            data.append((p, pivots, basis))
        return True

    for use in (2, 4, 8):
        if not extend_to(use):
            break
        residues = [d[2] for d in data[:use]]
        moduli = [d[0] for d in data[:use]]
        candidates: list[list[Fraction]] | None = []
        for k in range(residues[0].shape[0]):
            vec: list[Fraction] = []
            for c in range(residues[0].shape[1]):
                x, m = int(residues[0][k, c]), moduli[0]
                for r_arr, p in zip(residues[1:], moduli[1:]):
                    x += m * ((int(r_arr[k, c]) - x) * pow(m, -1, p) % p)
                    m *= p
                frac = _rat_recon(x, m)
                if frac is None:
                    candidates = None
                    break
                vec.append(frac)
            if candidates is None:
                break
            candidates.append(vec)
        if candidates is None:
            continue
        ok = all(
            sum(e * v for e, v in zip(row, vec) if e) == 0
            for vec in candidates
            for row in ints
        )
        if ok:
            return candidates
    return kernel_exact(rows)


def bracket_kernel_basis(
    model: LieAlgebraModel, constraint: SubspaceBasis, element, seed: int
) -> SubspaceBasis:
    """``{x in constraint : [x, element] = 0}`` through the certified kernel."""
    cols = [model.bracket_vec(x, element) for x in constraint.vectors]
    if not cols:
        return SubspaceBasis(model.dim, [])
    matrix = [[col[r] for col in cols] for r in range(model.dim)]
    out = []
    for sol in kernel_vectors(matrix, seed):
        vec = [Fraction(0)] * model.dim
        for c, cv in zip(sol, constraint.vectors):
            if c:
                vec = [x + c * y for x, y in zip(vec, cv)]
        out.append(vec)
    return SubspaceBasis(model.dim, out)
