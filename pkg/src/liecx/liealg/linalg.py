"""Exact and modular linear algebra over the rationals.

Every routine here is deterministic and float-free.  Two computation
strategies coexist:

* ``exact``   — ``fractions.Fraction`` row reduction (reduced row echelon
  form, kernels, solving) and fraction-free Bareiss elimination for integer
  ranks.  Always correct, can be slow on large dense matrices.
* ``modular`` — Gaussian elimination over ``GF(p)`` for word-sized primes,
  carried in ``numpy`` ``int64`` arrays.  With ``p < 2**20`` every
  intermediate product stays below ``2**40``, so ``int64`` arithmetic is
  exact.  A rank mod ``p`` never exceeds the rational rank, so modular
  ranks are certified lower bounds; agreement of two independent primes is
  accepted as the rational value, and disagreement falls back to the exact
  path.

Matrices are lists of equal-length rows; entries are ``int`` or
``Fraction``.  Rescaling a row by a nonzero rational does not change rank,
span or kernel, so rows are integerised (cleared of denominators) before
any modular or Bareiss work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from liecx.liealg.rng import SplitMix64

Row = Sequence[Fraction | int]

_PRIME_FLOOR = 1 << 19
_PRIME_CEIL = (1 << 20) - 1


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the word-sized range used here."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pick_primes(seed: int, count: int = 2) -> tuple[int, ...]:
    """``count`` distinct primes in ``[2**19, 2**20)``, chosen by ``seed``."""
    rng = SplitMix64(seed ^ 0x70726D73)  # domain-separate from other consumers
    found: list[int] = []
    while len(found) < count:
        candidate = rng.randint(_PRIME_FLOOR, _PRIME_CEIL) | 1
        while not _is_prime(candidate):
            candidate += 2
        if candidate <= _PRIME_CEIL and candidate not in found:
            found.append(candidate)
    return tuple(found)


def integerize_rows(rows: Iterable[Row]) -> list[list[int]]:
    """Clear denominators row by row (span- and kernel-preserving)."""
    out: list[list[int]] = []
    for row in rows:
        scale = 1
        for entry in row:
            if isinstance(entry, Fraction) and entry.denominator != 1:
                scale = scale * entry.denominator // math.gcd(scale, entry.denominator)
        out.append([int(entry * scale) for entry in row])
    return out


def rref(rows: Iterable[Row]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(entry) for entry in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [entry * inv for entry in mat[r]]
        for i, row in enumerate(mat):
            if i != r and row[c]:
                factor = row[c]
                mat[i] = [a - factor * b for a, b in zip(row, mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank_exact(rows: Iterable[Row]) -> int:
    """Rational rank via fraction-free Bareiss elimination."""
    mat = integerize_rows(rows)
    mat = [row for row in mat if any(row)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot_row = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][c]
        for i in range(rank + 1, len(mat)):
            row, lead = mat[i], mat[i][c]
            mat[i] = [(pivot * row[k] - lead * mat[rank][k]) // prev for k in range(ncols)]
        prev = pivot
        rank += 1
        if rank == len(mat):
            break
    return rank


def kernel_exact(rows: Iterable[Row]) -> list[list[Fraction]]:
    """Basis of the right kernel ``{x : M x = 0}`` of the matrix with the given rows."""
    mat = [list(row) for row in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    reduced, pivots = rref(mat)
    pivot_set = set(pivots)
    basis: list[list[Fraction]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[free]
        basis.append(vec)
    return basis


def solve_exact(rows: Sequence[Row], rhs: Row) -> list[Fraction] | None:
    """One solution of ``M x = rhs``, or ``None`` if inconsistent."""
    rhs = list(rhs)
    if len(rhs) != len(rows):
        raise ValueError("matrix/right-hand-side size mismatch")
    mat = [list(row) + [entry] for row, entry in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    reduced, pivots = rref(mat)
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for row, pc in zip(reduced, pivots):
        solution[pc] = row[-1]
    return solution


def to_modular(rows: Iterable[Row], p: int) -> np.ndarray:
    """Integerised matrix reduced mod ``p`` as an ``int64`` array.

    Reduction happens in Python integers, so arbitrarily large exact entries
    (e.g. after long exponential chains) never overflow.
    """
    mat = integerize_rows(rows)
    if not mat:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array([[entry % p for entry in row] for row in mat], dtype=np.int64)


def rank_modp(matrix: np.ndarray, p: int) -> int:
    """Rank over ``GF(p)``; ``matrix`` must already be reduced mod ``p``."""
    a = matrix.copy()
    nrows, ncols = a.shape
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
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        col = a[r + 1 :, c]
        if col.size:
            a[r + 1 :] = (a[r + 1 :] - np.outer(col, a[r])) % p
        r += 1
    return r


def kernel_modp(matrix: np.ndarray, p: int) -> np.ndarray:
    """Right-kernel basis over ``GF(p)`` (rows of the result are basis vectors)."""
    a = matrix.copy() % p
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
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        for j in range(nrows):
            if j != r and a[j, c]:
                a[j] = (a[j] - a[j, c] * a[r]) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for row_idx, pc in enumerate(pivots):
            basis[k, pc] = (-a[row_idx, fc]) % p
    return basis


class SpanSolver:
    """Repeated-membership queries against a fixed spanning set.

    Row-reduces ``[rows | I]`` once; afterwards ``coordinates(v)`` returns
    ``x`` with ``x @ rows == v`` (or ``None`` when ``v`` is outside the span)
    in one back-substitution-free reduction per query.
    """

    def __init__(self, rows: Sequence[Row]) -> None:
        self._nrows = len(rows)
        self._ncols = len(rows[0]) if rows else 0
        augmented = [
            [Fraction(e) for e in row] + [Fraction(int(i == j)) for j in range(self._nrows)]
            for i, row in enumerate(rows)
        ]
        reduced, pivots = rref(augmented)
        keep = [(row, pc) for row, pc in zip(reduced, pivots) if pc < self._ncols]
        self._rows = [row[: self._ncols] for row, _ in keep]
        self._transform = [row[self._ncols :] for row, _ in keep]
        self._pivots = [pc for _, pc in keep]

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def coordinates(self, vec: Row) -> list[Fraction] | None:
        residual = [Fraction(e) for e in vec]
        coeffs = []
        for row, pc in zip(self._rows, self._pivots):
            c = residual[pc]
            coeffs.append(c)
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        if any(residual):
            return None
        out = [Fraction(0)] * self._nrows
        for c, trow in zip(coeffs, self._transform):
            if c:
                out = [a + c * b for a, b in zip(out, trow)]
        return out

    def contains(self, vec: Row) -> bool:
        return self.coordinates(vec) is not None


@dataclass(frozen=True)
class RankKernel:
    """Rank/kernel computation policy.

    ``strategy`` is ``"exact_rational"`` or ``"modular"``.  Modular ranks are
    computed for each prime in ``primes``; agreement across all primes is
    accepted, disagreement (possible only on unlucky primes) falls back to
    the exact path.
    """

    strategy: str = "modular"
    primes: tuple[int, ...] = ()
    seed: int = 0

    def __post_init__(self) -> None:
        if self.strategy not in ("exact_rational", "modular"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.strategy == "modular" and not self.primes:
            object.__setattr__(self, "primes", pick_primes(self.seed))

    def rank(self, rows: Sequence[Row]) -> int:
        if not rows:
            return 0
        if self.strategy == "exact_rational":
            return rank_exact(rows)
        ranks = {rank_modp(to_modular(rows, p), p) for p in self.primes}
        if len(ranks) == 1:
            return ranks.pop()
        return rank_exact(rows)
