"""Complexity, rank and generic-stabilizer computations for pairs (g, h).

Two independent engines compute the complexity of a reductive pair:

* the *orbit oracle*: ``c = dim g - max_t dim(h + Ad(g_t) b)`` over random
  unipotent words ``g_t`` — a non-generic draw can only lower the sum
  dimension, so the max over a few trials is the generic value;
* the *formula pipeline*: find the stationary subalgebra of general
  position ``s`` for the isotropy action of ``h`` on the Killing
  complement ``m``, then ``c = N(g) - dim h + N(s) + rk s`` and
  ``rk(g,h) = rk g - rk s``, where ``N(.)`` counts positive roots and the
  ranks of ``g`` and of the reductive ``s`` include their centres.

Genericity is certified by trial stability: the extremum over independent
integer draws, with a flag (and a ``RuntimeWarning``) when fewer than half
the trials attain it.  Oracles take the max, stabilizers and ranks the
min, because bad draws err in one known direction.  All randomness is
deterministic in (seed, trials); the heavy linear algebra runs through the
two-prime modular fast path (:mod:`liecx.complexity.modular`) with exact
fallbacks, so results are exact rationals throughout.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from liecx.liealg import models, ops as la
from liecx.liealg.linalg import pick_primes
from liecx.liealg.models import LieAlgebraModel
from liecx.liealg.ops import SubspaceBasis
from liecx.liealg.rng import SplitMix64
from liecx.complexity import modular

_DEFAULT_TRIALS = 5

# domain-separation tags for the per-operation random streams
_ORACLE_TAG = 0x6F72636C
_SSGP_TAG = 0x73736770
_RANK_TAG = 0x72616E6B
_LEVI_TAG = 0x6C657669
_PSUB_TAG = 0x70737562
_PRIME_TAG = 0x6D6F6470


class ComplexityError(ValueError):
    """Inconsistent complexity computation or invalid input pair."""


@dataclass(frozen=True)
class ComplexityReport:
    """Result of one complexity computation.

    ``stable`` records whether at least half of the trials agreed on the
    extremal sum/kernel dimension; ``seeds`` lists the per-trial seeds
    actually drawn.  ``rank`` and the s.s.g.p. data are present only on
    the formula path.
    """

    complexity: int
    method: str
    trials: int
    seeds: tuple[int, ...]
    stable: bool
    rank: int | None = None
    ssgp_dim: int | None = None
    ssgp_rank: int | None = None

    def __post_init__(self):
        if self.complexity < 0:
            raise ComplexityError("complexity cannot be negative")
        if self.method not in ("oracle", "formula", "levi"):
            raise ComplexityError(f"unknown method {self.method!r}")

    def record(self) -> dict:
        """Flat serializable record (CLI output rows)."""
        return {
            "complexity": self.complexity,
            "rank": self.rank,
            "ssgp_dim": self.ssgp_dim,
            "ssgp_rank": self.ssgp_rank,
            "method": self.method,
            "trials": self.trials,
            "seeds": list(self.seeds),
            "stable": self.stable,
        }


@dataclass(frozen=True)
class SsgpResult:
    """A stationary subalgebra of general position.

    ``basis`` spans a bracket-closed subspace of the acting algebra,
    ``rank`` is its reductive rank, and ``witness_vector`` is the generic
    point whose stabilizer it is.
    """

    basis: SubspaceBasis
    dim: int
    rank: int
    witness_vector: tuple[Fraction, ...]

    def __post_init__(self):
        if self.dim != self.basis.dim:
            raise ComplexityError("stabilizer dimension disagrees with its basis")
        if not 0 <= self.rank <= self.dim:
            raise ComplexityError("reductive rank must lie between 0 and the dimension")


def _trial_seeds(seed: int, trials: int, tag: int) -> tuple[int, ...]:
    rng = SplitMix64(seed ^ tag)
    return tuple(rng.next_u64() for _ in range(trials))


def _random_point(sub: SubspaceBasis, seed: int) -> list[Fraction]:
    """Random integer combination of the basis, coordinates in [-9, 9]."""
    rng = SplitMix64(seed)
    vec = [Fraction(0)] * sub.ambient_dim
    for v in sub.vectors:
        t = rng.randint(-9, 9)
        if t:
            vec = [a + t * b for a, b in zip(vec, v)]
    return vec


def _stable(dims: Sequence[int], best: int) -> bool:
    return sum(d == best for d in dims) * 2 >= len(dims)


def _reductive_rank_of(model: LieAlgebraModel) -> int:
    """Rank of the (reductive) ambient: Cartan plus centre."""
    return len(model.cartan_indices) + len(model.center_indices)


# ---------------------------------------------------------------------------
# generic stabilizer scans
# ---------------------------------------------------------------------------


def _min_kernel_scan(model, acting: SubspaceBasis, space: SubspaceBasis, seed, trials, tag, primes):
    """Minimal bracket-kernel of ``acting`` at random points of ``space``.

    Returns ``(kernel basis, witness, stable)``; dimensions are scanned
    modularly, the basis at the minimizing trial is certified exact.
    """
    seeds = _trial_seeds(seed, trials, tag)
    points = [_random_point(space, s) for s in seeds]
    dims = [modular.bracket_kernel_dim(model, acting.vectors, v, primes) for v in points]
    best = min(dims)
    witness = points[dims.index(best)]
    basis = modular.bracket_kernel_basis(model, acting, witness, seed ^ tag)
    if basis.dim != best:
        # a prime pair lied about some trial dimension: redo the scan exactly
        kernels = [la.bracket_kernel(model, acting, v) for v in points]
        dims = [k.dim for k in kernels]
        best = min(dims)
        witness = points[dims.index(best)]
        basis = kernels[dims.index(best)]
    return basis, tuple(witness), _stable(dims, best)


def _ssgp_scan(model, h: SubspaceBasis, seed, trials, primes):
    """(basis, witness, stable) of the s.s.g.p. of ``h`` on the Killing complement."""
    if h.dim == 0 or h.dim == model.dim:
        # nothing to stabilize (empty action or m = 0): s is h itself
        return h, tuple([Fraction(0)] * model.dim), True
    m = la.killing_complement(model, h)
    if m.dim == 0:
        return h, tuple([Fraction(0)] * model.dim), True
    return _min_kernel_scan(model, h, m, seed, trials, _SSGP_TAG, primes)


def _rank_scan(model, sub: SubspaceBasis, seed, trials, primes):
    """(reductive rank, stable): minimal centralizer-in-itself dimension."""
    if sub.dim == 0:
        return 0, True
    seeds = _trial_seeds(seed, trials, _RANK_TAG)
    dims = [
        modular.bracket_kernel_dim(model, sub.vectors, _random_point(sub, s), primes)
        for s in seeds
    ]
    best = min(dims)
    return best, _stable(dims, best)


def _warn_unstable(what: str) -> None:
    warnings.warn(f"{what} did not stabilize across trials", RuntimeWarning, stacklevel=3)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def complexity_oracle(
    model: LieAlgebraModel, h: SubspaceBasis, seed: int = 0, trials: int = _DEFAULT_TRIALS
) -> ComplexityReport:
    """Orbit oracle: ``c = dim g - max_t dim(h + Ad(g_t) b)``.

    ``h`` must be a subalgebra; the max over ``trials >= 3`` random words
    is the generic value because non-generic words only lower the sum.
    """
    if trials < 3:
        raise ComplexityError("the orbit oracle needs at least 3 trials")
    if h.ambient_dim != model.dim:
        raise ComplexityError("subalgebra does not live in the model")
    primes = pick_primes(seed ^ _PRIME_TAG)
    b = la.borel_basis(model)
    seeds = _trial_seeds(seed, trials, _ORACLE_TAG)
    dims = [
        modular.conjugated_sum_dim(model, h, b, la.random_word(model, s), primes)
        for s in seeds
    ]
    best = max(dims)
    return ComplexityReport(
        complexity=model.dim - best,
        method="oracle",
        trials=trials,
        seeds=seeds,
        stable=_stable(dims, best),
    )


def isotropy_ssgp(
    model: LieAlgebraModel, h: SubspaceBasis, seed: int = 0, trials: int = _DEFAULT_TRIALS
) -> SsgpResult:
    """S.s.g.p. of the isotropy action of ``h`` on the Killing complement.

    The minimal bracket kernel over random integer points of ``m`` (generic
    = minimal); the result is verified bracket-closed.  Instability at the
    minimum is flagged with a ``RuntimeWarning``.
    """
    primes = pick_primes(seed ^ _PRIME_TAG)
    basis, witness, stable = _ssgp_scan(model, h, seed, trials, primes)
    if basis is not h and not modular.is_closed_mod(model, basis, primes):
        raise ComplexityError("generic stabilizer is not bracket-closed")
    rank, rank_stable = _rank_scan(model, basis, seed, trials, primes)
    if not (stable and rank_stable):
        _warn_unstable("the generic stabilizer dimension")
    return SsgpResult(basis=basis, dim=basis.dim, rank=rank, witness_vector=witness)


def reductive_rank(
    model: LieAlgebraModel, sub: SubspaceBasis, seed: int = 0, trials: int = _DEFAULT_TRIALS
) -> int:
    """Rank of a bracket-closed reductive subspace.

    The centralizer of a generic element of ``sub`` in itself; minimal
    dimension over trials, instability flagged with a ``RuntimeWarning``.
    """
    primes = pick_primes(seed ^ _PRIME_TAG)
    rank, stable = _rank_scan(model, sub, seed, trials, primes)
    if not stable:
        _warn_unstable("the generic centralizer dimension")
    return rank


def complexity_formula(model: LieAlgebraModel, h: SubspaceBasis, seed: int = 0) -> ComplexityReport:
    """Formula pipeline: ``c = N(g) - dim h + N(s) + rk s``, ``rank = rk g - rk s``.

    ``N(s) = (dim s - rk s)/2`` for the reductive s.s.g.p. ``s``;
    non-integer or negative intermediates raise ``ComplexityError`` (they
    signal a bad embedding or non-generic draws).  ``seeds`` in the report
    are the stabilizer-scan seeds.
    """
    trials = _DEFAULT_TRIALS
    primes = pick_primes(seed ^ _PRIME_TAG)
    basis, _witness, s_stable = _ssgp_scan(model, h, seed, trials, primes)
    if basis is not h and not modular.is_closed_mod(model, basis, primes):
        raise ComplexityError("generic stabilizer is not bracket-closed")
    rank_s, rank_stable = _rank_scan(model, basis, seed, trials, primes)
    doubled = basis.dim - rank_s
    if doubled < 0 or doubled % 2:
        raise ComplexityError(
            f"stabilizer of dim {basis.dim} and rank {rank_s} is not reductive-consistent"
        )
    c = model.num_positive - h.dim + doubled // 2 + rank_s
    rank_pair = _reductive_rank_of(model) - rank_s
    if c < 0 or rank_pair < 0:
        raise ComplexityError(
            f"negative invariant (c = {c}, rank = {rank_pair}): bad embedding or unlucky draws"
        )
    return ComplexityReport(
        complexity=c,
        method="formula",
        trials=trials,
        seeds=_trial_seeds(seed, trials, _SSGP_TAG),
        stable=s_stable and rank_stable,
        rank=rank_pair,
        ssgp_dim=basis.dim,
        ssgp_rank=rank_s,
    )


def reduce_center(model: LieAlgebraModel, h: SubspaceBasis):
    """Strip the ambient centre: ``(g' = semisimple ideal, h' = projection)``.

    The complexity of the pair is invariant under this reduction.  Models
    without centre blocks pass through unchanged.
    """
    if not model.center_indices:
        return model, h
    reduced, keep = models.drop_center_blocks(model)
    vectors = [[v[i] for i in keep] for v in h.vectors]
    return reduced, SubspaceBasis(reduced.dim, vectors)


def _normalize_simples(model: LieAlgebraModel, parabolic_simples):
    """Simple-root selectors as ``(component, index)`` pairs.

    Bare integers are allowed when the model has exactly one semisimple
    component.
    """
    semisimple = [i for i, c in enumerate(model.components) if c != "c"]
    kept = set()
    for item in parabolic_simples:
        if isinstance(item, int):
            if len(semisimple) != 1:
                raise ComplexityError(
                    "bare simple-root indices are ambiguous for multi-component models"
                )
            comp, idx = semisimple[0], item
        else:
            comp, idx = item
        if not 0 <= comp < len(model.components) or model.components[comp] == "c":
            raise ComplexityError(f"no semisimple component {comp}")
        _fam, rank = model.components[comp]
        if not 0 <= idx < rank:
            raise ComplexityError(f"component {comp} has no simple root {idx}")
        kept.add((comp, idx))
    return kept


def complexity_levi(
    model: LieAlgebraModel, h: SubspaceBasis, parabolic_simples, seed: int = 0
) -> ComplexityReport:
    """Parabolic cross-check: ``c(g,h) = c(l,h) + c_{S1}(p^u)``.

    ``parabolic_simples`` selects the simple roots kept in the Levi ``l``
    (pairs ``(component, index)``, or bare indices for one-component
    models); ``h`` must lie inside ``l``.  The first summand is the
    formula pipeline run inside ``l`` with ``S1`` the s.s.g.p. of ``h`` on
    ``l/h``; the second is ``dim p^u - (dim b_{S1} - dim b_1)`` with
    ``b_1`` the generic stabilizer of the Borel ``b_{S1} = S1 ∩ b`` on the
    nilradical ``p^u``.
    """
    trials = _DEFAULT_TRIALS
    primes = pick_primes(seed ^ _PRIME_TAG)
    kept = _normalize_simples(model, parabolic_simples)
    l_idx, pu_idx, n_l = [], [], 0
    for i, lab in enumerate(model.grading):
        if lab[0] != "root":
            l_idx.append(i)
            continue
        comp, coords = lab[1], lab[2]
        if all(c == 0 or (comp, k) in kept for k, c in enumerate(coords)):
            l_idx.append(i)
            n_l += all(c >= 0 for c in coords)
        elif all(c >= 0 for c in coords):
            pu_idx.append(i)
    levi = la.span_of_indices(model, l_idx)
    for v in h.vectors:
        if not levi.contains(v):
            raise ComplexityError("h is not contained in the chosen Levi subalgebra")
    # --- c(l, h): the formula pipeline inside l -------------------------
    if h.dim in (0, levi.dim):
        s1, s1_stable = h, True
    else:
        m_l = la.intersect(levi, la.killing_complement(model, h))
        if m_l.dim != levi.dim - h.dim:
            raise ComplexityError("no invariant complement of h inside the Levi")
        if m_l.dim == 0:
            s1, s1_stable = h, True
        else:
            s1, _witness, s1_stable = _min_kernel_scan(
                model, h, m_l, seed, trials, _LEVI_TAG, primes
            )
    rank_s1, rank_stable = _rank_scan(model, s1, seed, trials, primes)
    doubled = s1.dim - rank_s1
    if doubled < 0 or doubled % 2:
        raise ComplexityError(
            f"stabilizer of dim {s1.dim} and rank {rank_s1} is not reductive-consistent"
        )
    c_levi = n_l - h.dim + doubled // 2 + rank_s1
    if c_levi < 0:
        raise ComplexityError(f"negative complexity {c_levi} inside the Levi")
    # --- c_{S1}(p^u) ----------------------------------------------------
    b_s1 = la.intersect(s1, la.borel_basis(model))
    if 2 * b_s1.dim != s1.dim + rank_s1:
        raise ComplexityError(
            "the stabilizer is not split against the Borel; its Borel is not b ∩ S1"
        )
    pu = la.span_of_indices(model, pu_idx)
    if pu.dim == 0:
        b1_dim, b1_stable = b_s1.dim, True
    else:
        seeds = _trial_seeds(seed, trials, _LEVI_TAG ^ _RANK_TAG)
        dims = [
            modular.bracket_kernel_dim(model, b_s1.vectors, _random_point(pu, s), primes)
            for s in seeds
        ]
        b1_dim = min(dims)
        b1_stable = _stable(dims, b1_dim)
    c_unipotent = pu.dim - b_s1.dim + b1_dim
    if c_unipotent < 0:
        raise ComplexityError(f"negative complexity {c_unipotent} on the nilradical")
    stable = s1_stable and rank_stable and b1_stable
    if not stable:
        _warn_unstable("a Levi-path stabilizer dimension")
    return ComplexityReport(
        complexity=c_levi + c_unipotent,
        method="levi",
        trials=trials,
        seeds=_trial_seeds(seed, trials, _LEVI_TAG),
        stable=stable,
    )


def p_subalgebra(
    model: LieAlgebraModel,
    h_semisimple: SubspaceBasis,
    center_hull: SubspaceBasis,
    seed: int = 0,
    trials: int = _DEFAULT_TRIALS,
) -> SubspaceBasis:
    """The largest hull subtorus kept by generic Borel translates.

    ``p = center_hull ∩ ⋂_t (h_semisimple + Ad(g_t) b)`` over independent
    random words; the intersection must stabilize (one extra trial checks,
    instability is flagged), and adding ``p`` to ``h_semisimple`` must not
    change the generic sum dimension (verified).
    """
    for i, z in enumerate(center_hull.vectors):
        for z2 in center_hull.vectors[i + 1 :]:
            if any(model.bracket_vec(z, z2)):
                raise ComplexityError("the hull is not a torus")
        for x in h_semisimple.vectors:
            if not h_semisimple.contains(model.bracket_vec(z, x)):
                raise ComplexityError("the hull does not normalize the subalgebra")
    b = la.borel_basis(model)
    seeds = _trial_seeds(seed, trials + 2, _PSUB_TAG)
    kept = center_hull

    def borel_translate(s: int) -> SubspaceBasis:
        rows = modular.conjugate_rows(model, la.random_word(model, s), b.vectors)
        return SubspaceBasis(model.dim, list(h_semisimple.vectors) + rows)

    for t in range(trials):
        kept = la.intersect(kept, borel_translate(seeds[t]))
    shrunk = la.intersect(kept, borel_translate(seeds[trials]))
    if shrunk.dim != kept.dim:
        _warn_unstable("the kept-line intersection")
        kept = shrunk
    word = la.random_word(model, seeds[trials + 1])
    translate = modular.conjugate_rows(model, word, b.vectors)
    with_p = modular.rows_rank(
        list(h_semisimple.vectors) + list(kept.vectors) + translate, pick_primes(seed ^ _PRIME_TAG)
    )
    without = modular.rows_rank(
        list(h_semisimple.vectors) + translate, pick_primes(seed ^ _PRIME_TAG)
    )
    if with_p != without:
        raise ComplexityError("the kept line changes the generic sum dimension")
    return kept


def nonsaturated_complexity_one(pair, seed: int = 0) -> bool:
    """Complexity-one test for a centred pair through its saturation.

    ``pair`` is a realized pair whose centre ``z`` may be smaller than the
    scalar hull ``z~`` of ``z_g(h)``.  True iff ``c(g, h~) = 1`` and ``z``
    covers ``z~/p``, or ``c(g, h~) = 0`` and the image of ``z`` is a
    hyperplane in ``z~/p``.
    """
    from liecx.pairs import spec as pairspec

    saturation = pairspec.saturate(pair)
    model = pair.model
    h_tilde = SubspaceBasis(model.dim, [list(v) for v in saturation.h_saturated])
    c_tilde = complexity_oracle(model, h_tilde, seed=seed).complexity
    h_semi = SubspaceBasis(model.dim, [list(v) for v in pair.semisimple_columns])
    p = p_subalgebra(model, h_semi, saturation.hull, seed=seed)
    z = SubspaceBasis(model.dim, [list(v) for v in pair.center_columns])
    image = la.subspace_sum_dim(z, p) - p.dim
    quotient = saturation.hull.dim - p.dim
    if c_tilde == 1:
        return image == quotient
    if c_tilde == 0:
        return image == quotient - 1
    return False
