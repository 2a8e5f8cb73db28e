"""Root systems of the simple families A-G with Chevalley structure constants.

Roots are stored as integer coordinate tuples in the basis of simple roots.
Positive roots are produced by a height-first walk using root strings, so the
order is (height, coords)-sorted and deterministic.  Structure constants
follow the extraspecial-pair normalization: for each non-simple positive root
the minimal special pair gets N = +(p+1), and every other constant is derived
from the three- and four-root identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache


class RootSystemError(ValueError):
    """Invalid root-system construction or subsystem request."""


def _chain(n):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    for i in range(n - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    return c


def _cartan_and_norms(family, rank):
    """Cartan matrix C[i][j] = <a_i, a_j^v> and half square norms d_i."""
    if family == "A":
        if rank < 1:
            raise RootSystemError("A_n needs n >= 1")
        return _chain(rank), [1] * rank
    if family == "B":
        if rank < 2:
            raise RootSystemError("B_n needs n >= 2")
        c = _chain(rank)
        c[rank - 2][rank - 1] = -2
        return c, [2] * (rank - 1) + [1]
    if family == "C":
        if rank < 2:
            raise RootSystemError("C_n needs n >= 2")
        c = _chain(rank)
        c[rank - 1][rank - 2] = -2
        return c, [1] * (rank - 1) + [2]
    if family == "D":
        if rank < 3:
            raise RootSystemError("D_n needs n >= 3")
        c = _chain(rank)
        if rank > 3:
            c[rank - 2][rank - 1] = 0
            c[rank - 1][rank - 2] = 0
            c[rank - 3][rank - 1] = -1
            c[rank - 1][rank - 3] = -1
        return c, [1] * rank
    if family == "E":
        if rank not in (6, 7, 8):
            raise RootSystemError("E_n needs n in {6, 7, 8}")
        # nodes 1,3,4,...,n form a chain; node 2 hangs off node 4
        c = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            c[i][i] = 2
        chain = [0] + list(range(2, rank))
        for a, b in zip(chain, chain[1:]):
            c[a][b] = c[b][a] = -1
        c[1][3] = c[3][1] = -1
        return c, [1] * rank
    if family == "F":
        if rank != 4:
            raise RootSystemError("F needs rank 4")
        c = _chain(4)
        c[1][2] = -2
        return c, [2, 2, 1, 1]
    if family == "G":
        if rank != 2:
            raise RootSystemError("G needs rank 2")
        return [[2, -1], [-3, 2]], [1, 3]
    raise RootSystemError(f"unknown family {family!r}")


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data for one simple type."""

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    # -- basic queries ----------------------------------------------------

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    @property
    def num_positive(self):
        return len(self.positive_roots)

    @property
    def num_roots(self):
        return 2 * len(self.positive_roots)

    @property
    def algebra_dim(self):
        return self.num_roots + self.rank

    def all_roots(self):
        neg = tuple(tuple(-x for x in r) for r in self.positive_roots)
        return self.positive_roots + neg

    def is_root(self, v):
        return tuple(v) in self._root_set()

    def _root_set(self):
        if "rset" not in self._cache:
            self._cache["rset"] = frozenset(self.all_roots())
        return self._cache["rset"]

    def pairing(self, v, i):
        """<v, a_i^v> for v in simple-root coordinates."""
        return sum(v[j] * self.cartan[j][i] for j in range(self.rank))

    def norm2(self, v):
        """(v, v) with short roots normalized to squared length 2."""
        n = 0
        for i in range(self.rank):
            for j in range(self.rank):
                n += v[i] * v[j] * self.d[j] * self.cartan[i][j]
        return n

    def height(self, v):
        return sum(v)

    def highest_root(self):
        return max(self.positive_roots, key=lambda r: (sum(r), r))

    def lowest_root(self):
        return tuple(-x for x in self.highest_root())

    def coroot_coords(self, v):
        """Coordinates of v^v = 2v/(v,v) in the simple-coroot basis."""
        n = self.norm2(v)
        out = []
        for i in range(self.rank):
            c = Fraction(2 * self.d[i] * v[i], n)
            if c.denominator != 1:
                raise RootSystemError(f"non-integral coroot for {v}")
            out.append(int(c))
        return tuple(out)

    # -- structure constants ----------------------------------------------

    def structure_constant(self, a, b):
        """N(a, b) with [e_a, e_b] = N(a, b) e_{a+b}; 0 if a+b is not a root."""
        a, b = tuple(a), tuple(b)
        s = tuple(x + y for x, y in zip(a, b))
        if not self.is_root(s) or not self.is_root(a) or not self.is_root(b):
            return 0
        return self._nconst()[(a, b)]

    def string_down(self, a, b):
        """p = max{k : b - k a is a root} for roots a, b."""
        p = 0
        cur = tuple(x - y for x, y in zip(b, a))
        while self.is_root(cur):
            p += 1
            cur = tuple(x - y for x, y in zip(cur, a))
        return p

    def _nconst(self):
        if "nconst" not in self._cache:
            self._cache["nconst"] = _structure_constants(self)
        return self._cache["nconst"]

    def extraspecial_pairs(self):
        """Map gamma -> (a, b), the minimal special pair with a + b = gamma."""
        if "extra" not in self._cache:
            order = {r: i for i, r in enumerate(self.positive_roots)}
            extra = {}
            for g in self.positive_roots:
                best = None
                for a in self.positive_roots:
                    b = tuple(x - y for x, y in zip(g, a))
                    if b in order and order[a] < order[b]:
                        if best is None or order[a] < order[best[0]]:
                            best = (a, b)
                if best is not None:
                    extra[g] = best
            self._cache["extra"] = extra
        return self._cache["extra"]

    # -- export -------------------------------------------------------------

    def export_text(self):
        """Deterministic plain-text dump (roots in production order)."""
        lines = [f"root system {self.name}"]
        lines.append("cartan " + "; ".join(" ".join(map(str, row)) for row in self.cartan))
        lines.append("d " + " ".join(map(str, self.d)))
        for r in self.positive_roots:
            lines.append("+ " + " ".join(map(str, r)))
        return "\n".join(lines) + "\n"


def _positive_roots(cartan, rank):
    simple = []
    for i in range(rank):
        v = [0] * rank
        v[i] = 1
        simple.append(tuple(v))
    known = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for g in sorted(layer):
            for i in range(rank):
                cand = list(g)
                cand[i] += 1
                cand = tuple(cand)
                if cand in known:
                    continue
                # root string: g + a_i is a root iff p - <g, a_i^v> > 0
                p = 0
                cur = list(g)
                cur[i] -= 1
                while tuple(cur) in known or (sum(abs(x) for x in cur) == 0):
                    if sum(abs(x) for x in cur) == 0:
                        break
                    p += 1
                    cur[i] -= 1
                pair = sum(g[j] * cartan[j][i] for j in range(rank))
                if p - pair > 0:
                    known.add(cand)
                    nxt.append(cand)
                    out.append(cand)
        layer = nxt
    out.sort(key=lambda r: (sum(r), r))
    return tuple(out)


def _structure_constants(rs):
    """All N(a, b) over pairs of roots with a + b a root."""
    order = {r: i for i, r in enumerate(rs.positive_roots)}
    pos = set(rs.positive_roots)
    nconst = {}

    def add(v, w):
        return tuple(x + y for x, y in zip(v, w))

    def sub(v, w):
        return tuple(x - y for x, y in zip(v, w))

    def neg(v):
        return tuple(-x for x in v)

    # positive pairs, by increasing height of the sum
    extra = rs.extraspecial_pairs()

    def n_pos(a, b):
        """N(a, b) for positive roots with positive-root sum (order a < b)."""
        if (a, b) in nconst:
            return nconst[(a, b)]
        g = add(a, b)
        a1, b1 = extra[g]
        if (a, b) == (a1, b1):
            val = Fraction(rs.string_down(a1, b1) + 1)
        else:
            # four-root identity on (a, b, -a1, -b1)
            t1 = Fraction(0)
            d1 = sub(b, a1)
            if d1 in pos or neg(d1) in pos:
                t1 = Fraction(n_any(b, neg(a1)) * n_any(a, neg(b1)), rs.norm2(d1))
            t2 = Fraction(0)
            d2 = sub(a, a1)
            if d2 in pos or neg(d2) in pos:
                t2 = Fraction(n_any(neg(a1), a) * n_any(b, neg(b1)), rs.norm2(d2))
            val = Fraction(rs.norm2(g)) * (t1 + t2) / n_pos(a1, b1)
        if val.denominator != 1:
            raise RootSystemError("non-integral structure constant")
        nconst[(a, b)] = int(val)
        nconst[(b, a)] = -int(val)
        return nconst[(a, b)]

    def n_any(a, b):
        """N(a, b) for arbitrary roots (sum assumed a root or not; 0 if not)."""
        g = add(a, b)
        if g not in pos and neg(g) not in pos:
            return 0
        apos, bpos = a in pos, b in pos
        if apos and bpos:
            if order[a] < order[b]:
                return n_pos(a, b)
            return -n_pos(b, a)
        if not apos and not bpos:
            return -n_any(neg(a), neg(b))
        if apos and not bpos:
            if g in pos:
                # (-b) + g = a: N(a, b) = -N(-b, g) (g, g)/(a, a)
                val = Fraction(-n_any(neg(b), g) * rs.norm2(g), rs.norm2(a))
            else:
                val = Fraction(n_any(neg(g), a) * rs.norm2(g), rs.norm2(b))
            if val.denominator != 1:
                raise RootSystemError("non-integral structure constant")
            return int(val)
        return -n_any(b, a)

    heights = sorted(pos, key=lambda r: (sum(r), r))
    for g in heights:
        if g in extra:
            for a in rs.positive_roots:
                b = sub(g, a)
                if b in pos and order[a] < order[b]:
                    n_pos(a, b)

    # full table over all sign combinations
    table = {}
    allr = list(pos) + [neg(r) for r in pos]
    for a in allr:
        for b in allr:
            g = add(a, b)
            if g in pos or neg(g) in pos:
                table[(a, b)] = n_any(a, b)
    return table


@lru_cache(maxsize=None)
def root_system(family, rank):
    """Construct the root system of a simple type, e.g. root_system("E", 8)."""
    family = family.upper()
    cartan, d = _cartan_and_norms(family, rank)
    pos = _positive_roots(cartan, rank)
    return RootSystem(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        d=tuple(d),
        positive_roots=pos,
    )


# -- subsystems -------------------------------------------------------------


@dataclass(frozen=True)
class Subsystem:
    """A closed subsystem given by a valid simple system inside a root system."""

    parent: RootSystem
    simple: tuple[tuple[int, ...], ...]   # simple roots, in parent coordinates
    positive: tuple[tuple[int, ...], ...]  # all positive roots of the subsystem
    components: tuple[tuple[str, int, tuple[int, ...]], ...]
    # components: (family, rank, indices of this component's simples)

    @property
    def num_positive(self):
        return len(self.positive)

    @property
    def rank(self):
        return len(self.simple)

    def cartan(self):
        rs = self.parent
        out = []
        for a in self.simple:
            na = rs.norm2(a)
            row = [Fraction(2 * _inner(rs, b, a), na) for b in self.simple]
            if any(x.denominator != 1 for x in row):
                raise RootSystemError("non-integral subsystem Cartan matrix")
            out.append(tuple(int(x) for x in row))
        return tuple(out)


def _inner(rs, v, w):
    n = 0
    for i in range(rs.rank):
        for j in range(rs.rank):
            n += v[i] * w[j] * rs.d[j] * rs.cartan[i][j]
    return n


def _rank_of(vectors):
    rows = [list(map(Fraction, v)) for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        rank += 1
    return rank


def classify_gram(gram):
    """Identify (family, rank) of an irreducible simple system from its Gram matrix.

    ``gram[i][j]`` is the inner product of simple roots i and j, in any global
    scaling; only the (integral) Cartan pairings derived from it are used.
    """
    k = len(gram)
    if k == 1:
        return ("A", 1)
    cart = [[0] * k for _ in range(k)]
    for i in range(k):
        na = gram[i][i]
        for j in range(k):
            v = Fraction(2) * gram[j][i] / na
            if v.denominator != 1:
                raise RootSystemError("bad subsystem pairing")
            cart[j][i] = int(v)
    prods = {}
    for i in range(k):
        for j in range(i + 1, k):
            prods[(i, j)] = cart[i][j] * cart[j][i]
    deg = [sum(1 for (i, j), p in prods.items() if p and (i == v or j == v)) for v in range(k)]
    triple = any(p == 3 for p in prods.values())
    double = any(p == 2 for p in prods.values())
    if triple:
        if k != 2:
            raise RootSystemError("invalid G2-like subsystem")
        return ("G", 2)
    if double:
        if max(deg) > 2:
            raise RootSystemError("invalid doubled branching subsystem")
        if k == 2:
            # B2 and C2 coincide; report by which end is long
            return ("B", 2)
        # a chain with one double bond: B, C, or F4
        norms = sorted(gram[i][i] for i in range(k))
        longs = sum(1 for i in range(k) if gram[i][i] == max(norms))
        shorts = k - longs
        if longs > 1 and shorts > 1:
            if k != 4:
                raise RootSystemError("invalid F4-like subsystem")
            return ("F", 4)
        if shorts == 1:
            return ("B", k)
        return ("C", k)
    if max(deg, default=0) <= 2 and sum(1 for x in deg if x == 1) <= 2:
        return ("A", k)
    if max(deg) == 3:
        n3 = sum(1 for x in deg if x == 3)
        if n3 != 1:
            raise RootSystemError("invalid branching subsystem")
        # D or E: look at arm lengths from the branch node
        arms = _arm_lengths(prods, deg, k)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return ("D", k)
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return ("E", k)
        raise RootSystemError("invalid branching subsystem")
    raise RootSystemError("unrecognized subsystem diagram")


def match_simple_order(gram, family, rank):
    """Permutation aligning a simple system with the canonical node order.

    Returns ``perm`` such that reindexing the given simple roots as
    ``simples[perm[0]], ..., simples[perm[rank-1]]`` reproduces the Cartan
    matrix of ``root_system(family, rank)`` exactly.  Raises if no such
    alignment exists.
    """
    k = len(gram)
    target = root_system(family, rank).cartan
    cand = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            v = Fraction(2) * gram[i][j] / gram[j][j]
            if v.denominator != 1:
                raise RootSystemError("bad subsystem pairing")
            cand[i][j] = int(v)
    assignment = [None] * k
    used = [False] * k

    def backtrack(node):
        if node == k:
            return True
        for c in range(k):
            if used[c]:
                continue
            ok = True
            for prev in range(node):
                pc = assignment[prev]
                if cand[pc][c] != target[prev][node] or cand[c][pc] != target[node][prev]:
                    ok = False
                    break
            if ok and cand[c][c] == target[node][node]:
                assignment[node] = c
                used[c] = True
                if backtrack(node + 1):
                    return True
                used[c] = False
                assignment[node] = None
        return False

    if k != rank or not backtrack(0):
        raise RootSystemError(f"simple system does not match {family}{rank} node order")
    return tuple(assignment)


def _classify_component(rs, simples):
    """Identify the family and rank of an irreducible simple system."""
    gram = [[_inner(rs, a, b) for b in simples] for a in simples]
    return classify_gram(gram)


def _arm_lengths(prods, deg, k):
    adj = {i: set() for i in range(k)}
    for (i, j), p in prods.items():
        if p:
            adj[i].add(j)
            adj[j].add(i)
    branch = next(v for v in range(k) if deg[v] == 3)
    arms = []
    for start in adj[branch]:
        length = 1
        prev, cur = branch, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return arms


def root_subsystem(rs, generators):
    """Closed subsystem with the given roots as its simple system.

    generators: iterable of parent-coordinate root vectors.  Raises
    RootSystemError if a generator is not a root, the set is linearly
    dependent, pairwise pairings are positive (not a simple system), or the
    closure contains a positive root not expressible in the generators.
    """
    gens = [tuple(g) for g in generators]
    for g in gens:
        if not rs.is_root(g):
            raise RootSystemError(f"{g} is not a root")
    if len(set(gens)) != len(gens):
        raise RootSystemError("duplicate generators")
    if _rank_of(gens) != len(gens):
        raise RootSystemError("generators are linearly dependent")
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            if i != j and _inner(rs, a, b) > 0:
                raise RootSystemError(
                    "generators are not a simple system (positive pairing)"
                )
    # closure under addition within the parent system
    current = set(gens) | {tuple(-x for x in g) for g in gens}
    changed = True
    while changed:
        changed = False
        cur = list(current)
        for a in cur:
            for b in cur:
                s = tuple(x + y for x, y in zip(a, b))
                if s not in current and rs.is_root(s):
                    current.add(s)
                    current.add(tuple(-x for x in s))
                    changed = True
    # positivity with respect to the generators: every closure root must be
    # a nonnegative or nonpositive integer combination of the generators
    pos = []
    for r in current:
        coeffs = _solve_in_basis(gens, r)
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            raise RootSystemError(f"closure root {r} outside generator lattice")
        if all(c >= 0 for c in coeffs):
            pos.append((r, tuple(int(c) for c in coeffs)))
        elif not all(c <= 0 for c in coeffs):
            raise RootSystemError(f"closure root {r} has mixed signs")
    # identify irreducible components
    comp_ids = _components(rs, gens)
    comps = []
    for indices in comp_ids:
        fam, rk = _classify_component(rs, [gens[i] for i in indices])
        comps.append((fam, rk, tuple(indices)))
    pos.sort(key=lambda rc: (sum(rc[1]), rc[0]))
    return Subsystem(
        parent=rs,
        simple=tuple(gens),
        positive=tuple(r for r, _ in pos),
        components=tuple(comps),
    )


def _components(rs, gens):
    k = len(gens)
    seen = [False] * k
    out = []
    for s in range(k):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(k):
                if not seen[w] and _inner(rs, gens[v], gens[w]) != 0:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def _solve_in_basis(basis, target):
    """Rational coordinates of target in span(basis), or None."""
    rows = [list(map(Fraction, b)) for b in basis]
    n = len(rows)
    if n == 0:
        return None
    m = len(rows[0])
    # solve A^T x = target
    aug = [[rows[j][i] for j in range(n)] + [Fraction(target[i])] for i in range(m)]
    r = 0
    pivots = []
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    return sol


# -- representation dimensions ----------------------------------------------


def weyl_dim(rs, marks):
    """Dimension of the irreducible module with the given fundamental marks."""
    if len(marks) != rs.rank:
        raise RootSystemError("marks length must equal rank")
    num = Fraction(1)
    for a in rs.positive_roots:
        cv = rs.coroot_coords(a)
        top = sum((m + 1) * c for m, c in zip(marks, cv))
        bot = sum(cv)
        num *= Fraction(top, bot)
    if num.denominator != 1:
        raise RootSystemError("non-integral Weyl dimension")
    return int(num)
