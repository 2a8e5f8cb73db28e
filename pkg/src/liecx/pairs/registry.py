"""Built-in catalogue of reductive pairs.

Each catalogue line describes one family: index names, an admissibility
constraint, ambient components, parts with their placement mnemonics,
centre lines, and the expected invariants.  The mnemonics map onto
:class:`~liecx.pairs.spec.EmbeddingRecipe` kinds:

====================  =======================================
``blk``               block_direct_sum (plain)
``glp``               block_direct_sum (paired columns)
``sym2`` / ``sym3``   sym_power_sl2 with that power
``rsub:<tag>``        root_subsystem
``fix:<name>``        diagram_fixed_points
``spin7`` etc.        hardcoded windows and embeddings
====================  =======================================
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from liecx.pairs import recipes
from liecx.pairs.recipes import PairError
from liecx.pairs.spec import (
    CenterSpec,
    EmbeddingRecipe,
    PairSpec,
    PartSpec,
    build_env,
    couplings,
    eval_expr,
)

_TABLE_TEXT = """
# tag | indices | constraint | ambient | parts | invariants
T1:1  | n   | n>=2 | sl(n)      | so(n)[blk@0] | c=0
T1:2  | n,m | n>=1 and m>=1 | sl(n+m) | sl(n)[blk@0], sl(m)[blk@0], z(@0:p0=m;p1=-n) | c=0
T1:3  | n,m | n>=1 and m>=1 and n!=m | sl(n+m) | sl(n)[blk@0], sl(m)[blk@0] | c=0
T1:4  | n   | n>=2 | sl(2*n)    | sp(2*n)[blk@0] | c=0
T1:5  | n   | n>=1 | sl(2*n+1)  | sp(2*n)[blk@0] | c=0
T1:6  | n   | n>=1 | sl(2*n+1)  | sp(2*n)[blk@0], z(@0:p0=1;l0=-2*n) | c=0
T1:7  | n   | n>=3 | so(2*n)    | sl(n)[glp@0], z(@0:p0=1) | c=0
T1:8  | n   | n>=1 | so(4*n+2)  | sl(2*n+1)[glp@0] | c=0
T1:9  | n   | n>=1 | so(2*n+1)  | sl(n)[glp@0], z(@0:p0=1) | c=0
T1:10 | n,m | n>=m and m>=1 and n+m>=3 and n+m!=4 | so(n+m) | so(n)[blk@0], so(m)[blk@0] | c=0
T1:11 |     |      | so(9)      | so(7)[spin7@0] | c=0
T1:12 |     |      | so(7)      | g2[g2v7@0] | c=0
T1:13 |     |      | so(8)      | g2[g2v7@0] | c=0
T1:14 |     |      | so(10)     | so(7)[spin7@0], z(@0:f0=1) | c=0
T1:15 | n   | n>=1 | sp(2*n)    | sl(n)[glp@0], z(@0:p0=1) | c=0
T1:16 | n,m | n>=1 and m>=1 | sp(2*n+2*m) | sp(2*n)[blk@0], sp(2*m)[blk@0] | c=0
T1:17 | n   | n>=1 | sp(2*n)    | sp(2*n-2)[blk@0], z(@0:f0=1) | c=0
T1:18 |     |      | g2         | sl(3)[rsub:g2.a2@0] | c=0
T1:19 |     |      | g2         | sl(2)[rsub:g2.a1l@0], sl(2)[rsub:g2.a1s@0] | c=0
T1:20 |     |      | f4         | so(9)[rsub:f4.b4@0] | c=0
T1:21 |     |      | f4         | sp(6)[rsub:f4.c3@0], sl(2)[rsub:f4.a1@0] | c=0
T1:22 |     |      | e6         | sp(8)[hc:sp8e6@0] | c=0
T1:23 |     |      | e6         | f4[fix:f4e6@0] | c=0
T1:24 |     |      | e6         | so(10)[rsub:e6.d5@0] | c=0
T1:25 |     |      | e6         | so(10)[rsub:e6.d5@0], z(zc@0) | c=0
T1:26 |     |      | e6         | sl(6)[rsub:e6.a5@0], sl(2)[rsub:e6.a1@0] | c=0
T1:27 |     |      | e7         | e6[rsub:e7.e6@0], z(zc@0) | c=0
T1:28 |     |      | e7         | sl(8)[rsub:e7.a7@0] | c=0
T1:29 |     |      | e7         | so(12)[rsub:e7.d6@0], sl(2)[rsub:e7.d6a1@0] | c=0
T1:30 |     |      | e8         | so(16)[rsub:e8.d8@0] | c=0
T1:31 |     |      | e8         | sl(2)[rsub:e8.a1@0], e7[rsub:e8.e7@0] | c=0
T2:1  | n   | n>=1 | sl(2*n)    | sl(n)[blk@0], sl(n)[blk@0] | c=1
T2:2  | n   | n>=3 | sl(n)      | sl(n-2)[blk@0], z(@0:p0=1;l0=2-n), z(@0:p0=1;l1=2-n) | c=1
T2:3  | n   | n>=5 and d1!=d2 and d1+d2==2-n | sl(n) | sl(n-2)[blk@0], z(@0:p0=1;l0=d1;l1=d2) | c=1 | extras=d1:-1;d2:3-n
T2:4  |     |      | sl(6)      | sp(4)[blk@0], sl(2)[blk@0], z(@0:p0=1;p1=-2) | c=1
T2:5  | n   | n>=5 | so(n)      | so(n-2)[blk@0] | c=1
T2:6  | n   | n>=3 | so(2*n+1)  | sl(n)[glp@0] | c=1
T2:7  | n   | n>=2 | so(4*n)    | sl(2*n)[glp@0] | c=1
T2:8  |     |      | so(9)      | g2[g2v7@0], z(@0:f0=1) | c=1
T2:9  |     |      | so(11)     | sl(2)[sym2@0], so(7)[spin7@0] | c=1
T2:10 |     |      | so(10)     | so(7)[spin7@0] | c=1
T2:11 | n   | n>=2 | sp(2*n)    | sl(n)[glp@0] | c=1
T2:12 | n   | n>=2 | sp(2*n)    | sp(2*n-2)[blk@0] | c=1
T2:13 | n   | n>=3 | sp(2*n)    | sp(2*n-4)[blk@0], sl(2)[blk@0], sl(2)[blk@0] | c=1
T2:14 |     |      | sp(4)      | sl(2)[sym3@0] | c=1
T2:15 |     |      | e6         | so(9)[hc:so9e6@0], z(zc@0) | c=1
T2:16 |     |      | e7         | e6[rsub:e7.e6@0] | c=1
T2:17 |     |      | f4         | so(8)[rsub:f4.d4@0] | c=1
T3:1  | n,m | n>=1 and m>=0 | sl(n+2)+sp(2*m+2) | sl(n)[blk@0], sl(2)[blk@0;blk@1], sp(2*m)[blk@1], z(@0:p0=2;p1=-n) | c=0 | rank=5-d(m,0)-d(n,1) | s=gl(n-2)+sp(2*m-2)
T3:2  | n,m | n>=3 and m>=0 | sl(n+2)+sp(2*m+2) | sl(n)[blk@0], sl(2)[blk@0;blk@1], sp(2*m)[blk@1] | c=0 | rank=6-d(m,0) | s=sl(n-2)+sp(2*m-2)
T3:3  | n,m | n>=0 and m>=0 | sp(2*n+2)+sp(2*m+2) | sp(2*n)[blk@0], sl(2)[blk@0;blk@1], sp(2*m)[blk@1] | c=0 | rank=3-d(m,0)-d(n,0) | s=sp(2*n-2)+sp(2*m-2)+c
T3:4  | n,m,l | n>=0 and m>=0 and l>=0 | sp(2*n+2)+sp(2*m+2)+sp(2*l+2) | sl(2)[blk@0;blk@1;blk@2], sp(2*n)[blk@0], sp(2*m)[blk@1], sp(2*l)[blk@2] | c=0 | rank=6-d(n,0)-d(m,0)-d(l,0) | s=sp(2*n-2)+sp(2*m-2)+sp(2*l-2)
T3:5  | n,m | n>=0 and m>=0 | sp(2*n+2)+sp(4)+sp(2*m+2) | sp(2*n)[blk@0], sl(2)[blk@0;blk@1], sl(2)[blk@1;blk@2], sp(2*m)[blk@2] | c=0 | rank=6-d(m,0)-d(n,0) | s=sp(2*n-2)+sp(2*m-2)
T3:6  | n   | n>=1 | sp(2*n+4)+sp(4) | sp(2*n)[blk@0], sp(4)[blk@0;blk@1] | c=0 | rank=6-d(n,1) | s=sp(2*n-4)
T3:7  | n   | n>=2 | sl(n)+sl(n+1) | sl(n)[blk@0;blk@1], z(@1:p0=1;l0=-n) | c=0 | rank=2*n-1 | s=0
T3:8  | n   | n>=3 | so(n)+so(n+1) | so(n)[blk@0;blk@1] | c=0 | rank=n | s=0
T3:9  | h   |      | $h+$h      | $h[blk@0;blk@1] | c=0 | rank=rkh | s=cartan
T4:1  | n   | n>=0 | sp(2*n+2)+sl(3) | sp(2*n)[blk@0], sl(2)[blk@0;sym2@1] | c=1 | rank=4-d(n,0) | s=sp(2*n-2)
T4:2  | n   | n>=0 | sp(2*n+2)+g2 | sp(2*n)[blk@0], sl(2)[blk@0;rsub:g2.a1l@1], sl(2)[rsub:g2.a1s@1] | c=1 | rank=4-d(n,0) | s=sp(2*n-2)
T4:3  | n   | n>=0 | sp(2*n+2)+f4 | sp(2*n)[blk@0], sl(2)[blk@0;rsub:f4.a1@1], sp(6)[rsub:f4.c3@1] | c=1 | rank=6-d(n,0) | s=sp(2*n-2)
T4:4  | n   | n>=0 | sp(2*n+2)+e6 | sp(2*n)[blk@0], sl(2)[blk@0;rsub:e6.a1@1], sl(6)[rsub:e6.a5@1] | c=1 | rank=6-d(n,0) | s=sp(2*n-2)+c+c
T4:5  | n   | n>=0 | sp(2*n+2)+e7 | sp(2*n)[blk@0], sl(2)[blk@0;rsub:e7.d6a1@1], so(12)[rsub:e7.d6@1] | c=1 | rank=6-d(n,0) | s=sp(2*n-2)+sl(2)+sl(2)+sl(2)
T4:6  | n   | n>=0 | sp(2*n+2)+e8 | sp(2*n)[blk@0], sl(2)[blk@0;rsub:e8.a1@1], e7[rsub:e8.e7@1] | c=1 | rank=6-d(n,0) | s=sp(2*n-2)+so(8)
T4:7  | n,k | n>=0 and k>=2 | sp(2*n+2)+so(k+3) | sp(2*n)[blk@0], sl(2)[blk@0;sym2@1], so(k)[blk@1] | c=1 | rank=5-d(n,0)-d(k,2) | s=sp(2*n-2)+so(k-3)
T4:8  | n,m | n>=1 and m>=1 | sl(n+2)+sl(m+2) | sl(n)[blk@0], sl(2)[blk@0;blk@1], sl(m)[blk@1], z(@0:p0=2;p1=-n), z(@1:p0=-m;p1=2) | c=1 | rank=6-d(n,1)-d(m,1) | s=gl(n-2)+gl(m-2)
T4:9  | n,m | n>=1 and m>=3 | sl(n+2)+sl(m+2) | sl(n)[blk@0], sl(2)[blk@0;blk@1], sl(m)[blk@1], z(@0:p0=2;p1=-n) | c=1 | rank=7-d(n,1) | s=gl(n-2)+sl(m-2)
T4:10 | n,m | n>=3 and m>=3 | sl(n+2)+sl(m+2) | sl(n)[blk@0], sl(2)[blk@0;blk@1], sl(m)[blk@1] | c=1 | rank=8 | s=sl(n-2)+sl(m-2)
T4:11 | n   | n>=0 | sp(2*n+2)+sl(3) | sp(2*n)[blk@0], sl(2)[blk@0;blk@1] | c=1 | rank=4-d(n,0) | s=sp(2*n-2)
T4:12 | n   | n>=0 | sl(4)+sp(2*n+2) | sl(2)[blk@0], sl(2)[blk@0;blk@1], sp(2*n)[blk@1] | c=1 | rank=5-d(n,0) | s=sp(2*n-2)
T4:13 | n,m | n>=0 and m>=0 | sp(2*n+2)+sl(4)+sp(2*m+2) | sl(2)[blk@0;blk@1], sl(2)[blk@1;blk@2], sp(2*n)[blk@0], sp(2*m)[blk@2], z(@1:p0=1;p1=-1) | c=1 | rank=7-d(n,0)-d(m,0) | s=sp(2*n-2)+sp(2*m-2)
T4:14 | n,m,k | n>=1 and m>=0 and k>=0 | sl(n+2)+sp(2*k+2)+sp(2*m+2) | sl(n)[blk@0], sl(2)[blk@0;blk@1;blk@2], sp(2*k)[blk@1], sp(2*m)[blk@2], z(@0:p0=2;p1=-n) | c=1 | rank=7-d(n,1)-d(k,0)-d(m,0) | s=gl(n-2)+sp(2*k-2)+sp(2*m-2)
T4:15 | n,m,k | n>=3 and m>=0 and k>=0 | sl(n+2)+sp(2*k+2)+sp(2*m+2) | sl(n)[blk@0], sl(2)[blk@0;blk@1;blk@2], sp(2*k)[blk@1], sp(2*m)[blk@2] | c=1 | rank=8-d(k,0)-d(m,0) | s=sl(n-2)+sp(2*k-2)+sp(2*m-2)
T4:16 | n,m | n>=1 and m>=0 | sl(n+2)+sp(4)+sp(2*m+2) | sl(n)[blk@0], sl(2)[blk@0;blk@1], sl(2)[blk@1;blk@2], sp(2*m)[blk@2], z(@0:p0=2;p1=-n) | c=1 | rank=7-d(n,1)-d(m,0) | s=gl(n-2)+sp(2*m-2)
T4:17 | n,m | n>=3 and m>=0 | sl(n+2)+sp(4)+sp(2*m+2) | sl(n)[blk@0], sl(2)[blk@0;blk@1], sl(2)[blk@1;blk@2], sp(2*m)[blk@2] | c=1 | rank=8-d(m,0) | s=sl(n-2)+sp(2*m-2)
T4:18 | n,k | n>=0 and k>=1 | sp(2*k+4)+sp(2*n+2) | sp(2*k)[blk@0], sl(2)[blk@0], sl(2)[blk@0;blk@1], sp(2*n)[blk@1] | c=1 | rank=6-d(n,0)-d(k,1) | s=sp(2*k-4)+sp(2*n-2)
T4:19 | n,m,l,k | n>=0 and m>=0 and l>=0 and k>=0 | sp(2*n+2)+sp(2*m+2)+sp(2*l+2)+sp(2*k+2) | sl(2)[blk@0;blk@1;blk@2;blk@3], sp(2*n)[blk@0], sp(2*m)[blk@1], sp(2*l)[blk@2], sp(2*k)[blk@3] | c=1 | rank=8-d(n,0)-d(m,0)-d(l,0)-d(k,0) | s=sp(2*n-2)+sp(2*m-2)+sp(2*l-2)+sp(2*k-2)
T4:20 | n,m,k | n>=0 and m>=0 and k>=0 | sp(2*n+2)+sp(2*k+2)+sp(4)+sp(2*m+2) | sl(2)[blk@0;blk@1;blk@2], sl(2)[blk@2;blk@3], sp(2*n)[blk@0], sp(2*k)[blk@1], sp(2*m)[blk@3] | c=1 | rank=8-d(n,0)-d(m,0)-d(k,0) | s=sp(2*n-2)+sp(2*m-2)+sp(2*k-2)
T4:21 | n,m | n>=0 and m>=0 | sp(2*n+2)+sp(4)+sp(4)+sp(2*m+2) | sl(2)[blk@0;blk@1], sl(2)[blk@1;blk@2], sl(2)[blk@2;blk@3], sp(2*n)[blk@0], sp(2*m)[blk@3] | c=1 | rank=8-d(n,0)-d(m,0) | s=sp(2*n-2)+sp(2*m-2)
T4:22 | n   | n>=0 | sp(4)+sp(2*n+2) | sl(2)[blk@0;blk@1], sp(2*n)[blk@1], z(@0:f0=1) | c=1 | rank=4-d(n,0) | s=sp(2*n-2)
T4:23 | n   | n>=0 | sp(4)+sp(6)+sp(2*n+2) | sp(4)[blk@0;blk@1], sl(2)[blk@1;blk@2], sp(2*n)[blk@2] | c=1 | rank=7-d(n,0) | s=sp(2*n-2)
T4:24 |     |      | g2+sl(3)   | sl(3)[rsub:g2.a2@0;blk@1] | c=1 | rank=4 | s=0
T4:25 | n   | n>=2 | sl(n+3)+sl(3) | sl(n)[blk@0], sl(3)[blk@0;blk@1], z(@0:p0=3;p1=-n) | c=1 | rank=7-d(n,2) | s=gl(n-3)
T4:26 | n   | n>=4 | sl(n+3)+sl(3) | sl(n)[blk@0], sl(3)[blk@0;blk@1] | c=1 | rank=8 | s=sl(n-3)
T4:27 | n   | n>=2 | sl(n+1)+sl(n) | sl(n)[blk@0;blk@1] | c=1 | rank=2*n-1 | s=0
T4:28 |     |      | sp(8)+sp(6) | sl(2)[blk@0], sp(6)[blk@0;blk@1] | c=1 | rank=7 | s=0
T4:29 |     |      | so(7)+g2   | g2[g2v7@0;blk@1] | c=1 | rank=5 | s=0
T4:30 |     |      | sl(3)+sl(3)+sl(3) | sl(3)[blk@0;blk@1;blk@2] | c=1 | rank=6 | s=0
"""

_MNEMONICS = {
    "blk": ("block_direct_sum", None),
    "glp": ("block_direct_sum", "paired"),
    "sym2": ("sym_power_sl2", 2),
    "sym3": ("sym_power_sl2", 3),
    "adjdef": ("adjoint_into_defining", None),
}

_EXCEPTIONAL = ("g2", "f4", "e6", "e7", "e8")

# Sweep domain for the self-paired family with a free algebra slot.
H_SWEEP = (("sl", 2), ("sl", 3), ("sp", 4), ("so", 7), ("g2", 0))


@dataclass(frozen=True)
class TableEntry:
    table: int
    item: int
    spec: PairSpec
    expected_c: int
    expected_rank_expr: str = "-"
    expected_ssgp_expr: str = "-"
    oracle_capable: bool = True
    note: str = ""

    @property
    def key(self):
        return f"T{self.table}:{self.item}"

    @property
    def ambient(self):
        return self.spec.ambient

    @property
    def parts(self):
        return self.spec.parts

    @property
    def recipes(self):
        return tuple(p.recipes for p in self.spec.parts)

    @property
    def couplings(self):
        return couplings(self.spec)

    @property
    def constraints(self):
        return self.spec.constraint


def _split_top(text, sep):
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [t.strip() for t in out if t.strip()]


def _parse_alg(token):
    m = re.fullmatch(r"(\$?\w+)\((.*)\)", token)
    if m:
        return (m.group(1), m.group(2))
    return (token, "0")


def _parse_recipe(token):
    name, _, target = token.rpartition("@")
    if not name:
        raise PairError(f"bad recipe token {token!r}")
    if name in _MNEMONICS:
        kind, param = _MNEMONICS[name]
    elif name.startswith("rsub:"):
        kind, param = "root_subsystem", name[5:]
    elif name.startswith("fix:"):
        kind, param = "diagram_fixed_points", name[4:]
    elif name.startswith("hc:"):
        kind, param = "hardcoded", name[3:]
    elif name in ("spin7", "g2v7"):
        kind, param = "hardcoded", name
    else:
        raise PairError(f"unknown placement mnemonic {name!r}")
    return EmbeddingRecipe(kind, int(target), param)


def _parse_center(token, ambient):
    body = token[2:-1]  # strip "z(" ... ")"
    if body.startswith("zc@"):
        return CenterSpec("zc", int(body[3:]))
    m = re.fullmatch(r"@(\d+):(.*)", body)
    if not m:
        raise PairError(f"bad centre token {token!r}")
    target = int(m.group(1))
    weights = tuple(tuple(w.split("=", 1)) for w in m.group(2).split(";"))
    kind = ambient[target][0]
    style = "diag" if kind == "sl" else "pairs"
    return CenterSpec(style, target, weights)


def _parse_line(line):
    fields = [f.strip() for f in line.split("|")]
    if len(fields) < 6:
        raise PairError(f"short catalogue line: {line!r}")
    m = re.fullmatch(r"T(\d+):(\d+)", fields[0])
    table, item = int(m.group(1)), int(m.group(2))
    indices = tuple(t.strip() for t in fields[1].split(",") if t.strip())
    constraint = fields[2] or "True"
    ambient = tuple(_parse_alg(t) for t in _split_top(fields[3], "+"))
    parts, centers = [], []
    for token in _split_top(fields[4], ","):
        if token.startswith("z("):
            centers.append(_parse_center(token, ambient))
            continue
        m2 = re.fullmatch(r"(.+?)\[(.*)\]", token)
        if not m2:
            raise PairError(f"bad part token {token!r}")
        alg = _parse_alg(m2.group(1))
        recs = tuple(_parse_recipe(r.strip()) for r in m2.group(2).split(";"))
        parts.append(PartSpec(alg, recs))
    kv = {"c": None, "rank": "-", "s": "-", "extras": "", "note": ""}
    for extra in fields[5:]:
        key, _, val = extra.partition("=")
        kv[key.strip()] = val.strip()
    extras = tuple(
        tuple(pair.split(":", 1)) for pair in kv["extras"].split(";") if pair
    )
    spec = PairSpec(
        ambient=ambient,
        parts=tuple(parts),
        centers=tuple(centers),
        indices=indices,
        constraint=constraint,
        extras=extras,
    )
    return TableEntry(
        table=table,
        item=item,
        spec=spec,
        expected_c=int(kv["c"]),
        expected_rank_expr=kv["rank"],
        expected_ssgp_expr=kv["s"],
        note=kv["note"],
    )


def registry_load():
    """All catalogue entries keyed by (table, item), in catalogue order."""
    entries = {}
    for line in _TABLE_TEXT.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        entry = _parse_line(line)
        entries[(entry.table, entry.item)] = entry
    return entries


_REGISTRY = None


def get_registry():
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = registry_load()
    return _REGISTRY


def get_entry(table, item):
    try:
        return get_registry()[(table, item)]
    except KeyError:
        raise PairError(f"no catalogue entry T{table}:{item}") from None


def _compositions(total, count, base):
    if count == 1:
        yield (total,)
        return
    for first in range(base, total - base * (count - 1) + 1):
        for rest in _compositions(total - first, count - 1, base):
            yield (first,) + rest


def admissible_tuples(entry, count=3):
    """The smallest admissible index assignments, by total size then lex order."""
    names = entry.spec.indices
    if names == ("h",):
        return [{"h": alg} for alg in H_SWEEP][:count]
    if not names:
        return [{}][: max(count, 0)]
    base = 1 if entry.table in (1, 2) else 0
    out = []
    total = base * len(names)
    while len(out) < count and total <= base * len(names) + 80:
        for combo in _compositions(total, len(names), base):
            env = dict(zip(names, combo))
            try:
                build_env(entry.spec, dict(env))
            except PairError:
                continue
            out.append(env)
            if len(out) == count:
                break
        total += 1
    return out


# ---------------------------------------------------------------------------
# expected-invariant expressions
# ---------------------------------------------------------------------------


def _alg_dim_rank(kind, n):
    if kind == "gl":
        return (n * n, n) if n >= 1 else (0, 0)
    if kind == "c":
        return (1, 1)
    dim = recipes.alg_dim((kind, n))
    rank = recipes.alg_rank((kind, n))
    return (dim, rank)


def expected_rank(entry, env):
    """Expected rank of the pair at these index values, or None."""
    expr = entry.expected_rank_expr
    if expr == "-":
        return None
    if expr == "rkh":
        return recipes.alg_rank(tuple(env["h"]))
    return int(eval_expr(expr, env))


def expected_ssgp(entry, env):
    """Expected (dimension, rank) of the generic stabilizer, or None."""
    expr = entry.expected_ssgp_expr
    if expr == "-":
        return None
    if expr == "cartan":
        r = recipes.alg_rank(tuple(env["h"]))
        return (r, r)
    dim = rank = 0
    for token in expr.split("+"):
        token = token.strip()
        if token == "0":
            continue
        if token == "c":
            dim += 1
            rank += 1
            continue
        kind, size = _parse_alg(token)
        d, r = _alg_dim_rank(kind, int(eval_expr(size, env)))
        dim += d
        rank += r
    return (dim, rank)
