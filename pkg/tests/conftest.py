"""Shared helpers: a seeded presentation generator and a Smith-form oracle."""

from __future__ import annotations

import random
from itertools import combinations
from math import gcd

from polyadc import (
    Comp,
    Gen,
    Id,
    PolyPresentation,
    build,
    determinant,
    eval_table,
    is_valid_table,
    lambda_presentation,
)
from polyadc import nu


def minors_diagonal(dense):
    """Smith diagonal predicted by gcds of k x k minors (independent oracle)."""
    m = len(dense)
    n = len(dense[0]) if dense else 0
    diag = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                sub = [[dense[i][j] for j in cols] for i in rows]
                g = gcd(g, abs(determinant(sub)))
        if g == 0:
            break
        diag.append(g // prev)
        prev = g
    while len(diag) < min(m, n):
        diag.append(0)
    return tuple(diag)


def random_matrix(rng, max_side=5, max_entry=5):
    m = rng.randint(1, max_side)
    n = rng.randint(1, max_side)
    return [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(m)]


# ---------------------------------------------------------------------------
# random presentations

def _path_expr(start, path):
    if not path:
        return Id(Gen(start))
    expr = Gen(path[-1])
    for name in reversed(path[:-1]):
        expr = Comp(0, Gen(name), expr)
    return expr


def random_presentation(seed) -> PolyPresentation:
    """A small presentation (dimensions <= 3, at most 6 generators).

    Boundaries of 2-generators are parallel edge paths; boundaries of
    3-generators are built from whiskered and composed 2-generators whose
    tables agree below the top row.  Loops and endo cells are allowed, so
    the output exercises every classification outcome.
    """
    rng = random.Random(seed)
    n0 = rng.randint(1, 2)
    budget = 6 - n0
    n1 = rng.randint(0, min(3, budget))
    budget -= n1
    n2 = rng.randint(0, min(2, budget)) if n1 else 0
    budget -= n2
    n3 = rng.randint(0, min(1, budget)) if n2 else 0

    objs = ["v%d" % i for i in range(n0)]
    levels = [list(objs)]
    boundary = {}

    ones = []
    ends = {}
    for i in range(n1):
        name = "e%d" % i
        u, v = rng.choice(objs), rng.choice(objs)
        boundary[name] = (Gen(u), Gen(v))
        ends[name] = (u, v)
        ones.append(name)
    if ones:
        levels.append(ones)

    def random_path():
        u = rng.choice(objs)
        path = []
        node = u
        for _ in range(rng.randint(0, 2)):
            options = [e for e in ones if ends[e][0] == node]
            if not options:
                break
            e = rng.choice(options)
            path.append(e)
            node = ends[e][1]
        return u, node, tuple(path)

    twos = []
    if n2:
        groups = {}
        for _ in range(8):
            u, v, path = random_path()
            groups.setdefault((u, v), set()).add((u, path))
        for i in range(n2):
            key = rng.choice(sorted(groups))
            members = sorted(groups[key])
            s_start, s_path = rng.choice(members)
            t_start, t_path = rng.choice(members)
            name = "a%d" % i
            boundary[name] = (_path_expr(s_start, list(s_path)),
                              _path_expr(t_start, list(t_path)))
            twos.append(name)
        levels.append(twos)

    threes = []
    if n3:
        stub = PolyPresentation(levels, boundary)
        lam = lambda_presentation(stub)
        cands = [Gen(name) for name in twos]
        for _ in range(6):
            a, b = rng.choice(cands), rng.choice(cands)
            ta, tb = eval_table(stub, a), eval_table(stub, b)
            if nu.composable(ta, tb, 1):
                cands.append(Comp(1, a, b))
            elif nu.composable(ta, tb, 0):
                cands.append(Comp(0, a, b))
            else:
                u, node, path = random_path()
                wt = nu.identity(eval_table(stub, _path_expr(u, list(path))))
                if nu.composable(wt, ta, 0):
                    cands.append(Comp(0, Id(_path_expr(u, list(path))), a))
                elif nu.composable(ta, wt, 0):
                    cands.append(Comp(0, a, Id(_path_expr(u, list(path)))))
        groups = {}
        for expr in cands:
            table = eval_table(stub, expr)
            if is_valid_table(lam, table)[0]:
                groups.setdefault(table.rows[:-1], []).append(expr)
        if groups:
            members = groups[rng.choice(sorted(groups, key=repr))]
            src = rng.choice(members)
            tgt = rng.choice(members)
            boundary["T0"] = (src, tgt)
            threes.append("T0")
            levels.append(threes)

    return PolyPresentation(levels, boundary)


def catalog_presentations():
    """Every catalog presentation, for sweep tests."""
    entries = []
    for n in range(4):
        entries.append(build("oriental", (n,)))
    for n in range(4):
        entries.append(build("disk", (n,)))
    for n in range(-1, 3):
        entries.append(build("sphere", (n,)))
    for m in range(4):
        entries.append(build("ordinal", (m,)))
    entries.append(build("theta2", (3, 2, 0, 1)))
    entries.append(build("theta2", (1, 2)))
    for name in ("loop", "endo2cell", "square", "forestA"):
        entries.append(build(name))
    return [entry.as_presentation() for entry in entries]
