#!/usr/bin/env python3
"""Author data/catalog.txt: permutation generators for every group of order 2..24.

Indices follow the usual small-group numbering. Every group is checked for
its order, and groups of equal order are checked pairwise non-isomorphic, so
the census counts certify completeness.
"""
import itertools
import sys
from math import gcd

CENSUS = {2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5,
          13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5, 21: 2,
          22: 2, 23: 1, 24: 15}


def compose(x, y):  # functional composition: apply y, then x
    return tuple(x[i] for i in y)


def identity(d):
    return tuple(range(d))


def closure(gens):
    d = len(gens[0])
    e = identity(d)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = compose(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


def cycles(cs, d):
    p = list(range(d))
    for c in cs:
        for i, a in enumerate(c):
            p[a - 1] = c[(i + 1) % len(c)] - 1
    return tuple(p)


def cyclic(n):
    return [cycles([list(range(1, n + 1))], n)] if n > 1 else []


def direct(*factors):
    """Disjoint union of permutation groups given as (degree, gens)."""
    total = sum(d for d, _ in factors)
    gens = []
    off = 0
    for d, gs in factors:
        for g in gs:
            p = list(range(total))
            for i in range(d):
                p[off + i] = off + g[i]
            gens.append(tuple(p))
        off += d
    return total, gens


def C(n):
    return (n, cyclic(n))


def perm(d, *cyc_lists):
    return (d, [cycles(cs, d) for cs in cyc_lists])


def regular(elements, mul, gens):
    idx = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    return (n, [tuple(idx[mul(elements[i], g)] for i in range(n)) for g in gens])


def abstract_closure(gens, mul, one):
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


def metacyclic(n, m, r, s):
    """<a, b | a^n, b^m = a^s, b a b^-1 = a^r>, elements (i, j) = a^i b^j."""
    assert pow(r, m, n) == 1 and (r * s - s) % n == 0

    def mul(x, y):
        i, j = x
        k, l = y
        a = (i + k * pow(r, j, n)) % n
        b = j + l
        if b >= m:
            b -= m
            a = (a + s) % n
        return (a, b)
    gens = [(1 % n, 0), (0, 1 % m)]
    els = abstract_closure(gens, mul, (0, 0))
    assert len(els) == n * m, (n, m, r, s, len(els))
    return regular(els, mul, gens)


def matrix_group(mats, p):
    def mul(x, y):
        (a, b), (c, d) = x
        (e, f), (g, h) = y
        return (((a * e + b * g) % p, (a * f + b * h) % p),
                ((c * e + d * g) % p, (c * f + d * h) % p))
    one = ((1, 0), (0, 1))
    els = abstract_closure(mats, mul, one)
    return regular(els, mul, mats)


def abelian_semidirect(mods, aut, m):
    """(Z/mods[0] x ...) : C_m, generator of C_m acting by the integer matrix aut."""
    k = len(mods)

    def act(v, times):
        for _ in range(times):
            v = tuple(sum(aut[i][j] * v[j] for j in range(k)) % mods[i] for i in range(k))
        return v

    def mul(x, y):
        v, j = x
        w, l = y
        w2 = act(w, j)
        return (tuple((v[i] + w2[i]) % mods[i] for i in range(k)), (j + l) % m)
    gens = [(tuple(1 if i == t else 0 for i in range(k)), 0) for t in range(k)]
    gens.append((tuple(0 for _ in range(k)), 1))
    one = (tuple(0 for _ in range(k)), 0)
    els = abstract_closure(gens, mul, one)
    return regular(els, mul, gens)


def dihedral(n):  # order 2n, natural action on n points
    if n == 2:
        return direct(C(2), C(2))
    refl = [[i, n + 2 - i] for i in range(2, n + 1) if i < n + 2 - i]
    return perm(n, [list(range(1, n + 1))], refl)


def dicyclic(n):  # order 4n
    return metacyclic(2 * n, 2, 2 * n - 1, n)


S3 = perm(3, [[1, 2, 3]], [[1, 2]])
A4 = perm(4, [[1, 2, 3]], [[1, 2], [3, 4]])
S4 = perm(4, [[1, 2, 3, 4]], [[1, 2]])
D8 = dihedral(4)
Q8 = dicyclic(2)
DIC3 = dicyclic(3)

GROUPS = [
    (2, 1, "Z/2", C(2)),
    (3, 1, "Z/3", C(3)),
    (4, 1, "Z/4", C(4)),
    (4, 2, "Z/2xZ/2", direct(C(2), C(2))),
    (5, 1, "Z/5", C(5)),
    (6, 1, "S3", S3),
    (6, 2, "Z/6", C(6)),
    (7, 1, "Z/7", C(7)),
    (8, 1, "Z/8", C(8)),
    (8, 2, "Z/4xZ/2", direct(C(4), C(2))),
    (8, 3, "D8", D8),
    (8, 4, "Q8", Q8),
    (8, 5, "Z/2xZ/2xZ/2", direct(C(2), C(2), C(2))),
    (9, 1, "Z/9", C(9)),
    (9, 2, "Z/3xZ/3", direct(C(3), C(3))),
    (10, 1, "D10", dihedral(5)),
    (10, 2, "Z/10", C(10)),
    (11, 1, "Z/11", C(11)),
    (12, 1, "Z/3:Z/4", DIC3),
    (12, 2, "Z/12", C(12)),
    (12, 3, "A4", A4),
    (12, 4, "D12", dihedral(6)),
    (12, 5, "Z/6xZ/2", direct(C(6), C(2))),
    (13, 1, "Z/13", C(13)),
    (14, 1, "D14", dihedral(7)),
    (14, 2, "Z/14", C(14)),
    (15, 1, "Z/15", C(15)),
    (16, 1, "Z/16", C(16)),
    (16, 2, "Z/4xZ/4", direct(C(4), C(4))),
    (16, 3, "(Z/4xZ/2):Z/2", abelian_semidirect([4, 2], [[1, 0], [1, 1]], 2)),
    (16, 4, "Z/4:Z/4", metacyclic(4, 4, 3, 0)),
    (16, 5, "Z/8xZ/2", direct(C(8), C(2))),
    (16, 6, "M16", metacyclic(8, 2, 5, 0)),
    (16, 7, "D16", dihedral(8)),
    (16, 8, "QD16", metacyclic(8, 2, 3, 0)),
    (16, 9, "Q16", dicyclic(4)),
    (16, 10, "Z/4xZ/2xZ/2", direct(C(4), C(2), C(2))),
    (16, 11, "Z/2xD8", direct(C(2), D8)),
    (16, 12, "Z/2xQ8", direct(C(2), Q8)),
    (16, 13, "(Z/4xZ/2):Z/2 (Pauli)",
     matrix_group([((0, 1), (1, 0)), ((1, 0), (0, 4)), ((2, 0), (0, 2))], 5)),
    (16, 14, "Z/2xZ/2xZ/2xZ/2", direct(C(2), C(2), C(2), C(2))),
    (17, 1, "Z/17", C(17)),
    (18, 1, "D18", dihedral(9)),
    (18, 2, "Z/18", C(18)),
    (18, 3, "Z/3xS3", direct(C(3), S3)),
    (18, 4, "(Z/3xZ/3):Z/2", abelian_semidirect([3, 3], [[2, 0], [0, 2]], 2)),
    (18, 5, "Z/6xZ/3", direct(C(6), C(3))),
    (19, 1, "Z/19", C(19)),
    (20, 1, "Z/5:Z/4", dicyclic(5)),
    (20, 2, "Z/20", C(20)),
    (20, 3, "F20", perm(5, [[1, 2, 3, 4, 5]], [[2, 3, 5, 4]])),
    (20, 4, "D20", dihedral(10)),
    (20, 5, "Z/10xZ/2", direct(C(10), C(2))),
    (21, 1, "Z/7:Z/3", perm(7, [[1, 2, 3, 4, 5, 6, 7]], [[2, 3, 5], [4, 7, 6]])),
    (21, 2, "Z/21", C(21)),
    (22, 1, "D22", dihedral(11)),
    (22, 2, "Z/22", C(22)),
    (23, 1, "Z/23", C(23)),
    (24, 1, "Z/3:Z/8", metacyclic(3, 8, 2, 0)),
    (24, 2, "Z/24", C(24)),
    (24, 3, "SL(2,3)", matrix_group([((1, 1), (0, 1)), ((0, 2), (1, 0))], 3)),
    (24, 4, "Z/3:Q8", dicyclic(6)),
    (24, 5, "Z/4xS3", direct(C(4), S3)),
    (24, 6, "D24", dihedral(12)),
    (24, 7, "Z/2x(Z/3:Z/4)", direct(C(2), DIC3)),
    (24, 8, "(Z/6xZ/2):Z/2", perm(7, [[1, 2, 3, 4], [6, 7]], [[2, 4]], [[5, 6, 7]])),
    (24, 9, "Z/12xZ/2", direct(C(12), C(2))),
    (24, 10, "Z/3xD8", direct(C(3), D8)),
    (24, 11, "Z/3xQ8", direct(C(3), Q8)),
    (24, 12, "S4", S4),
    (24, 13, "Z/2xA4", direct(C(2), A4)),
    (24, 14, "Z/2xZ/2xS3", direct(C(2), C(2), S3)),
    (24, 15, "Z/6xZ/2xZ/2", direct(C(6), C(2), C(2))),
]


def order(x):
    e = identity(len(x))
    k, y = 1, x
    while y != e:
        y = compose(y, x)
        k += 1
    return k


def inverse(x):
    p = [0] * len(x)
    for i, v in enumerate(x):
        p[v] = i
    return tuple(p)


def min_gens(els):
    gens = []
    cur = {identity(len(els[0]))}
    for x in sorted(els, key=lambda e: (-order(e), e)):
        if x not in cur:
            gens.append(x)
            cur = set(closure(gens))
            if len(cur) == len(els):
                break
    return gens


def isomorphic(ea, eb):
    if len(ea) != len(eb):
        return False
    ga = min_gens(ea)
    seta = closure(ga)
    # express every element of A as a word (BFS tree) in ga
    words = {identity(len(ea[0])): []}
    frontier = [identity(len(ea[0]))]
    while frontier:
        nxt = []
        for a in frontier:
            for i, g in enumerate(ga):
                b = compose(a, g)
                if b not in words:
                    words[b] = words[a] + [i]
                    nxt.append(b)
        frontier = nxt
    cands = [[y for y in eb if order(y) == order(g)] for g in ga]
    for imgs in itertools.product(*cands):
        def ev(w):
            r = identity(len(eb[0]))
            for i in w:
                r = compose(r, imgs[i])
            return r
        phi = {a: ev(w) for a, w in words.items()}
        if len(set(phi.values())) != len(eb):
            continue
        if all(phi[compose(a, b)] == compose(phi[a], phi[b]) for a in seta for b in ga):
            return True
    return False


def cycle_string(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = p[j]
        out.append("(" + ",".join(str(k + 1) for k in c) + ")")
    return "".join(out) or "()"


def main(path):
    lines = ["# Permutation generators for all isomorphism classes of groups of order 2..24.",
             "# Format: order index degree ; gen1 ; gen2 ...   # display name",
             "# Indices follow the standard small-group numbering; the product xy applies y first, then x.",
             "# Generated by scripts/gen_catalog.py, which certifies orders and pairwise non-isomorphism."]
    by_order = {}
    for n, idx, name, (deg, gens) in GROUPS:
        els = closure(gens)
        assert len(els) == n, (n, idx, name, len(els))
        by_order.setdefault(n, []).append((idx, name, els))
        lines.append(f"{n} {idx} {deg} ; " + " ; ".join(cycle_string(g) for g in gens) + f"  # {name}")
    for n, want in CENSUS.items():
        got = by_order.get(n, [])
        assert len(got) == want, (n, len(got), want)
        for (i, ni, a), (j, nj, b) in itertools.combinations(got, 2):
            assert not isomorphic(a, b), (n, ni, nj)
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/catalog.txt")
