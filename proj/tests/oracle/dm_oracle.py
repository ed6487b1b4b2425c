"""Independent brute-force reference used to freeze expected values in the C++ tests.

Sets are Python frozensets; nothing here shares code paths with the library.
"""
from itertools import combinations, product
import random


def subsets(n):
    elems = range(n)
    return [frozenset(c) for k in range(n + 1) for c in combinations(elems, k)]


def is_delta_matroid(fam):
    if not fam:
        return False
    for x in fam:
        for y in fam:
            for u in x ^ y:
                if not any((x ^ {u, v}) in fam for v in x ^ y):
                    return False
    return True


def all_delta_matroids(n):
    subs = subsets(n)
    out = []
    for bits in range(1, 1 << len(subs)):
        fam = frozenset(s for i, s in enumerate(subs) if bits >> i & 1)
        if is_delta_matroid(fam):
            out.append(fam)
    return out


def width(fam):
    sizes = [len(f) for f in fam]
    return max(sizes) - min(sizes)


def twist_poly(n, fam):
    coeffs = [0] * (n + 1)
    for a in subsets(n):
        coeffs[width({a ^ f for f in fam})] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def det_gf2(rows):
    rows = [r[:] for r in rows]
    m = len(rows)
    for c in range(m):
        piv = next((r for r in range(c, m) if rows[r][c]), None)
        if piv is None:
            return 0
        rows[c], rows[piv] = rows[piv], rows[c]
        for r in range(m):
            if r != c and rows[r][c]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[c])]
    return 1


def dm_of_matrix(c):
    n = len(c)
    fam = set()
    for a in subsets(n):
        idx = sorted(a)
        if det_gf2([[c[i][j] for j in idx] for i in idx]):
            fam.add(a)
    return frozenset(fam)


def faces(seq, a):
    """Boundary components of the one-vertex ribbon subgraph on chord set a.

    seq is a list of (chord, sign). Traces the boundary by walking half-edge
    sides directly: walk along the vertex boundary, and across each ribbon.
    """
    pos = [(c, s) for c, s in seq if c in a]
    if not pos:
        return 1
    m = len(pos)
    where = {}
    for i, (c, s) in enumerate(pos):
        where.setdefault(c, []).append(i)
    # corners: (i, side) side 0 = left end, 1 = right end of the i-th half-edge arc
    def vertex_next(i, side):
        return ((i + 1) % m, 0) if side == 1 else ((i - 1) % m, 1)

    def edge_next(i, side):
        c, _ = pos[i]
        p, q = where[c]
        j = q if i == p else p
        orient = pos[p][1] == pos[q][1]
        return (j, 1 - side) if orient else (j, side)

    seen = set()
    count = 0
    for start in [(i, s) for i in range(m) for s in (0, 1)]:
        if start in seen:
            continue
        count += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            nxt = vertex_next(*cur)
            seen.add(nxt)
            cur = edge_next(*nxt)
    return count


def interlace(seq, e):
    occ = {}
    for i, (c, s) in enumerate(seq):
        occ.setdefault(c, []).append(i)
    mat = [[0] * e for _ in range(e)]
    for u in range(e):
        p, q = occ[u]
        mat[u][u] = int(seq[p][1] != seq[q][1])
        for v in range(e):
            if v != u:
                inside = sum(p < x < q for x in occ[v])
                mat[u][v] = int(inside == 1)
    return mat


def pairings(points):
    if not points:
        yield []
        return
    a = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1:]
        for p in pairings(rest):
            yield [(a, points[i])] + p


def all_rotations(e):
    for pr in pairings(list(range(2 * e))):
        pr = sorted(pr)
        for signs in product([1, -1], repeat=e):
            seq = [None] * (2 * e)
            for c, (p, q) in enumerate(pr):
                seq[p] = (c, 1)
                seq[q] = (c, signs[c])
            yield seq


if __name__ == "__main__":
    for n in range(0, 5):
        dms = all_delta_matroids(n)
        normal = [d for d in dms if frozenset() in d]
        print(f"n={n} delta-matroids={len(dms)} normal={len(normal)}")
    bad = 0
    total = 0
    for e in range(1, 5):
        for seq in all_rotations(e):
            total += 1
            fam_t = frozenset(a for a in subsets(e) if faces(seq, a) == 1)
            fam_m = dm_of_matrix(interlace(seq, e))
            if fam_t != fam_m:
                bad += 1
    print("rotations", total, "mismatches", bad)
    for t in range(1, 7):
        seq = [(i % t, 1) for i in range(2 * t)]
        fam = frozenset(a for a in subsets(t) if faces(seq, a) == 1)
        print("B", t, twist_poly(t, fam))
    print("C4", twist_poly(4, dm_of_matrix([[0,1,0,1],[1,0,1,0],[0,1,0,1],[1,0,1,0]])))
    print("P3", twist_poly(3, dm_of_matrix([[0,1,1],[1,0,0],[1,0,0]])))
    print("K3+K1", twist_poly(4, dm_of_matrix([[0,1,1,0],[1,0,1,0],[1,1,0,0],[0,0,0,0]])))
    print("C5", twist_poly(5, dm_of_matrix([[int(abs(i-j) in (1,4)) for j in range(5)] for i in range(5)])))
    print("mixed4 faces full", faces([(0,-1),(1,-1),(2,1),(3,1),(1,1),(0,1),(2,1),(3,1)], frozenset(range(4))))
