"""Brute-force reference implementations, deliberately independent of the package.

Quivers here are plain lists of lists; arrows are tracked as explicit counts.
"""

import itertools
from collections import Counter


def arrows_of(b):
    n = len(b)
    return Counter({(i, j): b[i][j] for i in range(n) for j in range(n) if b[i][j] > 0})


def matrix_of(arrows, n):
    b = [[0] * n for _ in range(n)]
    for (i, j), m in arrows.items():
        b[i][j] += m
        b[j][i] -= m
    return b


def mutate_arrows(b, k):
    """Compose paths through k, cancel 2-cycles, reverse arrows at k."""
    n = len(b)
    arr = arrows_of(b)
    new = Counter(arr)
    for (i, kk), a in arr.items():
        if kk != k:
            continue
        for (kk2, j), c in arr.items():
            if kk2 == k and j != i:
                new[(i, j)] += a * c
    for i, j in itertools.combinations(range(n), 2):
        c = min(new[(i, j)], new[(j, i)])
        new[(i, j)] -= c
        new[(j, i)] -= c
    out = Counter()
    for (i, j), m in new.items():
        if m <= 0:
            continue
        if i == k or j == k:
            out[(j, i)] += m
        else:
            out[(i, j)] += m
    return matrix_of(out, n)


def brute_canonical(b):
    n = len(b)
    return min(
        tuple(tuple(b[p[i]][p[j]] for j in range(n)) for i in range(n))
        for p in itertools.permutations(range(n))
    )


def has_cycle(b):
    n = len(b)
    colour = [0] * n

    def visit(i):
        colour[i] = 1
        for j in range(n):
            if b[i][j] > 0:
                if colour[j] == 1 or (colour[j] == 0 and visit(j)):
                    return True
        colour[i] = 2
        return False

    return any(colour[i] == 0 and visit(i) for i in range(n))


def dfs_class(b, max_forms=10_000):
    """Depth-first mutation class up to isomorphism; None if it exceeds max_forms."""
    seen = set()
    stack = [brute_canonical(b)]
    while stack:
        form = stack.pop()
        if form in seen:
            continue
        seen.add(form)
        if len(seen) > max_forms:
            return None
        for k in range(len(b)):
            stack.append(brute_canonical(mutate_arrows([list(r) for r in form], k)))
    return seen


def bounded_acyclic_search(b, depth=12, entry_cap=10**6):
    """True iff some mutation word of length <= depth reaches an acyclic quiver
    without any entry exceeding entry_cap on the way."""
    frontier = {brute_canonical(b)}
    seen = set(frontier)
    for _ in range(depth + 1):
        if any(not has_cycle(f) for f in frontier):
            return True
        nxt = set()
        for f in frontier:
            for k in range(len(f)):
                m = mutate_arrows([list(r) for r in f], k)
                if max(abs(v) for r in m for v in r) > entry_cap:
                    continue
                c = brute_canonical(m)
                if c not in seen:
                    seen.add(c)
                    nxt.add(c)
        frontier = nxt
    return False
