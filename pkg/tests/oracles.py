"""Brute-force reference implementations.

Nothing here imports the package's algorithms: everything is recomputed
from the raw ``leq`` relation and ``mul`` table by scanning all elements,
pairs and triples.
"""

from itertools import permutations


def is_partial_order(leq):
    n = len(leq)
    rng = range(n)
    return (all(leq[i][i] for i in rng)
            and all(not (leq[i][j] and leq[j][i]) or i == j for i in rng for j in rng)
            and all(not (leq[i][j] and leq[j][k]) or leq[i][k]
                    for i in rng for j in rng for k in rng))


def lub(leq, items):
    """Least upper bound by scanning, or None."""
    n = len(leq)
    ub = [u for u in range(n) if all(leq[x][u] for x in items)]
    least = [u for u in ub if all(leq[u][v] for v in ub)]
    return least[0] if least else None


def glb(leq, items):
    n = len(leq)
    lb = [u for u in range(n) if all(leq[u][x] for x in items)]
    great = [u for u in lb if all(leq[v][u] for v in lb)]
    return great[0] if great else None


def is_lattice(leq):
    n = len(leq)
    if not n or not is_partial_order(leq):
        return False
    return all(lub(leq, (a, b)) is not None and glb(leq, (a, b)) is not None
               for a in range(n) for b in range(n))


def quantale_ok(leq, mul):
    """Every multiplicative-lattice axiom, checked on all triples."""
    n = len(leq)
    rng = range(n)
    top, bot = glb(leq, ()), lub(leq, ())
    if any(not 0 <= mul[a][b] < n for a in rng for b in rng):
        return False
    return (all(mul[a][top] == a == mul[top][a] for a in rng)
            and all(mul[a][bot] == bot for a in rng)
            and all(mul[a][b] == mul[b][a] for a in rng for b in rng)
            and all(mul[mul[a][b]][c] == mul[a][mul[b][c]]
                    for a in rng for b in rng for c in rng)
            and all(mul[a][lub(leq, (b, c))] == lub(leq, (mul[a][b], mul[a][c]))
                    for a in rng for b in rng for c in rng))


def annihilator(leq, mul, a):
    bot = lub(leq, ())
    return lub(leq, [x for x in range(len(leq)) if mul[x][a] == bot])


def is_baer(leq, mul, b):
    n = len(leq)
    for c in range(n):
        if leq[c][b]:
            cc = annihilator(leq, mul, annihilator(leq, mul, c))
            if not leq[cc][b]:
                return False
    return True


def radical(leq, mul, x):
    n = len(leq)
    hits = []
    for c in range(n):
        p = c
        for _ in range(n + 1):
            if leq[p][x]:
                hits.append(c)
                break
            p = mul[p][c]
    return lub(leq, hits)


def is_prime(leq, mul, p):
    n = len(leq)
    top = glb(leq, ())
    if p == top:
        return False
    return all(leq[a][p] or leq[b][p]
               for a in range(n) for b in range(n) if leq[mul[a][b]][p])


def canonical_form(leq, mul):
    """Isomorphism invariant over all n! relabellings (no bound fixing)."""
    n = len(leq)
    best = None
    for p in permutations(range(n)):
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v] = i
        key = (tuple(int(leq[inv[i]][inv[j]]) for i in range(n) for j in range(n)),
               tuple(p[mul[inv[i]][inv[j]]] for i in range(n) for j in range(n)))
        if best is None or key < best:
            best = key
    return best


def order_canonical_form(leq):
    n = len(leq)
    return min(tuple(int(leq[p[i]][p[j]]) for i in range(n) for j in range(n))
               for p in permutations(range(n)))
