"""Exhaustive enumeration of small multiplicative lattices.

Lattices are produced from labelled posets on the ``n - 2`` middle
elements with a bottom and top adjoined, kept when they are lattices and
reduced to a canonical representative: the lexicographically least
flattened order matrix over all relabellings that keep bottom at index 0
and top at index n-1. Multiplications are then filled cell by cell with
pruning and checked against the axioms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

from ..errors import StructureError
from ..lattice import FiniteLattice
from ..quantale import MultLattice, is_reduced, validate_quantale

MAX_N = 6


@dataclass(frozen=True)
class EnumerationConfig:
    """What :func:`enumerate_structures` yields.

    Sizes run from ``min_n`` to ``max_n``. When ``min_n`` is None it defaults
    to 2, except that ``max_n == 1`` yields the one-element lattice: the
    degenerate lattice with 0 = 1 is only enumerated on request.
    """
    max_n: int
    dedup: bool = True
    require_reduced: bool = False
    min_n: int | None = None

    def __post_init__(self):
        if not 1 <= self.max_n <= MAX_N:
            raise ValueError(f"max_n must be in 1..{MAX_N}")
        if self.min_n is not None and not 1 <= self.min_n <= self.max_n:
            raise ValueError("min_n must be in 1..max_n")

    @property
    def sizes(self) -> range:
        lo = self.min_n if self.min_n is not None else min(2, self.max_n)
        return range(lo, self.max_n + 1)


def _flat(leq):
    return tuple(int(v) for row in leq for v in row)


def _relabel(leq, perm):
    """Order matrix after sending element i to perm[i]."""
    n = len(leq)
    out = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = leq[i][j]
    return out


def canonical_order(leq) -> tuple:
    """Canonical flattened order matrix of a bounded lattice order.

    Bottom is sent to 0, top to n-1, and the middle elements are permuted
    to minimise the flattened matrix lexicographically.
    """
    n = len(leq)
    if n == 1:
        return (1,)
    bottom = next(i for i in range(n) if all(leq[i]))
    top = next(j for j in range(n) if all(leq[i][j] for i in range(n)))
    middle = [i for i in range(n) if i not in (bottom, top)]
    best = None
    for targets in permutations(range(1, n - 1)):
        perm = [0] * n
        perm[bottom], perm[top] = 0, n - 1
        for i, t in zip(middle, targets):
            perm[i] = t
        f = _flat(_relabel(leq, perm))
        if best is None or f < best:
            best = f
    return best


def _posets(k):
    """Labelled partial orders on k elements as boolean matrices."""
    pairs = list(combinations(range(k), 2))
    for choice in product((0, 1, 2), repeat=len(pairs)):
        rel = [[i == j for j in range(k)] for i in range(k)]
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                rel[i][j] = True
            elif c == 2:
                rel[j][i] = True
        if all(rel[j][l] <= rel[i][l] for i in range(k) for j in range(k) if rel[i][j]
               for l in range(k)):
            yield rel


@lru_cache(maxsize=None)
def lattices_of_size(n: int) -> tuple:
    """Canonical lattices with n elements, as FiniteLattice objects, sorted by
    their canonical flattened order matrix."""
    if n < 1:
        return ()
    if n == 1:
        return (FiniteLattice([[True]]),)
    seen = set()
    k = n - 2
    for mid in _posets(k):
        leq = [[False] * n for _ in range(n)]
        for i in range(n):
            leq[0][i] = True
            leq[i][n - 1] = True
            leq[i][i] = True
        for i in range(k):
            for j in range(k):
                leq[i + 1][j + 1] = mid[i][j]
        try:
            FiniteLattice(leq)
        except StructureError:
            continue
        seen.add(canonical_order(leq))
    out = []
    for f in sorted(seen):
        out.append(FiniteLattice([[bool(f[i * n + j]) for j in range(n)] for i in range(n)]))
    return tuple(out)


def automorphisms(L: FiniteLattice) -> list[tuple]:
    """Order automorphisms of L as permutation tuples (identity first)."""
    n = L.n
    return [p for p in permutations(range(n))
            if all(L.leq[i][j] == L.leq[p[i]][p[j]] for i in range(n) for j in range(n))]


def _permuted_table(mul, perm):
    n = len(mul)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = perm[mul[i][j]]
    return out


def multiplications(L: FiniteLattice) -> Iterator[tuple]:
    """Every valid multiplication table on L, in lexicographic order of the
    free cells.

    Rows of bottom and top are forced by absorption and identity. Each free
    cell (x, y), x <= y, takes values below x ∧ y; partial tables are pruned
    by monotonicity and join-distributivity over known cells, and complete
    tables are checked with :func:`validate_quantale`.
    """
    n, bot, top = L.n, L.bottom, L.top
    leq, j = L.leq, L._join
    t = [[None] * n for _ in range(n)]
    for x in range(n):
        t[x][bot] = t[bot][x] = bot
        t[x][top] = t[top][x] = x
    cells = [(x, y) for x in range(n) for y in range(x, n) if t[x][y] is None]
    choices = {c: [v for v in range(n) if leq[v][L.meet(*c)]] for c in cells}

    def ok(x, y):
        # every law that mentions cell (x, y) with all its cells known
        for a, b in ((x, y), (y, x)):
            ta = t[a]
            for c in range(n):
                # a(b v c) = ab v ac
                abc = ta[j[b][c]]
                ac = ta[c]
                if abc is not None and ac is not None and abc != j[ta[b]][ac]:
                    return False
                # a(c v d) = ac v ad where b = c v d
            for c in range(n):
                for d in range(c + 1, n):
                    if j[c][d] == b:
                        ac, ad = ta[c], ta[d]
                        if ac is not None and ad is not None and ta[b] != j[ac][ad]:
                            return False
        return True

    def backtrack(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        x, y = cells[k]
        for v in choices[(x, y)]:
            t[x][y] = t[y][x] = v
            if ok(x, y):
                yield from backtrack(k + 1)
        t[x][y] = t[y][x] = None

    for table in backtrack(0):
        try:
            validate_quantale(L, table)
        except StructureError:
            continue
        yield table


def canonical_structure(M: MultLattice) -> tuple:
    """Isomorphism invariant of a (lattice, multiplication) pair: the least
    (order, table) over all relabellings fixing bottom at 0 and top at n-1."""
    n = M.n
    if n == 1:
        return ((1,), (0,))
    middle = [i for i in range(n) if i not in (M.bottom, M.top)]
    best = None
    for targets in permutations(range(1, n - 1)):
        perm = [0] * n
        perm[M.bottom], perm[M.top] = 0, n - 1
        for i, tgt in zip(middle, targets):
            perm[i] = tgt
        key = (_flat(_relabel(M.leq, perm)),
               tuple(v for row in _permuted_table(M.mul, perm) for v in row))
        if best is None or key < best:
            best = key
    return best


def _structures_on(L: FiniteLattice, dedup: bool):
    if not dedup:
        for table in multiplications(L):
            yield validate_quantale(L, table)
        return
    autos = automorphisms(L)[1:]
    for table in multiplications(L):
        # keep the lexicographically least table of each automorphism orbit
        flat = tuple(v for row in table for v in row)
        if any(tuple(v for row in _permuted_table(table, p) for v in row) < flat for p in autos):
            continue
        yield validate_quantale(L, table)


def _relabellings(L: FiniteLattice):
    seen = set()
    for perm in permutations(range(L.n)):
        leq = _relabel(L.leq, perm)
        key = _flat(leq)
        if key not in seen:
            seen.add(key)
            yield perm, FiniteLattice(leq)


def enumerate_structures(config: EnumerationConfig) -> Iterator[MultLattice]:
    """Yield small multiplicative lattices in a fixed, reproducible order.

    With ``dedup`` one structure per isomorphism class; without it every
    labelling of every lattice with every table.
    """
    for n in config.sizes:
        for L in lattices_of_size(n):
            if config.dedup:
                stream = _structures_on(L, True)
            else:
                stream = (validate_quantale(L2, _permuted_table(M.mul, perm))
                          for M in _structures_on(L, False)
                          for perm, L2 in _relabellings(L))
            for M in stream:
                if config.require_reduced and not is_reduced(M):
                    continue
                yield M
