"""Finite bounded lattices given by an order relation.

Elements are the integers ``0 .. n-1``. Bottom and top are located from the
order, never assumed to sit at fixed indices. Meet and join tables are
computed once, at construction.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

from .errors import NoBounds, NotALattice, NotAPartialOrder


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class FiniteLattice:
    """An immutable finite lattice.

    ``leq[i][j]`` is True iff element ``i`` is below element ``j``.
    Construct through :func:`build_lattice` (or the class itself, which
    validates identically).
    """

    __slots__ = ("n", "leq", "names", "bottom", "top", "up", "down",
                 "_meet", "_join", "_covers")

    def __init__(self, leq: Sequence[Sequence], names: Sequence[str] | None = None):
        n = len(leq)
        if n == 0:
            raise NoBounds("the empty relation has no bottom or top")
        rel = tuple(tuple(bool(v) for v in row) for row in leq)
        if any(len(row) != n for row in rel):
            raise ValueError("leq must be a square n x n relation")
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != n:
                raise ValueError(f"expected {n} names, got {len(names)}")
            if len(set(names)) != n:
                raise ValueError("element names must be distinct")
        _check_partial_order(rel)

        full = (1 << n) - 1
        up = tuple(sum(1 << j for j in range(n) if rel[i][j]) for i in range(n))
        down = tuple(sum(1 << i for i in range(n) if rel[i][j]) for j in range(n))
        by_down = {m: j for j, m in enumerate(down)}
        by_up = {m: i for i, m in enumerate(up)}

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                lower = down[a] & down[b]
                # the glb is the common lower bound whose down-set is all of them
                g = by_down.get(lower)
                if g is None:
                    raise NotALattice(
                        f"elements {a} and {b} have no greatest lower bound "
                        f"(maximal common lower bounds: {_maximal(lower, rel)})",
                        (a, b))
                upper = up[a] & up[b]
                l = by_up.get(upper)
                if l is None:
                    raise NotALattice(
                        f"elements {a} and {b} have no least upper bound "
                        f"(minimal common upper bounds: {_minimal(upper, rel)})",
                        (a, b))
                meet[a][b] = meet[b][a] = g
                join[a][b] = join[b][a] = l

        bottoms = [i for i in range(n) if up[i] == full]
        tops = [i for i in range(n) if down[i] == full]
        if not bottoms or not tops:
            raise NoBounds("order has no bottom or no top element")

        self.n = n
        self.leq = rel
        self.names = names
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.up = up
        self.down = down
        self._meet = tuple(map(tuple, meet))
        self._join = tuple(map(tuple, join))
        self._covers = None

    # primitives

    @property
    def elements(self) -> range:
        return range(self.n)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self._meet[a][b]

    def join(self, a: int, b: int) -> int:
        return self._join[a][b]

    def meet_set(self, items: Iterable[int]) -> int:
        """Greatest lower bound of ``items``; the empty meet is top."""
        return reduce(lambda x, y: self._meet[x][y], items, self.top)

    def join_set(self, items: Iterable[int]) -> int:
        """Least upper bound of ``items``; the empty join is bottom."""
        return reduce(lambda x, y: self._join[x][y], items, self.bottom)

    def below(self, a: int) -> list[int]:
        return list(_bits(self.down[a]))

    def above(self, a: int) -> list[int]:
        return list(_bits(self.up[a]))

    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(lower, upper)``, sorted."""
        if self._covers is None:
            n, leq = self.n, self.leq
            edges = []
            for a in range(n):
                for b in range(n):
                    if a == b or not leq[a][b]:
                        continue
                    if not any(c != a and c != b and leq[a][c] and leq[c][b]
                               for c in range(n)):
                        edges.append((a, b))
            self._covers = edges
        return list(self._covers)

    def is_distributive(self):
        """Return None if distributive, else a witness triple ``(a, b, c)``
        with ``a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)``."""
        m, j = self._meet, self._join
        for a in range(self.n):
            for b in range(self.n):
                for c in range(b + 1, self.n):
                    if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                        return (a, b, c)
        return None

    def label(self, a: int) -> str:
        return self.names[a] if self.names is not None else str(a)

    def lookup(self, token: str) -> int:
        """Resolve an element by name, falling back to a decimal index."""
        if self.names is not None and token in self.names:
            return self.names.index(token)
        try:
            i = int(token)
        except ValueError:
            raise KeyError(f"no element named {token!r}") from None
        if not 0 <= i < self.n:
            raise KeyError(f"element index {i} out of range [0, {self.n})")
        return i

    # value semantics

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.leq == other.leq and self.names == other.names

    def __hash__(self):
        return hash((self.leq, self.names))

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, bottom={self.bottom}, top={self.top})"


def _maximal(mask, rel):
    els = list(_bits(mask))
    return [a for a in els if not any(b != a and rel[a][b] for b in els)]


def _minimal(mask, rel):
    els = list(_bits(mask))
    return [a for a in els if not any(b != a and rel[b][a] for b in els)]


def _check_partial_order(rel):
    n = len(rel)
    for i in range(n):
        if not rel[i][i]:
            raise NotAPartialOrder("reflexive", (i, i))
    for i in range(n):
        for j in range(i + 1, n):
            if rel[i][j] and rel[j][i]:
                raise NotAPartialOrder("antisymmetric", (i, j))
    for i in range(n):
        for j in range(n):
            if rel[i][j]:
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        raise NotAPartialOrder("transitive", (i, j, k))


def build_lattice(leq, names=None) -> FiniteLattice:
    """Validate ``leq`` as a bounded lattice order and precompute its tables.

    Raises NotAPartialOrder, NotALattice or NoBounds with a witness.
    """
    return FiniteLattice(leq, names)


def meet(L, a, b):
    return L.meet(a, b)


def join(L, a, b):
    return L.join(a, b)


def meet_set(L, items):
    return L.meet_set(items)


def join_set(L, items):
    return L.join_set(items)


def covers(L):
    return L.covers()
