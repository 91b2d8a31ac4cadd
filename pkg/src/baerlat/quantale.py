"""Multiplicative lattices (commutative unital quantales) on finite lattices."""

from __future__ import annotations

from typing import Sequence

from .errors import (BottomNotAbsorbing, IdentityFails, NotAssociative,
                     NotCommutative, NotJoinDistributive, StructureError)
from .lattice import FiniteLattice


class MultLattice:
    """A finite lattice together with a validated multiplication table.

    ``mul[a][b]`` is the product of ``a`` and ``b``. Lattice primitives are
    forwarded to :attr:`lattice`. Derived tables (annihilators, Baer set,
    closures, ...) are memoised in ``_memo`` by the functions that compute
    them; the structure itself never changes after validation.
    """

    __slots__ = ("lattice", "mul", "_memo")

    def __init__(self, lattice: FiniteLattice, mul: Sequence[Sequence[int]]):
        self.lattice = lattice
        self.mul = tuple(tuple(int(v) for v in row) for row in mul)
        self._memo = {}

    # forwarded lattice surface
    n = property(lambda self: self.lattice.n)
    leq = property(lambda self: self.lattice.leq)
    names = property(lambda self: self.lattice.names)
    bottom = property(lambda self: self.lattice.bottom)
    top = property(lambda self: self.lattice.top)
    elements = property(lambda self: self.lattice.elements)

    def le(self, a, b):
        return self.lattice.leq[a][b]

    def meet(self, a, b):
        return self.lattice._meet[a][b]

    def join(self, a, b):
        return self.lattice._join[a][b]

    def meet_set(self, items):
        return self.lattice.meet_set(items)

    def join_set(self, items):
        return self.lattice.join_set(items)

    def times(self, a, b):
        return self.mul[a][b]

    def label(self, a):
        return self.lattice.label(a)

    def lookup(self, token):
        return self.lattice.lookup(token)

    def memo(self, key, compute):
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = compute()
            return value

    def __eq__(self, other):
        if not isinstance(other, MultLattice):
            return NotImplemented
        return self.lattice == other.lattice and self.mul == other.mul

    def __hash__(self):
        return hash((self.lattice, self.mul))

    def __repr__(self):
        return f"MultLattice(n={self.n})"


def validate_quantale(L: FiniteLattice, mul) -> MultLattice:
    """Check the multiplicative-lattice axioms on ``mul`` and wrap it.

    Identity and absorption are checked before the algebraic laws so the
    reported witness points at the most basic failure. Raises one of
    IdentityFails, BottomNotAbsorbing, NotCommutative, NotAssociative,
    NotJoinDistributive.
    """
    n = L.n
    if len(mul) != n or any(len(row) != n for row in mul):
        raise StructureError(f"multiplication table must be {n} x {n}")
    for i, row in enumerate(mul):
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise StructureError(f"table entry ({i}, {j}) = {v!r} is not an element", (i, j))
    t, one, zero = mul, L.top, L.bottom
    j = L._join

    for x in range(n):
        if t[x][one] != x or t[one][x] != x:
            raise IdentityFails(f"top is not an identity: 1*{x} != {x}", (x,))
    for x in range(n):
        if t[x][zero] != zero:
            raise BottomNotAbsorbing(f"{x}*0 != 0", (x,))
    for x in range(n):
        for y in range(x + 1, n):
            if t[x][y] != t[y][x]:
                raise NotCommutative(f"{x}*{y} != {y}*{x}", (x, y))
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                if t[xy][z] != t[x][t[y][z]]:
                    raise NotAssociative(f"({x}*{y})*{z} != {x}*({y}*{z})", (x, y, z))
    for x in range(n):
        tx = t[x]
        for y in range(n):
            for z in range(y + 1, n):
                if tx[j[y][z]] != j[tx[y]][tx[z]]:
                    raise NotJoinDistributive(
                        f"{x}*({y} v {z}) != ({x}*{y}) v ({x}*{z})", (x, y, z))
    M = MultLattice(L, mul)
    w = bip_sweep(M)
    if w is not None:  # pragma: no cover - implied by the axioms above
        raise AssertionError(f"multiplication law violated after validation: {w}")
    return M


def bip_sweep(M: MultLattice):
    """Elementary multiplication laws; returns None or ``(law, witness)``.

    Laws: xy <= x, xy <= x ∧ y, x·0 = 0, monotone in each argument.
    """
    n, t, le = M.n, M.mul, M.leq
    for x in range(n):
        for y in range(n):
            if not le[t[x][y]][x]:
                return ("xy<=x", (x, y))
            if not le[t[x][y]][M.meet(x, y)]:
                return ("xy<=x^y", (x, y))
        if t[x][M.bottom] != M.bottom:
            return ("x0=0", (x,))
    for x in range(n):
        for y in range(n):
            if le[x][y]:
                for z in range(n):
                    if not le[t[x][z]][t[y][z]]:
                        return ("monotone", (x, y, z))
    return None


def power(M: MultLattice, x: int, k: int) -> int:
    if k < 1:
        raise ValueError("exponent must be >= 1")
    r = x
    for _ in range(k - 1):
        r = M.mul[r][x]
    return r


def powers(M: MultLattice, x: int) -> tuple:
    """``(x, x^2, ..., x^n)``; the chain has stabilised by exponent n."""
    def compute():
        out, r = [], x
        for _ in range(M.n):
            out.append(r)
            r = M.mul[r][x]
        return tuple(out)
    return M.memo(("powers", x), compute)


def nilpotents(M: MultLattice) -> list[int]:
    return [x for x in M.elements if M.bottom in powers(M, x)]


def is_reduced(M: MultLattice) -> bool:
    """True iff bottom is the only nilpotent element."""
    return M.memo("reduced", lambda: nilpotents(M) == [M.bottom])


def compact_elements(M: MultLattice) -> frozenset:
    """Every element of a finite lattice is compact."""
    return frozenset(M.elements)
