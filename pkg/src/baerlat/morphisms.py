"""Maps between multiplicative lattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .baer import baer_elements
from .elements import annihilator_table
from .errors import PreconditionViolated
from .quantale import MultLattice, compact_elements


@dataclass(frozen=True)
class Homomorphism:
    source: MultLattice = field(repr=False)
    target: MultLattice = field(repr=False)
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.source.n or not all(
                0 <= v < self.target.n for v in self.table):
            raise ValueError("homomorphism table must send every source element into the target")

    def __call__(self, a):
        return self.table[a]


def _first_pair(n, pred):
    for a in range(n):
        for b in range(n):
            if not pred(a, b):
                return (a, b)
    return None


def order_witness(h: Homomorphism):
    S, T, f = h.source, h.target, h.table
    return _first_pair(S.n, lambda a, b: not S.le(a, b) or T.le(f[a], f[b]))


def join_witness(h: Homomorphism):
    S, T, f = h.source, h.target, h.table
    return _first_pair(S.n, lambda a, b: f[S.join(a, b)] == T.join(f[a], f[b]))


def meet_witness(h: Homomorphism):
    S, T, f = h.source, h.target, h.table
    return _first_pair(S.n, lambda a, b: f[S.meet(a, b)] == T.meet(f[a], f[b]))


def product_witness(h: Homomorphism):
    S, T, f = h.source, h.target, h.table
    return _first_pair(S.n, lambda a, b: f[S.mul[a][b]] == T.mul[f[a]][f[b]])


def is_homomorphism(h: Homomorphism) -> bool:
    """Preserves order, binary joins, binary meets and multiplication.

    Bounds are not required to be preserved; see :func:`preserves_bounds`.
    """
    return not (order_witness(h) or join_witness(h) or meet_witness(h)
                or product_witness(h))


def preserves_bounds(h: Homomorphism) -> bool:
    return (h.table[h.source.bottom] == h.target.bottom
            and h.table[h.source.top] == h.target.top)


def is_injective(h: Homomorphism) -> bool:
    return len(set(h.table)) == len(h.table)


def strong_witness(h: Homomorphism):
    """None if ``h`` is strong, else a short reason tuple."""
    if not is_homomorphism(h):
        return ("not-homomorphism",)
    if not is_injective(h):
        return ("not-injective",)
    CT = compact_elements(h.target)
    annS, annT = annihilator_table(h.source), annihilator_table(h.target)
    f = h.table
    for c in compact_elements(h.source):
        if f[c] not in CT:
            return ("compact", c)
        if f[annS[c]] != annT[f[c]]:
            return ("annihilator", c)
    return None


def is_strong(h: Homomorphism) -> bool:
    """Injective homomorphism sending compacts to compacts with φ(c⊥) = φ(c)⊥."""
    return strong_witness(h) is None


def contraction_check(h: Homomorphism):
    """Every source element with a Baer image must itself be Baer.

    Returns ``(True, None)`` or ``(False, element)``. Raises
    PreconditionViolated when ``h`` is not strong.
    """
    if not is_strong(h):
        raise PreconditionViolated(f"map is not a strong homomorphism: {strong_witness(h)}")
    BS, BT = baer_elements(h.source), baer_elements(h.target)
    for x in h.source.elements:
        if h.table[x] in BT and x not in BS:
            return False, x
    return True, None


def _linear_extension(M):
    return sorted(M.elements, key=lambda a: (bin(M.lattice.down[a]).count("1"), a))


def enumerate_homomorphisms(S: MultLattice, T: MultLattice,
                            injective: bool = False) -> Iterator[Homomorphism]:
    """All homomorphisms S -> T by backtracking over element images.

    Each partial assignment is pruned as soon as a join, meet, product or
    order relation among assigned elements is violated. Yields in the
    lexicographic order of the image tuple along a linear extension of S.
    """
    order = _linear_extension(S)
    img = [None] * S.n
    Sj, Sm, St, Sle = S.lattice._join, S.lattice._meet, S.mul, S.leq
    Tj, Tm, Tt, Tle = T.lattice._join, T.lattice._meet, T.mul, T.leq

    def consistent(a):
        fa = img[a]
        for b in order:
            fb = img[b]
            if fb is None:
                continue
            if Sle[a][b] and not Tle[fa][fb]:
                return False
            if Sle[b][a] and not Tle[fb][fa]:
                return False
            for s, t in ((Sj, Tj), (Sm, Tm), (St, Tt)):
                c = s[a][b]
                if img[c] is not None and img[c] != t[fa][fb]:
                    return False
        return True

    used = set()

    def backtrack(k):
        if k == len(order):
            yield Homomorphism(S, T, tuple(img))
            return
        a = order[k]
        for v in T.elements:
            if injective and v in used:
                continue
            img[a] = v
            if consistent(a):
                used.add(v)
                yield from backtrack(k + 1)
                used.discard(v)
            img[a] = None

    for h in backtrack(0):
        if is_homomorphism(h):
            yield h


def strong_homomorphisms(S: MultLattice, T: MultLattice) -> Iterator[Homomorphism]:
    return (h for h in enumerate_homomorphisms(S, T, injective=True) if is_strong(h))
