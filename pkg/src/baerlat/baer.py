"""Baer elements, Baer closure, the d-closure and the frame of Baer elements.

An element ``b`` is Baer when every compact ``c <= b`` has ``c⊥⊥ <= b``.
The Baer closure ``cz(a)`` is the meet of the Baer elements above ``a``.
All functions assume a reduced input; they still compute on non-reduced
ones but nothing is promised there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .elements import annihilator_table
from .errors import FrameLawViolation, StructureError
from .lattice import FiniteLattice
from .quantale import MultLattice, compact_elements, validate_quantale


# predicates

def is_baer(M: MultLattice, b: int) -> bool:
    ann, le = annihilator_table(M), M.leq
    return all(le[ann[ann[c]]][b] for c in compact_elements(M) if le[c][b])


def is_baer_char2(M: MultLattice, b: int) -> bool:
    """Compacts with equal annihilators: u⊥ = v⊥ and u <= b force v <= b."""
    ann, le = annihilator_table(M), M.leq
    C = compact_elements(M)
    return all(le[v][b] for u in C if le[u][b] for v in C if ann[u] == ann[v])


def is_baer_char3(M: MultLattice, b: int) -> bool:
    """Compacts with u⊥ <= v⊥ and u <= b force v <= b."""
    ann, le = annihilator_table(M), M.leq
    C = compact_elements(M)
    return all(le[v][b] for u in C if le[u][b] for v in C if le[ann[u]][ann[v]])


def is_baer_char4(M: MultLattice, b: int) -> bool:
    """b equals the join of c⊥⊥ over compacts c <= b."""
    ann, le = annihilator_table(M), M.leq
    return b == M.join_set(ann[ann[c]] for c in compact_elements(M) if le[c][b])


def baer_elements(M: MultLattice) -> frozenset:
    return M.memo("baer", lambda: frozenset(b for b in M.elements if is_baer(M, b)))


def is_B_multiplicative(M: MultLattice) -> bool:
    """(c⊥⊥)² = c⊥⊥ for every compact c."""
    ann, t = annihilator_table(M), M.mul
    return all(t[ann[ann[c]]][ann[ann[c]]] == ann[ann[c]] for c in compact_elements(M))


def baer_product_closed(M: MultLattice):
    """None if the Baer elements are closed under products, else a witness pair."""
    B = sorted(baer_elements(M))
    S = baer_elements(M)
    for a in B:
        for b in B:
            if M.mul[a][b] not in S:
                return (a, b)
    return None


def baer_join_closed(M: MultLattice):
    B = sorted(baer_elements(M))
    S = baer_elements(M)
    for i, a in enumerate(B):
        for b in B[i + 1:]:
            if M.join(a, b) not in S:
                return (a, b)
    return None


# closure maps

@dataclass(frozen=True)
class ClosureMap:
    """A self-map of a multiplicative lattice, given as a table.

    Nothing is enforced at construction; the ``is_*`` methods report which
    closure laws hold (``kind='user'`` maps may be arbitrary).
    """
    host: MultLattice = field(repr=False)
    table: tuple
    kind: str = "user"

    def __call__(self, a: int) -> int:
        return self.table[a]

    def image(self) -> frozenset:
        return frozenset(self.table)

    def fixed_points(self) -> frozenset:
        return frozenset(a for a, v in enumerate(self.table) if v == a)

    def inflationary_witness(self):
        le = self.host.leq
        return next(((a,) for a, v in enumerate(self.table) if not le[a][v]), None)

    def idempotent_witness(self):
        t = self.table
        return next(((a,) for a in range(len(t)) if t[t[a]] != t[a]), None)

    def monotone_witness(self):
        le, t = self.host.leq, self.table
        for a in range(len(t)):
            for b in range(len(t)):
                if le[a][b] and not le[t[a]][t[b]]:
                    return (a, b)
        return None

    def is_inflationary(self):
        return self.inflationary_witness() is None

    def is_idempotent(self):
        return self.idempotent_witness() is None

    def is_monotone(self):
        return self.monotone_witness() is None

    def is_closure_operator(self):
        return self.is_inflationary() and self.is_idempotent() and self.is_monotone()


def closure_map(M: MultLattice, table: Sequence[int], kind: str = "user") -> ClosureMap:
    table = tuple(int(v) for v in table)
    if len(table) != M.n or not all(0 <= v < M.n for v in table):
        raise ValueError("closure table must map every element to an element")
    return ClosureMap(M, table, kind)


def baer_closure(M: MultLattice) -> ClosureMap:
    """cz(a): the meet of all Baer elements above a."""
    def compute():
        B, le = baer_elements(M), M.leq
        return ClosureMap(M, tuple(M.meet_set(x for x in B if le[a][x]) for a in M.elements),
                          "baer_closure")
    return M.memo("cz", compute)


def d_closure(M: MultLattice) -> ClosureMap:
    """d(x): the join of c⊥⊥ over compacts c <= x."""
    def compute():
        ann, le = annihilator_table(M), M.leq
        C = compact_elements(M)
        return ClosureMap(M, tuple(M.join_set(ann[ann[c]] for c in C if le[c][x])
                                   for x in M.elements), "d_closure")
    return M.memo("d", compute)


# nuclei

@dataclass(frozen=True)
class NucleusReport:
    """Which nucleus variants a self-map is; ``witnesses`` holds, for every
    False flag, the element tuple that breaks it."""
    is_nucleus: bool
    is_multiplicative_nucleus: bool
    is_quantic_nucleus: bool
    is_localic: bool
    witnesses: dict = field(default_factory=dict)


def classify_nucleus(M: MultLattice, phi: ClosureMap) -> NucleusReport:
    t, f, m, n = M.mul, phi.table, M.lattice._meet, M.n
    base = phi.inflationary_witness() or phi.idempotent_witness()

    def first(pred):
        for a in range(n):
            for b in range(n):
                if not pred(a, b):
                    return (a, b)
        return None

    meet_w = first(lambda a, b: f[m[a][b]] == m[f[a]][f[b]])
    # multiplicative nucleus: phi(a) = 1 iff a = 1, and phi(ab) = phi(a ^ b) = phi(a) ^ phi(b)
    top_w = next(((a,) for a in range(n) if (f[a] == M.top) != (a == M.top)), None)
    mult_w = top_w or first(lambda a, b: f[t[a][b]] == f[m[a][b]] == m[f[a]][f[b]])
    quantic_w = first(lambda a, b: f[t[a][b]] == t[f[a]][f[b]])
    # localic: quantic, and the induced product on the image is the meet
    image = sorted(set(f))
    localic_w = next(((a, b) for a in image for b in image if f[t[a][b]] != m[a][b]), None)

    w = {}
    flags = {}
    for name, extra in (("nucleus", meet_w), ("multiplicative", meet_w or mult_w),
                        ("quantic", quantic_w), ("localic", quantic_w or localic_w)):
        bad = base or extra
        flags[name] = bad is None
        if bad is not None:
            w[name] = bad
    return NucleusReport(flags["nucleus"], flags["multiplicative"], flags["quantic"],
                         flags["localic"], w)


def quantic_identities_check(M: MultLattice) -> bool:
    """cz(ab) = cz(a cz(b)) = cz(cz(a) b) = cz(cz(a) cz(b)) for all pairs."""
    return quantic_identities_witness(M) is None


def quantic_identities_witness(M: MultLattice):
    cz, t, n = baer_closure(M).table, M.mul, M.n
    for a in range(n):
        for b in range(n):
            v = cz[t[a][b]]
            if not v == cz[t[a][cz[b]]] == cz[t[cz[a]][b]] == cz[t[cz[a]][cz[b]]]:
                return (a, b)
    return None


# the frame of Baer elements

@dataclass(frozen=True)
class BaerFrame:
    """Baer elements with host meet, ``join'`` = cz∘join and ``a ⊙ b`` = cz(ab).

    ``carrier`` lists host indices in increasing order; ``frame`` is the same
    structure re-indexed 0..k-1 as a standalone MultLattice (position i of the
    carrier becomes element i).
    """
    host: MultLattice = field(repr=False)
    carrier: tuple
    frame: MultLattice = field(repr=False)

    def meet(self, a, b):
        return self.host.meet(a, b)

    def join(self, a, b):
        return baer_closure(self.host)(self.host.join(a, b))

    def join_set(self, items):
        return baer_closure(self.host)(self.host.join_set(items))

    def odot(self, a, b):
        return baer_closure(self.host)(self.host.mul[a][b])

    def index(self, a):
        return self.carrier.index(a)


def frame_violation(M: MultLattice, subsets=None):
    """Check the frame theorems on the Baer elements of ``M``.

    Returns None or ``(law, witness)``. ``subsets`` is an iterable of tuples
    of Baer elements used for the arbitrary-join distributive law; binary
    joins are always checked exhaustively.
    """
    cz = baer_closure(M).table
    B = sorted(baer_elements(M))
    S = set(B)
    m, j, t, le = M.lattice._meet, M.lattice._join, M.mul, M.leq
    if M.bottom not in S or M.top not in S:
        return ("bounds", (M.bottom, M.top))
    for a in B:
        for b in B:
            if m[a][b] not in S:
                return ("meet-closed", (a, b))
            jb = cz[j[a][b]]
            if not (le[a][jb] and le[b][jb]):
                return ("join-upper-bound", (a, b))
            if cz[t[a][b]] != m[a][b]:
                return ("odot=meet", (a, b))
            for c in B:
                if le[a][c] and le[b][c] and not le[jb][c]:
                    return ("join-least", (a, b, c))
                if m[a][cz[j[b][c]]] != cz[j[m[a][b]][m[a][c]]]:
                    return ("distributive", (a, b, c))
    for s in subsets or ():
        js = cz[M.join_set(s)]
        for x in B:
            if m[x][js] != cz[M.join_set(m[x][y] for y in s)]:
                return ("distributive-arbitrary", (x,) + tuple(s))
    # cz: L -> B(L) preserves order, binary joins (into join'), meets, products (into odot)
    n = M.n
    for a in range(n):
        for b in range(n):
            if le[a][b] and not le[cz[a]][cz[b]]:
                return ("cz-order", (a, b))
            if cz[j[a][b]] != cz[j[cz[a]][cz[b]]]:
                return ("cz-join", (a, b))
            if cz[m[a][b]] != m[cz[a]][cz[b]]:
                return ("cz-meet", (a, b))
            if cz[t[a][b]] != cz[t[cz[a]][cz[b]]]:
                return ("cz-product", (a, b))
    return None


def baer_frame(M: MultLattice) -> BaerFrame:
    """Materialise the frame of Baer elements.

    Raises FrameLawViolation when one of the frame laws fails (input outside
    the standing assumptions).
    """
    bad = frame_violation(M)
    if bad is not None:
        raise FrameLawViolation(f"Baer frame law {bad[0]!r} fails", bad[1])
    cz = baer_closure(M).table
    carrier = tuple(sorted(baer_elements(M)))
    pos = {a: i for i, a in enumerate(carrier)}
    leq = [[M.le(a, b) for b in carrier] for a in carrier]
    names = [M.label(a) for a in carrier] if M.names is not None else [str(a) for a in carrier]
    try:
        L = FiniteLattice(leq, names)
        frame = validate_quantale(L, [[pos[cz[M.mul[a][b]]] for b in carrier] for a in carrier])
    except StructureError as e:
        raise FrameLawViolation(f"Baer elements do not form a multiplicative lattice: {e}",
                                e.witness and tuple(carrier[i] for i in e.witness)) from e
    return BaerFrame(M, carrier, frame)
