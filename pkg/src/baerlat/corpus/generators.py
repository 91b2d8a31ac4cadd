"""Named families of multiplicative lattices."""

from __future__ import annotations

import string
from dataclasses import dataclass
from math import gcd

from ..errors import NotDistributive, UnknownFixture
from ..lattice import FiniteLattice
from ..quantale import MultLattice, validate_quantale


def gen_meet_mult(L: FiniteLattice) -> MultLattice:
    """Use meet as the multiplication; requires a distributive lattice."""
    w = L.is_distributive()
    if w is not None:
        a, b, c = w
        raise NotDistributive(f"{a} ^ ({b} v {c}) != ({a} ^ {b}) v ({a} ^ {c})", w)
    return validate_quantale(L, [[L.meet(a, b) for b in L.elements] for a in L.elements])


def gen_chain(k: int) -> MultLattice:
    """The (k+1)-element chain 0 < ... < 1 with meet as product."""
    if k < 1:
        raise ValueError("chain length k must be >= 1")
    n = k + 1
    middle = ["m"] if k == 2 else [f"m{i}" for i in range(1, k)]
    names = ["0", *middle, "1"]
    return gen_meet_mult(FiniteLattice([[i <= j for j in range(n)] for i in range(n)], names))


def _subset_name(mask, k):
    if mask == 0:
        return "0"
    if mask == (1 << k) - 1:
        return "1"
    return "".join(string.ascii_lowercase[i] for i in range(k) if mask >> i & 1)


def gen_boolean(k: int) -> MultLattice:
    """Subsets of a k-set (element index = bitmask) with meet as product."""
    if not 1 <= k <= 26:
        raise ValueError("boolean rank k must be in 1..26")
    n = 1 << k
    names = [_subset_name(a, k) for a in range(n)]
    return gen_meet_mult(FiniteLattice([[a & b == a for b in range(n)] for a in range(n)], names))


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def gen_zn(n: int) -> MultLattice:
    """Ideal lattice of the integers mod n.

    Element i stands for the ideal generated by the i-th divisor d (ascending),
    so index 0 is the whole ring (top) and the last index is the zero ideal.
    (d) <= (e) iff e | d and (d)(e) = (gcd(de, n)).
    """
    if n < 2:
        raise ValueError("zn requires n >= 2")
    D = divisors(n)
    pos = {d: i for i, d in enumerate(D)}
    leq = [[d % e == 0 for e in D] for d in D]
    mul = [[pos[gcd(d * e, n)] for e in D] for d in D]
    return validate_quantale(FiniteLattice(leq, [f"({d})" for d in D]), mul)


def product(M1: MultLattice, M2: MultLattice) -> MultLattice:
    """Componentwise order and multiplication; pair (i, j) has index i*n2 + j."""
    n1, n2 = M1.n, M2.n
    pairs = [(i, j) for i in range(n1) for j in range(n2)]
    leq = [[M1.le(a, c) and M2.le(b, d) for (c, d) in pairs] for (a, b) in pairs]
    mul = [[M1.mul[a][c] * n2 + M2.mul[b][d] for (c, d) in pairs] for (a, b) in pairs]
    names = [f"({M1.label(a)},{M2.label(b)})" for (a, b) in pairs]
    return validate_quantale(FiniteLattice(leq, names), mul)


def _n4():
    # chain 0 < a < b < 1 with every product of a, b equal to a
    leq = [[i <= j for j in range(4)] for i in range(4)]
    mul = [[0, 0, 0, 0],
           [0, 1, 1, 1],
           [0, 1, 1, 2],
           [0, 1, 2, 3]]
    return validate_quantale(FiniteLattice(leq, ["0", "a", "b", "1"]), mul)


def one_element() -> MultLattice:
    return validate_quantale(FiniteLattice([[True]], ["0"]), [[0]])


FIXTURES = {
    "C1": one_element,
    "C2": lambda: gen_chain(1),
    "C3": lambda: gen_chain(2),
    "B2": lambda: gen_boolean(2),
    "N4": _n4,
    "Z30": lambda: gen_zn(30),
}


def fixture(name: str) -> MultLattice:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None


def diamond_m3() -> FiniteLattice:
    """The non-distributive diamond with three atoms a, b, c."""
    n = 5
    leq = [[i == j or i == 0 or j == 4 for j in range(n)] for i in range(n)]
    return FiniteLattice(leq, ["0", "a", "b", "c", "1"])


def is_squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


# specifiers

@dataclass(frozen=True)
class LatticeSpecifier:
    """How to obtain a lattice: ``chain``, ``boolean``, ``zn``, ``fixture``,
    ``file`` or ``product`` (of the two specifiers in ``parts``)."""
    kind: str
    param: object = None
    parts: tuple = ()

    def __post_init__(self):
        if self.kind in ("chain", "boolean") and not (isinstance(self.param, int) and self.param >= 1):
            raise ValueError(f"{self.kind} needs a positive integer parameter")
        if self.kind == "zn" and not (isinstance(self.param, int) and self.param >= 2):
            raise ValueError("zn needs n >= 2")
        if self.kind == "product" and len(self.parts) != 2:
            raise ValueError("product needs exactly two factors")
        if self.kind not in ("chain", "boolean", "zn", "fixture", "file", "product"):
            raise ValueError(f"unknown lattice kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "LatticeSpecifier":
        """``chain:K``, ``boolean:K``, ``zn:N``, ``fixture:NAME`` or a bare
        fixture name, ``file:PATH``, and ``A*B`` for products."""
        if "*" in text:
            left, right = text.split("*", 1)
            return cls("product", parts=(cls.parse(left), cls.parse(right)))
        kind, sep, arg = text.partition(":")
        if not sep:
            if text in FIXTURES:
                return cls("fixture", text)
            return cls("file", text)
        if kind in ("chain", "boolean", "zn"):
            try:
                return cls(kind, int(arg))
            except ValueError:
                raise ValueError(f"bad integer parameter in {text!r}") from None
        return cls(kind, arg)

    def build(self) -> MultLattice:
        if self.kind == "chain":
            return gen_chain(self.param)
        if self.kind == "boolean":
            return gen_boolean(self.param)
        if self.kind == "zn":
            return gen_zn(self.param)
        if self.kind == "fixture":
            return fixture(self.param)
        if self.kind == "product":
            return product(self.parts[0].build(), self.parts[1].build())
        from .mlat import read_mlat
        return read_mlat(self.param)

    def __str__(self):
        if self.kind == "product":
            return f"{self.parts[0]}*{self.parts[1]}"
        if self.kind == "file":
            return str(self.param)
        return f"{self.kind}:{self.param}"
