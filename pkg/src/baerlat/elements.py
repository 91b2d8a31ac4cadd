"""Element-level constructions on a multiplicative lattice.

Residuals, annihilators, the algebra of annihilators, radicals, prime /
maximal / semiprime / meet-irreducible elements, the Jacobson radical and
z-elements. Each predicate is evaluated from its definition by exhaustive
quantification; implications between them are left to the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBoolean, RadicalMismatch
from .quantale import MultLattice, compact_elements, powers


def residual(M: MultLattice, a: int, b: int) -> int:
    """(a : b), the join of every x with x·b <= a."""
    le, t = M.leq, M.mul
    return M.join_set(x for x in M.elements if le[t[x][b]][a])


def annihilator_table(M: MultLattice) -> tuple:
    def compute():
        z, t = M.bottom, M.mul
        return tuple(M.join_set(x for x in M.elements if t[x][a] == z)
                     for a in M.elements)
    return M.memo("ann", compute)


def annihilator(M: MultLattice, a: int) -> int:
    return annihilator_table(M)[a]


def double_annihilator(M: MultLattice, a: int) -> int:
    ann = annihilator_table(M)
    return ann[ann[a]]


@dataclass(frozen=True)
class AnnihilatorAlgebra:
    """The annihilator elements with inherited order.

    Meet is the host meet, join is ``(a⊥ ∧ b⊥)⊥`` and the complement of
    ``a`` is ``a⊥``.
    """
    host: MultLattice
    carrier: frozenset

    def meet(self, a, b):
        return self.host.meet(a, b)

    def join(self, a, b):
        ann = annihilator_table(self.host)
        return ann[self.host.meet(ann[a], ann[b])]

    def complement(self, a):
        return annihilator(self.host, a)


def boolean_violation(A: AnnihilatorAlgebra):
    """Return None if ``A`` is a Boolean algebra, else ``(law, witness)``."""
    M, C = A.host, sorted(A.carrier)
    le = M.leq
    zero, one = M.bottom, M.top
    if zero not in A.carrier or one not in A.carrier:
        return ("bounds", (zero, one))
    for a in C:
        if A.complement(a) not in A.carrier:
            return ("closed-complement", (a,))
        if A.meet(a, A.complement(a)) != zero:
            return ("a^a'=0", (a,))
        if A.join(a, A.complement(a)) != one:
            return ("ava'=1", (a,))
        for b in C:
            ab, avb = A.meet(a, b), A.join(a, b)
            if ab not in A.carrier or avb not in A.carrier:
                return ("closed", (a, b))
            if not (le[a][avb] and le[b][avb]):
                return ("join-upper-bound", (a, b))
            for c in C:
                if le[a][c] and le[b][c] and not le[avb][c]:
                    return ("join-least", (a, b, c))
                if A.meet(a, A.join(b, c)) != A.join(ab, A.meet(a, c)):
                    return ("distributive", (a, b, c))
            if A.complement(ab) != A.join(A.complement(a), A.complement(b)):
                return ("de-morgan", (a, b))
    return None


def annihilator_algebra(M: MultLattice) -> AnnihilatorAlgebra:
    """Build the algebra of annihilators and verify it is Boolean.

    Raises NotBoolean with a witness when the verification fails, which only
    happens on inputs outside the standing assumptions (non-reduced).
    """
    ann = annihilator_table(M)
    A = AnnihilatorAlgebra(M, frozenset(ann))
    bad = boolean_violation(A)
    if bad is not None:
        raise NotBoolean(f"annihilator algebra law {bad[0]!r} fails", bad[1])
    return A


# radicals and primes

def radical(M: MultLattice, x: int) -> int:
    """Join of the compact y having some power y^k <= x (k <= n)."""
    le = M.leq
    return M.join_set(y for y in compact_elements(M)
                      if any(le[p][x] for p in powers(M, y)))


def is_prime(M: MultLattice, p: int) -> bool:
    if p == M.top:
        return False
    le, t, n = M.leq, M.mul, M.n
    for x in range(n):
        if le[x][p]:
            continue
        for y in range(n):
            if le[t[x][y]][p] and not le[y][p]:
                return False
    return True


def primes(M: MultLattice) -> frozenset:
    return M.memo("primes", lambda: frozenset(p for p in M.elements if is_prime(M, p)))


def minimal_primes(M: MultLattice) -> frozenset:
    P = primes(M)
    return frozenset(p for p in P if not any(q != p and M.le(q, p) for q in P))


def minimal_primes_above(M: MultLattice, x: int) -> frozenset:
    """Primes p >= x that are minimal among the primes above x."""
    above = [p for p in primes(M) if M.le(x, p)]
    return frozenset(p for p in above if not any(q != p and M.le(q, p) for q in above))


def radical_via_primes(M: MultLattice, x: int) -> int:
    return M.meet_set(p for p in primes(M) if M.le(x, p))


def radical_via_minimal_primes(M: MultLattice, x: int) -> int:
    return M.meet_set(minimal_primes_above(M, x))


def checked_radical(M: MultLattice, x: int) -> int:
    """Radical of ``x`` computed three ways; raises RadicalMismatch on disagreement."""
    r = radical(M, x)
    rp = radical_via_primes(M, x)
    rm = radical_via_minimal_primes(M, x)
    if not r == rp == rm:
        raise RadicalMismatch(
            f"radical of {x}: powers give {r}, primes {rp}, minimal primes {rm}",
            (x, r, rp, rm))
    return r


def is_semiprime(M: MultLattice, q: int) -> bool:
    le, t = M.leq, M.mul
    return all(le[x][q] for x in M.elements if le[t[x][x]][q])


def is_meet_irreducible(M: MultLattice, s: int) -> bool:
    le, m, n = M.leq, M.lattice._meet, M.n
    for x in range(n):
        if le[x][s]:
            continue
        for y in range(n):
            if not le[y][s] and le[m[x][y]][s]:
                return False
    return True


def maximal_elements(M: MultLattice) -> frozenset:
    """Proper elements maximal among proper elements."""
    def compute():
        top, le = M.top, M.leq
        proper = [x for x in M.elements if x != top]
        return frozenset(m for m in proper
                         if not any(x != m and le[m][x] for x in proper))
    return M.memo("maximal", compute)


def is_zero_divisor(M: MultLattice, x: int) -> bool:
    return any(y != M.bottom and M.mul[x][y] == M.bottom for y in M.elements)


def zero_divisors(M: MultLattice) -> frozenset:
    return frozenset(x for x in M.elements if is_zero_divisor(M, x))


def is_domain(M: MultLattice) -> bool:
    """No non-zero zero divisor."""
    return all(x == M.bottom for x in zero_divisors(M))


def jacobson_radical(M: MultLattice) -> int:
    return M.meet_set(maximal_elements(M))


def is_semisimple(M: MultLattice) -> bool:
    return jacobson_radical(M) == M.bottom


# z-elements

def maximal_set_above(M: MultLattice, a: int) -> frozenset:
    """The maximal elements above ``a``."""
    return frozenset(m for m in maximal_elements(M) if M.le(a, m))


def m_lower(M: MultLattice, a: int) -> int:
    """Meet of the maximal elements above ``a`` (top when there are none)."""
    return M.meet_set(maximal_set_above(M, a))


def _max_sets(M):
    return M.memo("Msets", lambda: tuple(maximal_set_above(M, a) for a in M.elements))


def is_z_element(M: MultLattice, x: int) -> bool:
    """Equal maximal-sets: whenever M_a = M_b and b <= x then a <= x."""
    S, le, n = _max_sets(M), M.leq, M.n
    return all(le[a][x] for b in range(n) if le[b][x]
               for a in range(n) if S[a] == S[b])


def is_z_element_superset(M: MultLattice, x: int) -> bool:
    """Whenever M_a ⊇ M_b and b <= x then a <= x."""
    S, le, n = _max_sets(M), M.leq, M.n
    return all(le[a][x] for b in range(n) if le[b][x]
               for a in range(n) if S[a] >= S[b])


def is_z_element_lower(M: MultLattice, x: int) -> bool:
    """Whenever m_b <= m_a and a <= x then b <= x."""
    le, n = M.leq, M.n
    ml = [m_lower(M, a) for a in range(n)]
    return all(le[b][x] for a in range(n) if le[a][x]
               for b in range(n) if le[ml[b]][ml[a]])


@dataclass(frozen=True)
class ElementClassification:
    element: int
    is_prime: bool
    is_minimal_prime: bool
    is_maximal: bool
    is_semiprime: bool
    is_meet_irreducible: bool
    is_radical: bool
    is_zero_divisor: bool
    is_z_element: bool


def classify(M: MultLattice, x: int) -> ElementClassification:
    return ElementClassification(
        element=x,
        is_prime=is_prime(M, x),
        is_minimal_prime=x in minimal_primes(M),
        is_maximal=x in maximal_elements(M),
        is_semiprime=is_semiprime(M, x),
        is_meet_irreducible=is_meet_irreducible(M, x),
        is_radical=radical(M, x) == x,
        is_zero_divisor=is_zero_divisor(M, x),
        is_z_element=is_z_element(M, x),
    )
