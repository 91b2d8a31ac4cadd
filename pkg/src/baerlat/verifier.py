"""The theorem-check suite and counterexample search.

Each result about Baer elements, closures and their frame is one numbered
check ``T1`` .. ``T23``; results with several clauses get one sub-id per
clause (``T16.1`` .. ``T16.12``). A check returns ``None`` when it holds
and a tuple of element indices when it finds a violation.

Scopes: ``general`` checks hold in every finite multiplicative lattice,
``reduced`` checks only under the standing assumption that 0 is the only
nilpotent, and ``B-multiplicative`` checks additionally need
``(c⊥⊥)² = c⊥⊥`` for all c. Out-of-scope inputs are reported SKIPPED.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from . import baer as bz
from . import elements as el
from .errors import StructureError, UnknownPredicate
from .morphisms import contraction_check, strong_homomorphisms
from .quantale import MultLattice, compact_elements, is_reduced, powers

PASS, FAIL = "PASS", "FAIL"
EXHAUSTIVE_SUBSETS_UPTO = 6
SUBSET_SAMPLES = 256


# helpers

def _pairs(n):
    return ((a, b) for a in range(n) for b in range(n))


def _first(items, pred):
    for w in items:
        if not pred(*w):
            return tuple(w)
    return None


def _residuals(M):
    return M.memo("res", lambda: tuple(tuple(el.residual(M, a, b) for b in M.elements)
                                       for a in M.elements))


def subsets_for(M: MultLattice, items: Iterable[int], seed: int = 0):
    """Subsets standing in for arbitrary families.

    Every subset when the host has at most six elements; otherwise every
    subset of size <= 2 and a fixed seeded sample of larger ones.
    """
    items = sorted(items)
    if M.n <= EXHAUSTIVE_SUBSETS_UPTO:
        return [s for r in range(len(items) + 1) for s in combinations(items, r)]
    out = [s for r in range(3) for s in combinations(items, r)]
    rng = random.Random(seed)
    for _ in range(SUBSET_SAMPLES):
        out.append(tuple(x for x in items if rng.random() < 0.5))
    return out


# T1 multiplication laws

def t1_1(M):
    return _first(_pairs(M.n), lambda x, y: M.le(M.mul[x][y], x))


def t1_2(M):
    return _first(_pairs(M.n), lambda x, y: M.le(M.mul[x][y], M.meet(x, y)))


def t1_3(M):
    return _first(((x,) for x in M.elements), lambda x: M.mul[x][M.bottom] == M.bottom)


def t1_4(M):
    n, t, le = M.n, M.mul, M.leq
    return _first(((x, y, z) for x, y in _pairs(n) if le[x][y] for z in range(n)),
                  lambda x, y, z: le[t[x][z]][t[y][z]])


def t1_5(M):
    n, t, le = M.n, M.mul, M.leq
    return _first(((x, y, u, v) for x, y in _pairs(n) if le[x][y]
                   for u, v in _pairs(n) if le[u][v]),
                  lambda x, y, u, v: le[t[x][u]][t[y][v]])


# T2 maximal elements exist above proper elements

def t2(M):
    mx = el.maximal_elements(M)
    return _first(((a,) for a in M.elements if a != M.top),
                  lambda a: any(M.le(a, m) for m in mx))


# T3 radical formulas

def t3_1(M):
    return _first(((x,) for x in M.elements),
                  lambda x: el.radical(M, x) == el.radical_via_primes(M, x))


def t3_2(M):
    return _first(((x,) for x in M.elements),
                  lambda x: el.radical(M, x) == el.radical_via_minimal_primes(M, x))


# T4 annihilator laws

def t4_1(M):
    ann = el.annihilator_table(M)
    return _first(((a, b) for a, b in _pairs(M.n) if M.le(a, b)),
                  lambda a, b: M.le(ann[b], ann[a]))


def t4_2(M):
    ann = el.annihilator_table(M)
    return _first(((a,) for a in M.elements), lambda a: M.le(a, ann[ann[a]]))


def t4_3(M):
    ann = el.annihilator_table(M)
    return _first(((a,) for a in M.elements), lambda a: ann[ann[ann[a]]] == ann[a])


def t4_4(M):
    ann = el.annihilator_table(M)
    return _first(_pairs(M.n),
                  lambda a, b: M.meet(ann[ann[a]], ann[ann[b]]) == ann[ann[M.mul[a][b]]])


def t4_5(M):
    ann, t, n = el.annihilator_table(M), M.mul, M.n
    return _first(((a, b, c) for a, b in _pairs(n) if M.le(ann[a], ann[b]) for c in range(n)),
                  lambda a, b, c: M.le(ann[t[a][c]], ann[t[b][c]]))


# T5 annihilator algebra

def t5_1(M):
    ann = el.annihilator_table(M)
    singles = set(ann)
    doubles = {ann[ann[y]] for y in M.elements}
    diff = sorted(singles ^ doubles)
    return (diff[0],) if diff else None


def t5_2(M):
    bad = el.boolean_violation(el.AnnihilatorAlgebra(M, frozenset(el.annihilator_table(M))))
    return bad[1] if bad else None


# T6 elementary properties of Baer elements

def t6_1(M):
    return _first(((b,) for b in M.elements),
                  lambda b: bz.is_baer(M, b) == bz.is_baer_char2(M, b))


def t6_2(M):
    return _first(((b,) for b in sorted(bz.baer_elements(M))),
                  lambda b: el.radical(M, b) == b)


def t6_3(M):
    B = bz.baer_elements(M)
    return _first(((b, p) for b in sorted(B) for p in sorted(el.minimal_primes_above(M, b))),
                  lambda b, p: p in B)


def t6_4(M):
    B = bz.baer_elements(M)
    prime_baer = [p for p in el.primes(M) if p in B]
    return _first(((b,) for b in sorted(B)),
                  lambda b: b == M.meet_set(p for p in prime_baer if M.le(b, p)))


def t6_5(M):
    B = bz.baer_elements(M)
    return _first(((M.bottom,), (M.top,)), lambda x: x in B)


def t6_6(M):
    B = bz.baer_elements(M)
    return next((tuple(s) for s in subsets_for(M, B) if M.meet_set(s) not in B), None)


# T7 further characterisations

def t7_1(M):
    return _first(((b,) for b in M.elements),
                  lambda b: bz.is_baer(M, b) == bz.is_baer_char3(M, b))


def t7_2(M):
    return _first(((b,) for b in M.elements),
                  lambda b: bz.is_baer(M, b) == bz.is_baer_char4(M, b))


# T8 pairwise comaximal families

def t8(M):
    B, top = bz.baer_elements(M), M.top
    for r in (2, 3):
        for fam in combinations(M.elements, r):
            if all(M.join(a, b) == top for a, b in combinations(fam, 2)):
                if M.meet_set(fam) in B and not all(a in B for a in fam):
                    return fam
    return None


# T9 products of Baer elements

def t9(M):
    w = bz.baer_product_closed(M)
    bmult = bz.is_B_multiplicative(M)
    if (w is None) == bmult:
        return None
    if w is not None:
        return w
    ann, t = el.annihilator_table(M), M.mul
    return next((c,) for c in compact_elements(M)
                if t[ann[ann[c]]][ann[ann[c]]] != ann[ann[c]])


# T10 residuals of Baer elements

def t10_1(M):
    B, res = bz.baer_elements(M), _residuals(M)
    return _first(((a, b) for a in sorted(B) for b in M.elements), lambda a, b: res[a][b] in B)


def t10_2(M):
    B, ann = bz.baer_elements(M), el.annihilator_table(M)
    return _first(((a,) for a in M.elements), lambda a: ann[a] in B)


def t10_3(M):
    B, res, t, n = bz.baer_elements(M), _residuals(M), M.mul, M.n
    Bs = sorted(B)
    for a in Bs:
        for b in range(n):
            for c in range(n):
                for v in (res[res[a][b]][c], res[a][t[b][c]], res[res[a][c]][b]):
                    if v not in B:
                        return (a, b, c)
    fams = [f for r in (1, 2, 3) for f in combinations(Bs, r)]
    for fam in fams:
        m = M.meet_set(fam)
        for b in range(n):
            lhs = res[m][b]
            rhs = M.meet_set(res[a][b] for a in fam)
            if lhs not in B or rhs not in B or lhs != rhs:
                return fam + (b,)
    for a in Bs:
        for r in (1, 2, 3):
            for fam in combinations(range(n), r):
                lhs = res[a][M.join_set(fam)]
                rhs = M.meet_set(res[a][b] for b in fam)
                if lhs not in B or rhs not in B or lhs != rhs:
                    return (a,) + fam
    return None


# T11 strong homomorphisms contract Baer elements

def _t11_sources(M):
    from .corpus.generators import fixture
    srcs = [fixture(name) for name in ("C2", "C3", "B2", "N4")]
    if M.n <= 8:
        srcs.append(M)
    return srcs


def t11(M):
    for S in _t11_sources(M):
        for h in strong_homomorphisms(S, M):
            ok, x = contraction_check(h)
            if not ok:
                return tuple(h.table) + (x,)
    return None


# T12 z-element characterisations

def t12(M):
    return _first(((x,) for x in M.elements),
                  lambda x: el.is_z_element(M, x) == el.is_z_element_superset(M, x)
                  == el.is_z_element_lower(M, x))


# T13 Baer elements are z-elements iff semisimple

def t13(M):
    B = sorted(bz.baer_elements(M))
    not_z = [x for x in B if not el.is_z_element(M, x)]
    if (not not_z) == el.is_semisimple(M):
        return None
    return (not_z[0],) if not_z else (el.jacobson_radical(M),)


# T14 domains (repaired statement: Baer elements are exactly 0 and 1)

def t14(M):
    B = bz.baer_elements(M)
    trivial = B <= {M.bottom, M.top}
    if trivial == el.is_domain(M):
        return None
    if not trivial:
        return (min(B - {M.bottom, M.top}),)
    return next((x, y) for x, y in _pairs(M.n)
                if x != M.bottom and y != M.bottom and M.mul[x][y] == M.bottom)


# T15 primes, maximals and Baer elements

def t15_1(M):
    B = bz.baer_elements(M)
    return _first(((x, p) for p in sorted(el.primes(M)) for x in M.elements
                   if M.meet(x, p) in B), lambda x, p: x in B or p in B)


def t15_2(M):
    B, P = bz.baer_elements(M), sorted(el.primes(M))
    return _first(((p, q) for p, q in combinations(P, 2)
                   if not M.le(p, q) and not M.le(q, p) and M.meet(p, q) in B),
                  lambda p, q: p in B and q in B)


def t15_3(M):
    B = bz.baer_elements(M)
    return _first(((x, m) for m in sorted(el.maximal_elements(M)) for x in M.elements
                   if not M.le(x, m) and M.meet(x, m) in B),
                  lambda x, m: x in B and m in B)


def t15_4(M):
    B = bz.baer_elements(M)
    for p in sorted(el.primes(M)):
        if p in B:
            continue
        S = [x for x in B if M.le(x, p)]
        for m in S:
            if not any(y != m and M.le(m, y) for y in S) and not el.is_prime(M, m):
                return (p, m)
    return None


# T16 Baer closure

def _cz(M):
    return bz.baer_closure(M).table


def t16_1(M):
    cz, B = _cz(M), bz.baer_elements(M)
    return _first(((a,) for a in M.elements),
                  lambda a: cz[a] in B and M.le(a, cz[a])
                  and all(M.le(cz[a], y) for y in B if M.le(a, y)))


def t16_2(M):
    cz, B = _cz(M), bz.baer_elements(M)
    return _first(((a,) for a in M.elements), lambda a: (cz[a] == a) == (a in B))


def t16_3(M):
    cz = _cz(M)
    return _first(((a,) for a in M.elements), lambda a: (cz[a] == M.top) == (a == M.top))


def t16_4(M):
    return None if _cz(M)[M.bottom] == M.bottom else (M.bottom,)


def t16_5(M):
    return bz.baer_closure(M).monotone_witness()


def t16_6(M):
    return bz.baer_closure(M).idempotent_witness()


def t16_7(M):
    cz = _cz(M)
    return _first(((a,) for a in M.elements), lambda a: M.le(el.radical(M, a), cz[a]))


def t16_8(M):
    cz = _cz(M)
    return _first(((a,) for a in M.elements), lambda a: cz[a] == cz[el.radical(M, a)])


def t16_9(M):
    cz = _cz(M)
    return _first(((a, k + 1) for a in M.elements for k in range(M.n)),
                  lambda a, k: cz[powers(M, a)[k - 1]] == cz[a])


def t16_10(M):
    cz, j = _cz(M), M.join
    return _first(_pairs(M.n), lambda a, b: M.le(j(cz[a], cz[b]), cz[j(a, b)])
                  and cz[j(a, b)] == cz[j(cz[a], cz[b])])


def t16_11(M):
    cz, m = _cz(M), M.meet
    return _first(_pairs(M.n), lambda a, b: cz[M.mul[a][b]] == cz[m(a, b)] == m(cz[a], cz[b]))


def t16_12(M):
    cz = _cz(M)
    return _first(_pairs(M.n), lambda a, b: cz[M.mul[a][b]] == M.mul[cz[a]][cz[b]])


# T17 the d-closure

def t17_1(M):
    d, B = bz.d_closure(M).table, bz.baer_elements(M)
    return _first(((x,) for x in M.elements), lambda x: (d[x] == x) == (x in B))


def t17_2(M):
    d, cz = bz.d_closure(M).table, _cz(M)
    return _first(((x,) for x in M.elements), lambda x: M.le(x, d[x]) and M.le(d[x], cz[x]))


# T18 joins of Baer elements

def join_closure_statements(M):
    """Truth value and witness of the four join-closure statements."""
    B, cz = bz.baer_elements(M), _cz(M)
    j = M.join
    w1 = bz.baer_join_closed(M)
    w2 = _first(_pairs(M.n), lambda a, b: cz[j(a, b)] == j(cz[a], cz[b]))
    w3 = next((s for s in subsets_for(M, B) if M.join_set(s) not in B), None)
    w4 = next((s for s in subsets_for(M, M.elements, seed=1)
               if cz[M.join_set(s)] != M.join_set(cz[a] for a in s)), None)
    return [(w is None, w) for w in (w1, w2, w3, w4)]


def t18(M):
    st = join_closure_statements(M)
    if len({ok for ok, _ in st}) == 1:
        return None
    return next(tuple(w) for ok, w in st if not ok)


# T19 Baer closure as a nucleus

def t19_1(M):
    r = bz.classify_nucleus(M, bz.baer_closure(M))
    return None if r.is_nucleus else r.witnesses["nucleus"]


def t19_2(M):
    r = bz.classify_nucleus(M, bz.baer_closure(M))
    return None if r.is_multiplicative_nucleus else r.witnesses["multiplicative"]


def t19_3(M):
    r = bz.classify_nucleus(M, bz.baer_closure(M))
    return None if r.is_quantic_nucleus else r.witnesses["quantic"]


def t19_4(M):
    return bz.quantic_identities_witness(M)


# T20 the frame of Baer elements

def t20_1(M):
    bad = bz.frame_violation(M)
    if bad is not None and bad[0] not in ("odot=meet", "distributive"):
        return bad[1]
    try:
        bz.baer_frame(M)
    except StructureError as e:
        return e.witness or (M.top,)
    return None


def t20_2(M):
    cz, B = _cz(M), sorted(bz.baer_elements(M))
    return _first(((a, b) for a in B for b in B), lambda a, b: cz[M.mul[a][b]] == M.meet(a, b))


def t20_3(M):
    cz, B = _cz(M), sorted(bz.baer_elements(M))
    m, j = M.meet, M.join
    w = _first(((a, b, c) for a in B for b in B for c in B),
               lambda a, b, c: m(a, cz[j(b, c)]) == cz[j(m(a, b), m(a, c))])
    if w:
        return w
    for s in subsets_for(M, B, seed=2):
        js = cz[M.join_set(s)]
        for x in B:
            if m(x, js) != cz[M.join_set(m(x, y) for y in s)]:
                return (x,) + tuple(s)
    return None


# T21 maximal Baer elements

def _maximal_among_baer(M):
    B = bz.baer_elements(M)
    proper = [b for b in B if b != M.top]
    return [b for b in proper if not any(c != b and M.le(b, c) for c in proper)]


def t21_1(M):
    mx, mb = el.maximal_elements(M), set(_maximal_among_baer(M))
    return _first(((b,) for b in sorted(bz.baer_elements(M))), lambda b: (b in mx) == (b in mb))


def t21_2(M):
    return _first(((b,) for b in sorted(_maximal_among_baer(M))), lambda b: el.is_prime(M, b))


# T22 primes and semiprimes tested on Baer witnesses

def baer_prime_condition(M, p):
    B = sorted(bz.baer_elements(M))
    t, le = M.mul, M.leq
    return p != M.top and all(le[x][p] or le[y][p] for x in B for y in B if le[t[x][y]][p])


def baer_semiprime_condition(M, q):
    t, le = M.mul, M.leq
    return all(le[x][q] for x in bz.baer_elements(M) if le[t[x][x]][q])


def t22_1(M):
    return _first(((p,) for p in sorted(bz.baer_elements(M))),
                  lambda p: el.is_prime(M, p) == baer_prime_condition(M, p))


def t22_2(M):
    return _first(((q,) for q in sorted(bz.baer_elements(M))),
                  lambda q: el.is_semiprime(M, q) == baer_semiprime_condition(M, q))


# T23 meet-irreducibles tested on Baer witnesses

def baer_meet_irreducible_condition(M, s):
    B = sorted(bz.baer_elements(M))
    le = M.leq
    return all(le[x][s] or le[y][s] for x in B for y in B if le[M.meet(x, y)][s])


def t23(M):
    return _first(((s,) for s in sorted(bz.baer_elements(M))),
                  lambda s: el.is_meet_irreducible(M, s) == baer_meet_irreducible_condition(M, s))


# catalog

@dataclass(frozen=True)
class Check:
    id: str
    title: str
    scope: str
    run: Callable[[MultLattice], Optional[tuple]] = field(repr=False)


G, R, BM = "general", "reduced", "B-multiplicative"

CATALOG = [
    Check("T1.1", "xy <= x", G, t1_1),
    Check("T1.2", "xy <= x ^ y", G, t1_2),
    Check("T1.3", "x0 = 0", G, t1_3),
    Check("T1.4", "x <= y implies xz <= yz", G, t1_4),
    Check("T1.5", "x <= y, u <= v implies xu <= yv", G, t1_5),
    Check("T2", "every proper element lies below a maximal element", G, t2),
    Check("T3.1", "radical = meet of primes above", G, t3_1),
    Check("T3.2", "radical = meet of minimal primes above", G, t3_2),
    Check("T4.1", "a <= b implies b' <= a'", G, t4_1),
    Check("T4.2", "a <= a''", G, t4_2),
    Check("T4.3", "a''' = a'", G, t4_3),
    Check("T4.4", "a'' ^ b'' = (ab)''", R, t4_4),
    Check("T4.5", "a' <= b' implies (ac)' <= (bc)'", G, t4_5),
    Check("T5.1", "annihilators = double annihilators", G, t5_1),
    Check("T5.2", "annihilators form a Boolean algebra", R, t5_2),
    Check("T6.1", "Baer iff equal-annihilator characterisation", R, t6_1),
    Check("T6.2", "Baer elements are radical", R, t6_2),
    Check("T6.3", "minimal primes above Baer elements are Baer", R, t6_3),
    Check("T6.4", "Baer element = meet of prime Baer elements above", R, t6_4),
    Check("T6.5", "0 and 1 are Baer", R, t6_5),
    Check("T6.6", "meets of Baer elements are Baer", R, t6_6),
    Check("T7.1", "Baer iff u' <= v' characterisation", R, t7_1),
    Check("T7.2", "Baer iff join-of-double-annihilators characterisation", R, t7_2),
    Check("T8", "comaximal family with Baer meet has Baer members", R, t8),
    Check("T9", "Baer closed under products iff B-multiplicative", R, t9),
    Check("T10.1", "(a:b) Baer for Baer a", R, t10_1),
    Check("T10.2", "a' is Baer", R, t10_2),
    Check("T10.3", "composite residuals of Baer elements are Baer", R, t10_3),
    Check("T11", "strong homomorphisms contract Baer elements", R, t11),
    Check("T12", "z-element characterisations agree", G, t12),
    Check("T13", "Baer elements are z-elements iff semisimple", R, t13),
    Check("T14", "domain iff Baer elements are exactly 0 and 1", R, t14),
    Check("T15.1", "x ^ p Baer, p prime: x or p Baer", R, t15_1),
    Check("T15.2", "incomparable primes with Baer meet are Baer", R, t15_2),
    Check("T15.3", "x not below maximal m, x ^ m Baer: both Baer", R, t15_3),
    Check("T15.4", "maximal Baer elements below a non-Baer prime are prime", R, t15_4),
    Check("T16.1", "cz(a) is the least Baer element above a", R, t16_1),
    Check("T16.2", "cz(a) = a iff a Baer", R, t16_2),
    Check("T16.3", "cz(a) = 1 iff a = 1", R, t16_3),
    Check("T16.4", "cz(0) = 0", R, t16_4),
    Check("T16.5", "cz monotone", R, t16_5),
    Check("T16.6", "cz idempotent", R, t16_6),
    Check("T16.7", "radical(a) <= cz(a)", R, t16_7),
    Check("T16.8", "cz(a) = cz(radical(a))", R, t16_8),
    Check("T16.9", "cz(a^k) = cz(a)", R, t16_9),
    Check("T16.10", "cz(a) v cz(b) <= cz(a v b) = cz(cz(a) v cz(b))", R, t16_10),
    Check("T16.11", "cz(ab) = cz(a ^ b) = cz(a) ^ cz(b)", R, t16_11),
    Check("T16.12", "cz(ab) = cz(a) cz(b)", BM, t16_12),
    Check("T17.1", "d(x) = x iff x Baer", R, t17_1),
    Check("T17.2", "x <= d(x) <= cz(x)", R, t17_2),
    Check("T18", "join-closure statements are equivalent", R, t18),
    Check("T19.1", "cz is a nucleus", R, t19_1),
    Check("T19.2", "cz is a multiplicative nucleus", R, t19_2),
    Check("T19.3", "cz is a quantic nucleus", BM, t19_3),
    Check("T19.4", "cz(ab) = cz(a cz(b)) = cz(cz(a) b) = cz(cz(a) cz(b))", BM, t19_4),
    Check("T20.1", "Baer elements form a multiplicative lattice, cz a homomorphism", R, t20_1),
    Check("T20.2", "product of Baer elements closes to their meet", R, t20_2),
    Check("T20.3", "Baer elements form a frame", R, t20_3),
    Check("T21.1", "Baer m maximal iff maximal among Baer elements", R, t21_1),
    Check("T21.2", "maximal Baer elements are prime", R, t21_2),
    Check("T22.1", "Baer p prime iff prime on Baer witnesses", BM, t22_1),
    Check("T22.2", "Baer q semiprime iff semiprime on Baer witnesses", BM, t22_2),
    Check("T23", "Baer s meet-irreducible iff on Baer witnesses", R, t23),
]

CHECKS = {c.id: c for c in CATALOG}


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    witness: Optional[tuple] = None

    @property
    def passed(self):
        return self.status == PASS

    @property
    def failed(self):
        return self.status == FAIL


@dataclass
class TheoremReport:
    lattice: str
    checks: list
    wall_time: float = 0.0

    @property
    def failures(self):
        return [c for c in self.checks if c.failed]

    @property
    def ok(self):
        return not self.failures

    def to_json(self) -> str:
        """Deterministic JSON: one object per check, no timing."""
        rows = [{"id": c.id, "status": c.status,
                 "witness": list(c.witness) if c.witness is not None else None}
                for c in self.checks]
        return json.dumps(rows, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"# {self.lattice}"]
        for c in self.checks:
            w = "" if c.witness is None else "  witness " + " ".join(map(str, c.witness))
            lines.append(f"{c.id:7s} {c.status}{w}  {CHECKS[c.id].title}")
        return "\n".join(lines) + "\n"


def skip_reason(M: MultLattice, check: Check):
    if check.scope == G:
        return None
    if not is_reduced(M):
        return "not-reduced"
    if check.scope == BM and not bz.is_B_multiplicative(M):
        return "not-B-multiplicative"
    return None


def run_check(M: MultLattice, check_id: str, force: bool = False) -> CheckResult:
    """Run one check; ``force`` ignores its scope (used to replay witnesses)."""
    check = CHECKS[check_id]
    reason = None if force else skip_reason(M, check)
    if reason:
        return CheckResult(check_id, f"SKIPPED({reason})")
    w = check.run(M)
    if w is None:
        return CheckResult(check_id, PASS)
    return CheckResult(check_id, FAIL, tuple(int(v) for v in w))


def select(only=None) -> list[Check]:
    """Checks whose id equals or extends one of the ``only`` prefixes."""
    if not only:
        return list(CATALOG)
    out = [c for c in CATALOG if any(c.id == p or c.id.startswith(p + ".") for p in only)]
    unknown = [p for p in only if not any(c.id == p or c.id.startswith(p + ".") for c in CATALOG)]
    if unknown:
        raise KeyError(f"unknown check id(s): {', '.join(unknown)}")
    return out


def run_suite(M: MultLattice, only=None, name: str = "") -> TheoremReport:
    start = time.perf_counter()
    results = [run_check(M, c.id) for c in select(only)]
    return TheoremReport(name or f"n={M.n}", results, time.perf_counter() - start)


# counterexample search

def _reduced_and(pred):
    def wrapped(M):
        return pred(M) if is_reduced(M) else None
    return wrapped


def _nilpotent(M):
    return next(((x,) for x in M.elements if x != M.bottom and M.bottom in powers(M, x)), None)


def _non_b_mult(M):
    ann, t = el.annihilator_table(M), M.mul
    return next(((c,) for c in M.elements
                 if t[ann[ann[c]]][ann[ann[c]]] != ann[ann[c]]), None)


def _baer_witness_tests_without_bmult(M):
    if bz.is_B_multiplicative(M):
        return None
    return t22_1(M) or t22_2(M)


def _group(prefix):
    def pred(M):
        for c in select([prefix]):
            if skip_reason(M, c) is None:
                w = c.run(M)
                if w is not None:
                    return w
        return None
    return pred


def _suite_violated(M):
    for r in run_suite(M).checks:
        if r.failed:
            return r.witness
    return None


PREDICATES = {
    "not-reduced": _nilpotent,
    "non-B-multiplicative": _reduced_and(_non_b_mult),
    "baer-not-join-closed": _reduced_and(bz.baer_join_closed),
    "pebe-fails-without-B-multiplicativity": _reduced_and(_baer_witness_tests_without_bmult),
    "annihilators-not-boolean": _reduced_and(t5_2),
    "theorem-cup-violated": _reduced_and(t9),
    "epbe-violated": _group("T6"),
    "lclk-violated": _group("T16"),
    "suite-violated": _suite_violated,
}


def predicate(name: str):
    key = name.strip().replace(" ", "-").replace("_", "-")
    for k, f in PREDICATES.items():
        if k.lower() == key.lower():
            return f
    if key.lower().startswith("check:"):
        cid = key.split(":", 1)[1].upper()
        if cid in CHECKS:
            check = CHECKS[cid]
            return lambda M: check.run(M) if skip_reason(M, check) is None else None
    raise UnknownPredicate(f"unknown predicate {name!r}; known: {', '.join(PREDICATES)}")


@dataclass
class SearchResult:
    found: Optional[MultLattice]
    witness: Optional[tuple]
    examined: int


def search(config, predicate_name: str) -> SearchResult:
    """First enumerated structure satisfying the predicate, in enumeration order."""
    from .corpus.enumeration import enumerate_structures
    pred = predicate(predicate_name)
    examined = 0
    for M in enumerate_structures(config):
        examined += 1
        w = pred(M)
        if w is not None:
            return SearchResult(M, tuple(int(v) for v in w), examined)
    return SearchResult(None, None, examined)
