"""Species of the p-permutation ring: pair enumeration and exact evaluation.

A species is indexed by a pair (P, s): a p-subgroup P together with a
p'-element s of N_G(P)/P, taken up to conjugation.  Its value on a monomial
generator Ind_L^G k_chi is computed by the fixed-line formula

    sum over cosets gL fixed by both P and the lift t of s
    of  zeta_n^chi(g^-1 t g),

which is the Brauer character of the Brauer quotient at P evaluated at s:
restricted to any p-subgroup the module is a genuine permutation module (the
character has p'-order, hence is trivial on p-elements), so the P-fixed
lines are a basis of the Brauer quotient, the lift permutes them monomially,
and cycles of length greater than one have root-of-unity eigenvalue packets
summing to zero.  The finite-field oracle in :mod:`ppring.ffq` checks this
formula by literal linear algebra.

The species vectors separate elements, which is what makes
:func:`equal_elements` a sound equality oracle for the spanning-set
representation.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .cyclo import Cyclotomic, ConductorMismatch, zeta_power
from .grp import (FiniteGroup, Permutation, Subgroup, centralizer,
                  conjugacy_classes, cosets, normalizer, p_prime_part, promote,
                  quotient, subgroup_closure)
from .lattice import subgroup_lattice
from .ppelem import Generator, GroupMismatch, PPElement, _is_p_power


class SpeciesPair:
    """A canonical pair (P, s), with s stored as a p'-order lift in N_G(P).

    The lift determines s (its image in N_G(P)/P) and makes every species
    value a concrete sum of character values, with no coset choices left.
    Derived data is precomputed: the subgroup generated by P and the lift,
    the order of s, the pair stabilizer and the centralizer order of s in
    N_G(P)/P.  These satisfy |stabilizer| = |P| * |centralizer|.
    """

    __slots__ = ("group", "p", "P", "lift", "ps", "s_order", "stabilizer",
                 "centralizer_order", "_hash")

    def __init__(self, group: FiniteGroup, p: int, P: Subgroup, lift: Permutation,
                 ps: Subgroup, s_order: int, stabilizer: Subgroup,
                 centralizer_order: int):
        self.group = group
        self.p = p
        self.P = P
        self.lift = lift
        self.ps = ps
        self.s_order = s_order
        self.stabilizer = stabilizer
        self.centralizer_order = centralizer_order
        self._hash = hash((group, p, P, lift))

    def sort_key(self):
        return (self.P.order, self.P.key(), self.s_order, self.lift.images)

    def label(self) -> str:
        return f"(|P|={self.P.order}, s={self.lift!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpeciesPair):
            return NotImplemented
        return (self.group == other.group and self.p == other.p
                and self.P == other.P and self.lift == other.lift)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SpeciesPair{self.label()}"


@lru_cache(maxsize=None)
def build_pair(G: FiniteGroup, p: int, P: Subgroup, lift: Permutation) -> SpeciesPair:
    """Assemble a species pair from a p-subgroup and a p'-order lift."""
    if P.parent != G:
        raise GroupMismatch("subgroup does not live in the group")
    if not _is_p_power(P.order, p):
        raise ValueError(f"subgroup order {P.order} is not a power of {p}")
    if math.gcd(lift.order(), p) != 1:
        raise ValueError("lift does not have p'-order")
    N = normalizer(G, P)
    if lift not in N:
        raise ValueError("lift does not normalize the subgroup")
    ps = subgroup_closure(G, P.elements + (lift,))
    H = promote(N)
    Q = quotient(H, P.reparent(H))
    sbar = Q.project(lift)
    s_order = sbar.order()
    assert lift.order() == s_order  # a p'-lift has exactly the order of its image
    centralizer_order = centralizer(Q.group, sbar).order
    lift_inv = lift.inverse()
    stab = Subgroup(
        G,
        [g for g in N.elements if lift.conj(g) * lift_inv in P.element_set],
        validate=False,
    )
    assert stab.order == P.order * centralizer_order
    return SpeciesPair(G, p, P, lift, ps, s_order, stab, centralizer_order)


@lru_cache(maxsize=None)
def enumerate_pairs(G: FiniteGroup, p: int) -> tuple[SpeciesPair, ...]:
    """Canonical representatives of the conjugation orbits of pairs (P, s).

    P runs over class representatives of p-subgroups; for each P, s runs
    over conjugacy class representatives of p'-elements of N_G(P)/P (which
    is exactly the fusion induced by N_G(P), hence by G).
    """
    lat = subgroup_lattice(G)
    pairs = []
    for P in lat.class_reps():
        if not _is_p_power(P.order, p):
            continue
        N = normalizer(G, P)
        H = promote(N)
        Q = quotient(H, P.reparent(H))
        for cls in conjugacy_classes(Q.group):
            s = cls[0]
            if math.gcd(s.order(), p) != 1:
                continue
            lift = p_prime_part(H, Q.lift(s), p)
            pairs.append(build_pair(G, p, P, lift))
    return tuple(sorted(pairs, key=SpeciesPair.sort_key))


def pairs_conjugate(a: SpeciesPair, b: SpeciesPair) -> bool:
    """True iff some g in G carries (P_a, s_a) to (P_b, s_b)."""
    if a.group != b.group or a.p != b.p:
        raise GroupMismatch("pairs live over different groups")
    if a.P.order != b.P.order or a.s_order != b.s_order:
        return False
    target = b.P.element_set
    b_inv = b.lift.inverse()
    for g in a.group.elements:
        if a.P.conj_set(g) != target:
            continue
        if a.lift.conj(g) * b_inv in target:
            return True
    return False


@lru_cache(maxsize=None)
def tau_generator(pair: SpeciesPair, gen: Generator) -> Cyclotomic:
    """Species value of a monomial generator at a pair, by the fixed-line sum."""
    if gen.group != pair.group:
        raise GroupMismatch("generator over a different group")
    n = gen.character.conductor
    if n % pair.s_order != 0 or n % pair.p == 0:
        raise ConductorMismatch("conductor incompatible with the pair")
    L = gen.subgroup
    chi = gen.character
    members = L.element_set
    pgens = pair.P.generators()
    t = pair.lift
    counts: dict[int, int] = {}
    for g in cosets(pair.group, L):
        gi = g.inverse()
        if any(gi * u * g not in members for u in pgens):
            continue  # coset line not P-fixed
        x = gi * t * g
        if x not in members:
            continue  # line moved by the lift: no trace contribution
        e = chi.value(x)
        counts[e] = counts.get(e, 0) + 1
    total = Cyclotomic.zero(n)
    for e, c in counts.items():
        total = total + zeta_power(n, e) * c
    return total


def tau_element(pair: SpeciesPair, x: PPElement) -> Cyclotomic:
    """Linear extension of :func:`tau_generator` over the terms of x."""
    total = Cyclotomic.zero(x.conductor)
    for gen, coeff in x.terms.items():
        total = total + coeff * tau_generator(pair, gen)
    return total


class SpeciesVector:
    """The values of an element at every canonical pair, in canonical order."""

    __slots__ = ("pairs", "values")

    def __init__(self, pairs: tuple[SpeciesPair, ...], values: tuple[Cyclotomic, ...]):
        self.pairs = pairs
        self.values = values

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpeciesVector):
            return NotImplemented
        return self.pairs == other.pairs and self.values == other.values

    def __iter__(self):
        return iter(zip(self.pairs, self.values))

    def value_at(self, pair: SpeciesPair) -> Cyclotomic:
        for q, v in zip(self.pairs, self.values):
            if q == pair:
                return v
        raise KeyError(pair)

    def __repr__(self) -> str:
        body = ", ".join(f"{q.label()}: {v}" for q, v in self)
        return f"SpeciesVector({body})"

    def to_json(self) -> list[dict]:
        return [{"pair": q.label(), "value": v.to_json()} for q, v in self]


def species_vector(x: PPElement) -> SpeciesVector:
    pairs = enumerate_pairs(x.group, x.p)
    return SpeciesVector(pairs, tuple(tau_element(q, x) for q in pairs))


def equal_elements(x: PPElement, y: PPElement) -> bool:
    """Equality in the ring, decided through the separating species vector."""
    x._compatible(y)
    return species_vector(x) == species_vector(y)


def standard_generators(G: FiniteGroup, p: int, conductor: int) -> tuple[Generator, ...]:
    """The canonical monomial spanning set: one generator per conjugacy class
    of (subgroup, linear character) pairs at the given conductor."""
    from .ppelem import linear_characters, make_generator
    lat = subgroup_lattice(G)
    seen: dict[Generator, None] = {}
    for L in lat.class_reps():
        for chi in linear_characters(L, conductor):
            seen[make_generator(G, L, chi)] = None
    return tuple(sorted(seen, key=Generator.sort_key))
