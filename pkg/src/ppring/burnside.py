"""The rational Burnside ring: marks, Gluck-Yoshida idempotents, fixed points.

Elements are rational combinations of transitive G-sets [G/L], stored on
canonical conjugacy-class representatives of subgroups, which *is* a basis,
so equality here is plain coefficient equality.  Restriction and induction
are implemented by explicit orbit algorithms on coset spaces (not through
mark vectors), so the commutation tests against the module-theoretic side
exercise genuinely independent code.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .cyclo import Cyclotomic
from .grp import (FiniteGroup, Subgroup, coset_table, double_coset_reps,
                  normalizer, promote, quotient)
from .lattice import subgroup_lattice
from .ppelem import (GroupMismatch, LinChar, PPElement, default_conductor,
                     make_generator)


class BurnsideElement:
    """A rational combination of transitive G-sets, on canonical class reps."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup,
                 coeffs: Mapping[Subgroup, Union[int, Fraction]] | None = None):
        self.group = group
        lat = subgroup_lattice(group)
        clean: dict[Subgroup, Fraction] = {}
        for L, c in (coeffs or {}).items():
            rep = lat.rep_of(L)
            c = Fraction(c)
            if c:
                clean[rep] = clean.get(rep, Fraction(0)) + c
        self.coeffs = {L: c for L, c in clean.items() if c}

    @classmethod
    def zero(cls, group: FiniteGroup) -> BurnsideElement:
        return cls(group)

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        if other.group != self.group:
            raise GroupMismatch("elements over different groups")
        coeffs = dict(self.coeffs)
        for L, c in other.coeffs.items():
            coeffs[L] = coeffs.get(L, Fraction(0)) + c
        return BurnsideElement(self.group, coeffs)

    def __neg__(self) -> BurnsideElement:
        return self.scale(-1)

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        return self + (-other)

    def scale(self, c: Union[int, Fraction]) -> BurnsideElement:
        c = Fraction(c)
        return BurnsideElement(self.group, {L: c * v for L, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return self.group == other.group and self.coeffs == other.coeffs

    def sorted_terms(self) -> list[tuple[Subgroup, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0].order, kv[0].key()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "BurnsideElement(0)"
        body = " + ".join(f"({c})*[G/|{L.order}|]" for L, c in self.sorted_terms())
        return f"BurnsideElement({body})"


def transitive(G: FiniteGroup, L: Subgroup) -> BurnsideElement:
    """The class of the transitive G-set [G/L]."""
    return BurnsideElement(G, {L: 1})


@lru_cache(maxsize=None)
def mark(G: FiniteGroup, L: Subgroup, H: Subgroup) -> int:
    """The number of H-fixed points of [G/L]: cosets gL with g^-1 H g <= L."""
    members = L.element_set
    hgens = H.generators()
    count = 0
    for g in coset_table(G, L)[0]:
        gi = g.inverse()
        if all(gi * h * g in members for h in hgens):
            count += 1
    return count


def mark_element(x: BurnsideElement, H: Subgroup) -> Fraction:
    """Linear extension of the mark at H."""
    total = Fraction(0)
    for L, c in x.coeffs.items():
        total += c * mark(x.group, L, H)
    return total


def burnside_product(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    """Bilinear extension of [G/A].[G/B] = sum over A\\G/B of [G/(A cap gBg^-1)]."""
    if a.group != b.group:
        raise GroupMismatch("elements over different groups")
    G = a.group
    out = BurnsideElement.zero(G)
    for A, ca in a.coeffs.items():
        for B, cb in b.coeffs.items():
            c = ca * cb
            terms: dict[Subgroup, Fraction] = {}
            for g in double_coset_reps(G, A, B):
                gi = g.inverse()
                conj_set = frozenset(x.conj(gi) for x in B.elements)  # g B g^-1
                inter = Subgroup(G, A.element_set & conj_set, validate=False)
                terms[inter] = terms.get(inter, Fraction(0)) + c
            out = out + BurnsideElement(G, terms)
    return out


def gluck_yoshida(G: FiniteGroup, H: Subgroup) -> BurnsideElement:
    """The primitive idempotent of the rational Burnside ring attached to H:

        e_H = (1/|N_G(H)|) * sum over L <= H of |L| mu(L, H) [G/L],

    with the Moebius function taken in the subgroup poset of H.
    """
    if H.parent != G:
        raise GroupMismatch("subgroup over a different group")
    lat = subgroup_lattice(promote(H))
    nrm = normalizer(G, H).order
    coeffs: dict[Subgroup, Fraction] = {}
    for L in lat.subgroups:
        mu = lat.moebius(L, lat.top)
        if mu == 0:
            continue
        LG = L.reparent(G)
        coeffs[LG] = coeffs.get(LG, Fraction(0)) + Fraction(L.order * mu, nrm)
    return BurnsideElement(G, coeffs)


def _orbit_reps_and_stabilizers(H: Subgroup, G: FiniteGroup, L: Subgroup,
                                fixed: list) -> list[tuple]:
    """Orbits of H acting by left multiplication on a set of cosets of L.

    ``fixed`` is a list of coset representatives; returns (rep, stabilizer
    elements) per orbit, where the stabilizer is taken inside H.
    """
    rep_of = coset_table(G, L)[1]
    remaining = set(fixed)
    out = []
    members = L.element_set
    while remaining:
        start = min(remaining)
        orbit = {start}
        frontier = [start]
        while frontier:
            new = []
            for c in frontier:
                for h in H.generators():
                    d = rep_of[h * c]
                    if d not in orbit:
                        orbit.add(d)
                        new.append(d)
            frontier = new
        remaining -= orbit
        si = start.inverse()
        stab = [h for h in H.elements if si * h * start in members]
        out.append((start, stab))
    return out


def burnside_res(x: BurnsideElement, H: Subgroup) -> BurnsideElement:
    """Restriction to H by orbit decomposition of each coset space."""
    if H.parent != x.group:
        raise GroupMismatch("subgroup over a different group")
    G = x.group
    HH = promote(H)
    out = BurnsideElement.zero(HH)
    for L, c in x.coeffs.items():
        reps = list(coset_table(G, L)[0])
        terms: dict[Subgroup, Fraction] = {}
        for _, stab in _orbit_reps_and_stabilizers(H, G, L, reps):
            S = Subgroup(HH, stab, validate=False)
            terms[S] = terms.get(S, Fraction(0)) + c
        out = out + BurnsideElement(HH, terms)
    return out


def burnside_ind(x: BurnsideElement, G: FiniteGroup) -> BurnsideElement:
    """Induction to G: the induced transitive set [H/S] becomes [G/S]."""
    if G.degree != x.group.degree or not x.group.element_set <= G.element_set:
        raise GroupMismatch("the element's group is not a subgroup of the target")
    coeffs = {S.reparent(G): c for S, c in x.coeffs.items()}
    return BurnsideElement(G, coeffs)


def fixed_point_functor(P: Subgroup, x: BurnsideElement) -> BurnsideElement:
    """The functor induced by taking P-fixed points, landing over N_G(P)/P.

    Each [G/L] is sent to the orbit decomposition of its P-fixed cosets as a
    set for the quotient group.
    """
    if P.parent != x.group:
        raise GroupMismatch("subgroup over a different group")
    G = x.group
    N = normalizer(G, P)
    H = promote(N)
    Q = quotient(H, P.reparent(H))
    out = BurnsideElement.zero(Q.group)
    pgens = P.generators()
    for L, c in x.coeffs.items():
        members = L.element_set
        fixed = []
        for g in coset_table(G, L)[0]:
            gi = g.inverse()
            if all(gi * u * g in members for u in pgens):
                fixed.append(g)
        terms: dict[Subgroup, Fraction] = {}
        for _, stab in _orbit_reps_and_stabilizers(N, G, L, fixed):
            Sbar = Q.project_subgroup(Subgroup(H, stab, validate=False))
            terms[Sbar] = terms.get(Sbar, Fraction(0)) + c
        out = out + BurnsideElement(Q.group, terms)
    return out


def linearize(x: BurnsideElement, p: int, conductor: int | None = None) -> PPElement:
    """The image in the p-permutation ring: [G/L] becomes the monomial
    generator with trivial character."""
    G = x.group
    n = default_conductor(G, p) if conductor is None else conductor
    terms = {}
    for L, c in x.coeffs.items():
        gen = make_generator(G, L, LinChar.trivial(L, n))
        terms[gen] = terms.get(gen, Cyclotomic.zero(n)) + Cyclotomic.from_rational(n, c)
    return PPElement(G, p, n, terms)
