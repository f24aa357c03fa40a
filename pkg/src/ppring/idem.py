"""Primitive idempotents of the scalar-extended p-permutation ring.

Two independent routes are provided for the idempotent attached to a pair
(P, s) and cross-checked everywhere:

* :func:`idempotent_theorem` evaluates the closed formula directly: a
  Moebius-weighted sum over characters of <s> and subgroups L of <Ps> with
  PL = <Ps>, of induced monomial generators.
* :func:`idempotent_via_reduction` reduces to the subgroup <Ps> (where P is
  a normal Sylow p-subgroup with cyclic quotient), assembles the idempotent
  there from the Burnside-ring idempotent and the cyclic-group idempotent,
  and induces back up with the index coefficient |s| / |centralizer|.

The verification helpers check the restriction and induction laws for
idempotents and the decomposition of the linearized top Burnside idempotent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .burnside import gluck_yoshida, linearize
from .cyclo import Cyclotomic, zeta_power
from .grp import (FiniteGroup, Permutation, Subgroup, promote, quotient,
                  subgroup_closure, sylow)
from .lattice import subgroup_lattice
from .ppelem import (GroupMismatch, LinChar, PPElement, char_pullback,
                     default_conductor, ind_elt, inf_elt, make_generator,
                     res_elt, tensor_elt)
from .species import (SpeciesPair, build_pair, enumerate_pairs, equal_elements,
                      pairs_conjugate, species_vector)


class NotCyclic(Exception):
    """Raised when a cyclic group was expected."""


class NotPPrime(Exception):
    """Raised when a group of order prime to p was expected."""


class ShapeMismatch(Exception):
    """Raised when a group is not of the required normal-Sylow shape."""


@dataclass
class IdempotentReport:
    """Outcome of assembling and checking one primitive idempotent."""

    pair: SpeciesPair
    element: PPElement
    delta_ok: bool
    routes_agree: bool


def cyclic_idempotent(C: FiniteGroup, t: Permutation, p: int,
                      conductor: int) -> PPElement:
    """The primitive idempotent of a cyclic p'-group attached to the element t:

        (1/|C|) * sum over characters phi of phi(t^-1) * [k_phi],

    with character values lifted to roots of unity at the given conductor.
    """
    r = C.order
    if r % p == 0:
        raise NotPPrime(f"group order {r} is divisible by {p}")
    gen = next((x for x in C.elements if x.order() == r), None)
    if gen is None:
        raise NotCyclic("group has no element of full order")
    if t not in C:
        raise GroupMismatch("element does not belong to the group")
    if conductor % r != 0:
        raise ValueError("group order must divide the conductor")
    step = conductor // r
    powers = {}
    x = C.identity
    for a in range(r):
        powers[x] = a
        x = x * gen
    b = powers[t]
    full = C.full_subgroup()
    terms = {}
    for j in range(r):
        chi = LinChar(full, {y: (j * powers[y] * step) % conductor
                             for y in C.elements}, conductor, validate=False)
        g = make_generator(C, full, chi)
        coeff = zeta_power(conductor, (-j * b) % r * step) * Fraction(1, r)
        terms[g] = terms.get(g, Cyclotomic.zero(conductor)) + coeff
    return PPElement(C, p, conductor, terms)


def top_E(G: FiniteGroup, p: int, conductor: int | None = None) -> PPElement:
    """The linearization of the top Burnside idempotent of G."""
    n = default_conductor(G, p) if conductor is None else conductor
    return linearize(gluck_yoshida(G, G.full_subgroup()), p, n)


def idempotent_normal_case(H: FiniteGroup, s_lift: Permutation, p: int,
                           conductor: int | None = None) -> PPElement:
    """The idempotent of a group with normal Sylow p-subgroup and cyclic
    p'-quotient generated by the image of ``s_lift``: the product of the
    linearized top Burnside idempotent with the inflated cyclic idempotent.
    """
    n = default_conductor(H, p) if conductor is None else conductor
    P = sylow(H, p)
    if not P.is_normal():
        raise ShapeMismatch("the Sylow p-subgroup is not normal")
    Q = quotient(H, P)
    C = Q.group
    if math.gcd(s_lift.order(), p) != 1 or s_lift not in H:
        raise ShapeMismatch("lift is not a p'-element of the group")
    sbar = Q.project(s_lift)
    if sbar.order() != C.order:
        raise ShapeMismatch("quotient is not cyclic generated by the lift's image")
    f = cyclic_idempotent(C, sbar, p, n)
    return tensor_elt(top_E(H, p, n), inf_elt(f, Q))


def idempotent_theorem(G: FiniteGroup, p: int, pair: SpeciesPair,
                       conductor: int | None = None) -> PPElement:
    """The closed formula for the primitive idempotent attached to a pair:

        1/(|P| |s| |C|) * sum over characters phi of <s> and subgroups
        L <= <Ps> with PL = <Ps> of phi(s^-1) |L| mu(L, <Ps>) Ind_L^G k_chi,

    where chi is phi seen through the quotient <Ps> -> <s> and restricted
    to L, C is the centralizer of s in N_G(P)/P, and mu is the Moebius
    function of the subgroup poset of <Ps>.
    """
    if pair.group != G or pair.p != p:
        raise GroupMismatch("pair does not belong to the (group, prime) computation")
    n = default_conductor(G, p) if conductor is None else conductor
    P = pair.P
    t = pair.lift
    r = pair.s_order
    H = promote(pair.ps)
    PH = P.reparent(H)
    lat = subgroup_lattice(H)
    denom = P.order * r * pair.centralizer_order
    step = n // r
    terms: dict = {}
    for L in lat.subgroups:
        join = subgroup_closure(H, PH.elements + L.elements)
        if join.order != H.order:
            continue  # the condition PL = <Ps>
        mu = lat.moebius(L, lat.top)
        if mu == 0:
            continue
        weight = Fraction(L.order * mu, denom)
        for j in range(r):
            chi = char_pullback(H, PH, t, j, L, n)
            LG = L.reparent(G)
            g = make_generator(G, LG, chi.reparent(LG))
            coeff = zeta_power(n, (-j) % r * step) * weight
            terms[g] = terms.get(g, Cyclotomic.zero(n)) + coeff
    return PPElement(G, p, n, terms)


def idempotent_via_reduction(G: FiniteGroup, p: int, pair: SpeciesPair,
                             conductor: int | None = None) -> PPElement:
    """The same idempotent through the reduction route: induce the
    normal-case idempotent of <Ps> up to G, scaled by |s| / |centralizer|.
    """
    if pair.group != G or pair.p != p:
        raise GroupMismatch("pair does not belong to the (group, prime) computation")
    n = default_conductor(G, p) if conductor is None else conductor
    H = promote(pair.ps)
    f = idempotent_normal_case(H, pair.lift, p, n)
    return ind_elt(f, G).scale(Fraction(pair.s_order, pair.centralizer_order))


def delta_property(pair: SpeciesPair, element: PPElement) -> bool:
    """True iff the species vector of the element is the orbit indicator of
    the pair: 1 at pairs conjugate to it, 0 elsewhere."""
    vec = species_vector(element)
    for q, v in vec:
        expected = 1 if (q == pair or pairs_conjugate(q, pair)) else 0
        if v != Cyclotomic.from_rational(element.conductor, expected):
            return False
    return True


def idempotent_report(G: FiniteGroup, p: int, pair: SpeciesPair,
                      conductor: int | None = None) -> IdempotentReport:
    element = idempotent_theorem(G, p, pair, conductor)
    other = idempotent_via_reduction(G, p, pair, conductor)
    return IdempotentReport(
        pair=pair,
        element=element,
        delta_ok=delta_property(pair, element),
        routes_agree=equal_elements(element, other),
    )


def verify_restriction(G: FiniteGroup, p: int, H: Subgroup, pair: SpeciesPair,
                       conductor: int | None = None) -> bool:
    """Check that restricting the idempotent of a pair to H gives the sum of
    the H-idempotents at the H-classes of G-conjugates of the pair lying in
    H (possibly the empty sum)."""
    n = default_conductor(G, p) if conductor is None else conductor
    lhs = res_elt(idempotent_theorem(G, p, pair, n), H)
    HH = promote(H)
    rhs = PPElement.zero(HH, p, n)
    for hp in enumerate_pairs(HH, p):
        as_g = build_pair(G, p, hp.P.reparent(G), hp.lift)
        if pairs_conjugate(as_g, pair):
            rhs = rhs + idempotent_theorem(HH, p, hp, n)
    return equal_elements(lhs, rhs)


def verify_induction(G: FiniteGroup, p: int, H: Subgroup, hpair: SpeciesPair,
                     conductor: int | None = None) -> bool:
    """Check that inducing the H-idempotent of a pair up to G gives the
    G-idempotent scaled by the stabilizer index |N_G(Q,t) : N_H(Q,t)|."""
    n = default_conductor(G, p) if conductor is None else conductor
    HH = promote(H)
    if hpair.group != HH:
        raise GroupMismatch("pair does not live over the subgroup")
    lhs = ind_elt(idempotent_theorem(HH, p, hpair, n), G)
    as_g = build_pair(G, p, hpair.P.reparent(G), hpair.lift)
    big = as_g.stabilizer
    small = big.element_set & H.element_set
    c = Fraction(big.order, len(small))
    rep = next(q for q in enumerate_pairs(G, p) if pairs_conjugate(q, as_g))
    rhs = idempotent_theorem(G, p, rep, n).scale(c)
    return equal_elements(lhs, rhs)


def verify_E_decomposition(H: FiniteGroup, p: int,
                           conductor: int | None = None) -> bool:
    """For a group with normal Sylow p-subgroup P and cyclic quotient, check
    that the linearized top Burnside idempotent has species vector equal to
    the indicator of the pairs (P, t) with t generating the quotient."""
    n = default_conductor(H, p) if conductor is None else conductor
    P = sylow(H, p)
    if not P.is_normal():
        raise ShapeMismatch("the Sylow p-subgroup is not normal")
    C = quotient(H, P).group
    if not any(x.order() == C.order for x in C.elements):
        raise ShapeMismatch("quotient is not cyclic")
    E = top_E(H, p, n)
    vec = species_vector(E)
    for q, v in vec:
        expected = 1 if q.ps.order == H.order else 0
        if v != Cyclotomic.from_rational(n, expected):
            return False
    return True


def partition_of_unity(G: FiniteGroup, p: int,
                       conductor: int | None = None) -> bool:
    """The idempotents over all pairs sum to the class of the trivial module
    (all-ones species vector)."""
    n = default_conductor(G, p) if conductor is None else conductor
    total = PPElement.zero(G, p, n)
    for pair in enumerate_pairs(G, p):
        total = total + idempotent_theorem(G, p, pair, n)
    return equal_elements(total, PPElement.one(G, p, n))
