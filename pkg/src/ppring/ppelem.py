"""Elements of the (scalar-extended) p-permutation ring.

An element is a formal cyclotomic-linear combination of monomial generators:
classes of modules induced from one-dimensional characters of subgroups,
``Ind_L^G k_{L,chi}`` with chi a linear character of p'-order.  The spanning
set is closed under restriction, induction, inflation, tensor product and
the Brauer morphism, which are all implemented here by explicit double-coset
(Mackey) expansions.

Generators are kept in canonical form: the pair (subgroup, character) is
normalized to its minimal conjugate, so collecting terms is a dictionary
merge.  Equality of elements is *not* term-wise (the generators only span);
use :func:`ppring.species.equal_elements`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Union

from .cyclo import Cyclotomic, ConductorMismatch, zeta_power
from .grp import (FiniteGroup, NotNormal, NotSubgroup, Permutation, QuotientGroup,
                  Subgroup, double_coset_reps, normalizer, promote, quotient)

Scalar = Union[int, Fraction, Cyclotomic]


class GroupMismatch(Exception):
    """Raised when combining elements over different groups."""


class QuotientMismatch(Exception):
    """Raised when inflating an element that does not live over the quotient."""


class NotPGroup(Exception):
    """Raised when the Brauer morphism is taken at a non-p-subgroup."""


class BadIndex(Exception):
    """Raised for a character index outside the valid range."""


def default_conductor(G: FiniteGroup, p: int) -> int:
    """The p'-part of the exponent of G: all character values live in Q(zeta_n)."""
    n = G.exponent()
    while n % p == 0:
        n //= p
    return n


class LinChar:
    """A linear character of a subgroup with values in mu_n, stored as exponents.

    The table maps each element x of the domain to e(x) with chi(x) =
    zeta_n^e(x).  When the conductor n is prime to p, the homomorphism
    property forces every p-element to exponent 0, which keeps the class
    closed under the whole calculus.
    """

    __slots__ = ("domain", "exps", "conductor", "_table", "_hash")

    def __init__(self, domain: Subgroup, exps: Mapping[Permutation, int],
                 conductor: int, validate: bool = True):
        self.domain = domain
        self.conductor = conductor
        self.exps = {x: exps[x] % conductor for x in domain.elements}
        if validate:
            if set(exps) != set(domain.elements):
                raise ValueError("character table does not match the domain")
            for a in domain.elements:
                for b in domain.elements:
                    if (self.exps[a] + self.exps[b]) % conductor != self.exps[a * b]:
                        raise ValueError("table is not a homomorphism")
        self._table = tuple(self.exps[x] for x in domain.elements)
        self._hash = hash((domain, self._table, conductor))

    @classmethod
    def trivial(cls, domain: Subgroup, conductor: int) -> LinChar:
        return cls(domain, {x: 0 for x in domain.elements}, conductor, validate=False)

    def table(self) -> tuple[int, ...]:
        """Exponents aligned with the sorted element list of the domain."""
        return self._table

    def value(self, x: Permutation) -> int:
        return self.exps[x]

    def cyclo_value(self, x: Permutation) -> Cyclotomic:
        return zeta_power(self.conductor, self.exps[x])

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self._table)

    def restrict(self, sub: Subgroup) -> LinChar:
        if not sub.element_set <= self.domain.element_set:
            raise NotSubgroup("restriction target is not contained in the domain")
        return LinChar(sub, {x: self.exps[x] for x in sub.elements},
                       self.conductor, validate=False)

    def conj(self, g: Permutation) -> LinChar:
        """The character on domain^g sending x to chi(g x g^-1)."""
        dom = self.domain.conj(g)
        gi = g.inverse()
        return LinChar(dom, {gi * x * g: e for x, e in self.exps.items()},
                       self.conductor, validate=False)

    def __mul__(self, other: LinChar) -> LinChar:
        if other.domain != self.domain:
            raise GroupMismatch("character domains differ")
        if other.conductor != self.conductor:
            raise ConductorMismatch("character conductors differ")
        return LinChar(self.domain,
                       {x: self.exps[x] + other.exps[x] for x in self.domain.elements},
                       self.conductor, validate=False)

    def reparent(self, sub: Subgroup) -> LinChar:
        """The same table on the same element set inside another parent group."""
        if sub.element_set != self.domain.element_set:
            raise NotSubgroup("reparent target has a different element set")
        return LinChar(sub, self.exps, self.conductor, validate=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinChar):
            return NotImplemented
        return (self.domain == other.domain and self._table == other._table
                and self.conductor == other.conductor)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"LinChar(order={self.domain.order}, exps={self._table}, n={self.conductor})"


def linear_characters(L: Subgroup, conductor: int) -> tuple[LinChar, ...]:
    """All linear characters of L with values in mu_conductor.

    Characters are built by assigning admissible exponents to a generating
    set and propagating along products; inconsistent assignments are
    discarded.
    """
    n = conductor
    gens = L.generators()
    if not gens:
        return (LinChar.trivial(L, n),)
    choices = []
    for g in gens:
        d = math.gcd(n, g.order())
        choices.append([(n // d) * k for k in range(d)])
    out = []
    for assignment in product(*choices):
        table = {L.identity: 0}
        frontier = [L.identity]
        ok = True
        while frontier and ok:
            new = []
            for x in frontier:
                for g, e in zip(gens, assignment):
                    y = x * g
                    ey = (table[x] + e) % n
                    if y in table:
                        if table[y] != ey:
                            ok = False
                            break
                    else:
                        table[y] = ey
                        new.append(y)
                if not ok:
                    break
            frontier = new
        if not ok or len(table) != L.order:
            continue
        try:
            out.append(LinChar(L, table, n, validate=True))
        except ValueError:
            continue
    return tuple(sorted(out, key=lambda c: c.table()))


class Generator:
    """The class of the module induced from a linear character of a subgroup.

    Instances are always in canonical form; build them with
    :func:`make_generator`, which conjugates (subgroup, character) to the
    minimal representative.
    """

    __slots__ = ("group", "subgroup", "character", "_hash")

    def __init__(self, group: FiniteGroup, subgroup: Subgroup, character: LinChar):
        self.group = group
        self.subgroup = subgroup
        self.character = character
        self._hash = hash((group, subgroup, character))

    @property
    def dimension(self) -> int:
        return self.group.order // self.subgroup.order

    def sort_key(self):
        return (self.subgroup.order, self.subgroup.key(), self.character.table())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Generator):
            return NotImplemented
        return (self.group == other.group and self.subgroup == other.subgroup
                and self.character == other.character)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        tag = "triv" if self.character.is_trivial() else self.character.table()
        return f"gen(|L|={self.subgroup.order}, chi={tag})"


@lru_cache(maxsize=None)
def make_generator(group: FiniteGroup, subgroup: Subgroup, character: LinChar) -> Generator:
    """Canonical generator: minimize (subgroup, character) over conjugation."""
    if subgroup.parent != group:
        raise GroupMismatch("subgroup does not live in the given group")
    if character.domain != subgroup:
        raise GroupMismatch("character domain differs from the subgroup")
    best = None
    best_key = None
    for g in group.elements:
        gi = g.inverse()
        moved = {gi * x * g: e for x, e in character.exps.items()}
        sub = Subgroup(group, moved.keys(), validate=False)
        table = tuple(moved[x] for x in sub.elements)
        key = (sub.key(), table)
        if best_key is None or key < best_key:
            best_key = key
            best = (sub, moved)
    sub, moved = best
    return Generator(group, sub,
                     LinChar(sub, moved, character.conductor, validate=False))


class PPElement:
    """A formal cyclotomic-linear combination of canonical generators."""

    __slots__ = ("group", "p", "conductor", "terms")

    def __init__(self, group: FiniteGroup, p: int, conductor: int,
                 terms: Mapping[Generator, Cyclotomic] | None = None):
        if conductor % p == 0:
            raise ValueError("conductor must be prime to p")
        self.group = group
        self.p = p
        self.conductor = conductor
        clean: dict[Generator, Cyclotomic] = {}
        for gen, coeff in (terms or {}).items():
            if gen.group != group:
                raise GroupMismatch("term over a different group")
            if gen.character.conductor != conductor or coeff.conductor != conductor:
                raise ConductorMismatch("term at a different conductor")
            if not coeff.is_zero():
                clean[gen] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, group: FiniteGroup, p: int, conductor: int) -> PPElement:
        return cls(group, p, conductor)

    @classmethod
    def one(cls, group: FiniteGroup, p: int, conductor: int) -> PPElement:
        """The class of the trivial module."""
        L = group.full_subgroup()
        gen = make_generator(group, L, LinChar.trivial(L, conductor))
        return cls(group, p, conductor, {gen: Cyclotomic.one(conductor)})

    @classmethod
    def from_generator(cls, p: int, gen: Generator,
                       coeff: Scalar = 1) -> PPElement:
        n = gen.character.conductor
        return cls(gen.group, p, n, {gen: _as_cyclo(coeff, n)})

    def _compatible(self, other: PPElement) -> None:
        if self.group != other.group or self.p != other.p:
            raise GroupMismatch("elements live over different groups")
        if self.conductor != other.conductor:
            raise ConductorMismatch("elements at different conductors")

    def __add__(self, other: PPElement) -> PPElement:
        self._compatible(other)
        terms = dict(self.terms)
        for gen, coeff in other.terms.items():
            terms[gen] = terms.get(gen, Cyclotomic.zero(self.conductor)) + coeff
        return PPElement(self.group, self.p, self.conductor, terms)

    def __neg__(self) -> PPElement:
        return self.scale(-1)

    def __sub__(self, other: PPElement) -> PPElement:
        return self + (-other)

    def scale(self, c: Scalar) -> PPElement:
        c = _as_cyclo(c, self.conductor)
        return PPElement(self.group, self.p, self.conductor,
                         {gen: coeff * c for gen, coeff in self.terms.items()})

    def is_zero_formal(self) -> bool:
        """True when no terms remain (sufficient, not necessary, for zero)."""
        return not self.terms

    def sorted_terms(self) -> list[tuple[Generator, Cyclotomic]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self) -> str:
        if not self.terms:
            return "PPElement(0)"
        body = " + ".join(f"({coeff})*{gen!r}" for gen, coeff in self.sorted_terms())
        return f"PPElement({body})"

    def to_json(self) -> list[dict]:
        out = []
        for gen, coeff in self.sorted_terms():
            sub = gen.subgroup
            index = {x: i for i, x in enumerate(sub.elements)}
            out.append({
                "subgroup": [list(g.images) for g in sub.generators()],
                "character": {str(index[x]): e for x, e in
                              sorted(gen.character.exps.items(),
                                     key=lambda kv: index[kv[0]])},
                "coeff": coeff.to_json(),
            })
        return out


def _as_cyclo(c: Scalar, n: int) -> Cyclotomic:
    if isinstance(c, Cyclotomic):
        if c.conductor != n:
            raise ConductorMismatch("scalar at a different conductor")
        return c
    return Cyclotomic.from_rational(n, c)


# ---------------------------------------------------------------------------
# the calculus on generators


def char_pullback(H: FiniteGroup, P: Subgroup, s_lift: Permutation, j: int,
                  L: Subgroup, conductor: int) -> LinChar:
    """Restriction to L of the j-th power character of H/P pulled back to H.

    H must have normal subgroup P with cyclic quotient generated by the
    image of ``s_lift``; the resulting character sends x to
    zeta_r^(j*a(x)) where the image of x is the a(x)-th power of the image
    of ``s_lift``, embedded at the given conductor.
    """
    Q = quotient(H, P)
    sbar = Q.project(s_lift)
    r = sbar.order()
    if r != Q.group.order:
        raise NotNormal("quotient is not cyclic generated by the image of the lift")
    if not 0 <= j < max(r, 1):
        raise BadIndex(f"character index {j} outside 0..{r - 1}")
    if conductor % r != 0:
        raise ConductorMismatch("lift order does not divide the conductor")
    dlog = {}
    power = Q.group.identity
    for a in range(r):
        dlog[power] = a
        power = power * sbar
    step = conductor // r
    exps = {x: (j * dlog[Q.project(x)] * step) % conductor for x in L.elements}
    return LinChar(L, exps, conductor, validate=False)


def res_elt(x: PPElement, H: Subgroup) -> PPElement:
    """Restriction to H, by the Mackey double-coset expansion."""
    if H.parent != x.group:
        raise GroupMismatch("subgroup does not live in the element's group")
    G = x.group
    HH = promote(H)
    out = PPElement.zero(HH, x.p, x.conductor)
    for gen, coeff in x.terms.items():
        L = gen.subgroup
        terms: dict[Generator, Cyclotomic] = {}
        for g in double_coset_reps(G, H, L):
            gi = g.inverse()
            conj_set = frozenset(y.conj(gi) for y in L.elements)  # g L g^-1
            inter = Subgroup(HH, H.element_set & conj_set, validate=False)
            chi = gen.character.conj(gi).restrict(inter)
            new = make_generator(HH, inter, chi)
            terms[new] = terms.get(new, Cyclotomic.zero(x.conductor)) + coeff
        out = out + PPElement(HH, x.p, x.conductor, terms)
    return out


def ind_elt(x: PPElement, G: FiniteGroup) -> PPElement:
    """Induction to G: by transitivity a generator just changes ambient group."""
    if G.degree != x.group.degree or not x.group.element_set <= G.element_set:
        raise NotSubgroup("the element's group is not a subgroup of the target")
    terms: dict[Generator, Cyclotomic] = {}
    for gen, coeff in x.terms.items():
        sub = gen.subgroup.reparent(G)
        new = make_generator(G, sub, gen.character.reparent(sub))
        terms[new] = terms.get(new, Cyclotomic.zero(x.conductor)) + coeff
    return PPElement(G, x.p, x.conductor, terms)


def inf_elt(x: PPElement, Q: QuotientGroup) -> PPElement:
    """Inflation along the quotient map Q.parent -> Q.group."""
    if x.group != Q.group:
        raise QuotientMismatch("element does not live over the quotient group")
    G = Q.parent
    terms: dict[Generator, Cyclotomic] = {}
    for gen, coeff in x.terms.items():
        pre = Q.preimage(gen.subgroup)
        exps = {g: gen.character.value(Q.project(g)) for g in pre.elements}
        chi = LinChar(pre, exps, x.conductor, validate=False)
        new = make_generator(G, pre, chi)
        terms[new] = terms.get(new, Cyclotomic.zero(x.conductor)) + coeff
    return PPElement(G, x.p, x.conductor, terms)


def tensor_elt(x: PPElement, y: PPElement) -> PPElement:
    """Tensor product, bilinear over the Mackey expansion of a generator pair."""
    x._compatible(y)
    G = x.group
    n = x.conductor
    out: dict[Generator, Cyclotomic] = {}
    for genx, cx in x.terms.items():
        A, alpha = genx.subgroup, genx.character
        for geny, cy in y.terms.items():
            B, beta = geny.subgroup, geny.character
            c = cx * cy
            for g in double_coset_reps(G, A, B):
                gi = g.inverse()
                conj_set = frozenset(b.conj(gi) for b in B.elements)  # g B g^-1
                inter = Subgroup(G, A.element_set & conj_set, validate=False)
                chi = alpha.restrict(inter) * beta.conj(gi).restrict(inter)
                new = make_generator(G, inter, chi)
                out[new] = out.get(new, Cyclotomic.zero(n)) + c
    return PPElement(G, x.p, n, out)


def brauer_elt(x: PPElement, P: Subgroup) -> PPElement:
    """The Brauer morphism at a p-subgroup P, landing over N_G(P)/P.

    First restrict to N_G(P) so that P is normal; then a generator (L, chi)
    survives exactly when P <= L, in which case it maps to (L/P, chi
    transported), since chi is automatically trivial on the p-group P.
    For the trivial P the element is returned unchanged.
    """
    if P.parent != x.group:
        raise GroupMismatch("subgroup does not live in the element's group")
    if not _is_p_power(P.order, x.p):
        raise NotPGroup(f"subgroup order {P.order} is not a power of {x.p}")
    if P.order == 1:
        return x
    N = normalizer(x.group, P)
    y = res_elt(x, N)
    H = promote(N)
    Q = quotient(H, P.reparent(H))
    n = x.conductor
    terms: dict[Generator, Cyclotomic] = {}
    for gen, coeff in y.terms.items():
        L = gen.subgroup
        if not P.element_set <= L.element_set:
            continue
        Lbar = Q.project_subgroup(L)
        exps = {Q.project(l): gen.character.value(l) for l in L.elements}
        chi = LinChar(Lbar, exps, n, validate=False)
        new = make_generator(Q.group, Lbar, chi)
        terms[new] = terms.get(new, Cyclotomic.zero(n)) + coeff
    return PPElement(Q.group, x.p, n, terms)


def _is_p_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1
