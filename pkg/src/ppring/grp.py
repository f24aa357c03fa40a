"""Finite permutation-group engine.

Groups are fully enumerated permutation groups on ``{0..degree-1}``.  Every
operation is brute force over the element list: at the scale this library
targets (orders up to a few hundred) exhaustive loops are fast, exactly
reproducible and easy to audit.  The canonical element order is lexicographic
on image tuples, and every "choose a representative" step picks the minimum
in that order, so all outputs are deterministic.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Optional, Sequence

DEFAULT_ORDER_CAP = 384


class GroupError(Exception):
    """Base class for errors raised by the group engine."""


class InvalidPermutation(GroupError):
    """Raised when an image array is not a bijection of {0..d-1}."""


class OrderCapExceeded(GroupError):
    """Raised when a closure grows past the configured order cap."""


class NotNormal(GroupError):
    """Raised when a quotient is requested by a non-normal subgroup."""


class NotSubgroup(GroupError):
    """Raised when an expected subgroup relationship does not hold."""


class Permutation:
    """A bijection of {0..d-1} stored as its tuple of images.

    ``(a * b)(i) == a(b(i))`` (apply the right factor first), and the
    conjugate ``x.conj(g)`` is ``g^-1 * x * g``.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise InvalidPermutation(f"not a bijection of 0..{len(imgs) - 1}: {imgs!r}")
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(degree))
        for cycle in cycles:
            for point in cycle:
                if not (0 <= point < degree):
                    raise InvalidPermutation(f"point {point} outside 0..{degree - 1}")
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise InvalidPermutation("degree mismatch in product")
        imgs = self.images
        return Permutation(tuple(imgs[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> Permutation:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = Permutation.identity(self.degree)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self, g: Permutation) -> Permutation:
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated minimum-first, sorted."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            out.append(tuple(cycle))
        return tuple(sorted(out))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __le__(self, other: Permutation) -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def _close(degree: int, gens: Sequence[Permutation], max_order: int) -> tuple[Permutation, ...]:
    """Breadth-first closure of a generating set under products."""
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    gens = [g for g in gens if not g.is_identity()]
    if gens:
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = a * g
                    if b not in elements:
                        elements.add(b)
                        if len(elements) > max_order:
                            raise OrderCapExceeded(
                                f"closure exceeds the order cap {max_order}"
                            )
                        new.append(b)
            frontier = new
    return tuple(sorted(elements))


class FiniteGroup:
    """A fully enumerated permutation group on {0..degree-1}.

    Instances are immutable value objects: two groups compare equal iff they
    have the same degree and element set.  Build them through
    :func:`close_generators` or the named constructors; the constructor
    itself trusts that ``elements`` is closed.
    """

    __slots__ = ("degree", "generators", "elements", "element_set", "order", "_hash")

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self.element_set = frozenset(self.elements)
        self.order = len(self.elements)
        self._hash = hash((degree, self.elements))

    @property
    def identity(self) -> Permutation:
        return self.elements[0]  # the identity is lexicographically minimal

    def __contains__(self, x: Permutation) -> bool:
        return x in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def exponent(self) -> int:
        return math.lcm(*(x.order() for x in self.elements))

    def subgroup(self, elements: Iterable[Permutation], validate: bool = True) -> Subgroup:
        return Subgroup(self, elements, validate=validate)

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, [self.identity], validate=False)

    def full_subgroup(self) -> Subgroup:
        return Subgroup(self, self.elements, validate=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteGroup(degree={self.degree}, order={self.order})"


def close_generators(degree: int, gens: Sequence[Permutation],
                     max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Group generated by ``gens``, with deterministic element ordering."""
    if degree < 1:
        raise InvalidPermutation("degree must be at least 1")
    for g in gens:
        if not isinstance(g, Permutation):
            raise InvalidPermutation(f"not a permutation: {g!r}")
        if g.degree != degree:
            raise InvalidPermutation(f"generator degree {g.degree} != {degree}")
    return FiniteGroup(degree, gens, _close(degree, gens, max_order))


class Subgroup:
    """A subgroup of a :class:`FiniteGroup`, stored as its sorted element list.

    ``validate=False`` skips the closure check; internal callers use it when
    closure holds by construction (conjugates, intersections, closures).
    """

    __slots__ = ("parent", "elements", "element_set", "_hash", "_generators")

    def __init__(self, parent: FiniteGroup, elements: Iterable[Permutation],
                 validate: bool = True):
        self.parent = parent
        self.elements = tuple(sorted(set(elements)))
        self.element_set = frozenset(self.elements)
        self._generators: Optional[tuple[Permutation, ...]] = None
        if validate:
            if not self.elements:
                raise NotSubgroup("a subgroup cannot be empty")
            if not self.element_set <= parent.element_set:
                raise NotSubgroup("elements not contained in the parent group")
            if parent.identity not in self.element_set:
                raise NotSubgroup("identity missing")
            for a in self.elements:
                for b in self.elements:
                    if a * b not in self.element_set:
                        raise NotSubgroup(f"not closed under product: {a!r} * {b!r}")
            if parent.order % len(self.elements) != 0:
                raise NotSubgroup("order does not divide the parent order")
        self._hash = hash((parent, self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.parent.identity

    def __contains__(self, x: Permutation) -> bool:
        return x in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Canonical form: the tuple of image tuples of the sorted elements."""
        return tuple(x.images for x in self.elements)

    def generators(self) -> tuple[Permutation, ...]:
        """A small generating set, found greedily in canonical order."""
        if self._generators is None:
            gens: list[Permutation] = []
            closed = {self.identity}
            for x in self.elements:
                if x not in closed:
                    gens.append(x)
                    closed = set(_close(self.parent.degree, gens, self.order))
                    if len(closed) == self.order:
                        break
            self._generators = tuple(gens)
        return self._generators

    def conj(self, g: Permutation) -> Subgroup:
        """The conjugate subgroup g^-1 * H * g."""
        gi = g.inverse()
        return Subgroup(self.parent, [gi * x * g for x in self.elements],
                        validate=False)

    def conj_set(self, g: Permutation) -> frozenset:
        gi = g.inverse()
        return frozenset(gi * x * g for x in self.elements)

    def is_normal(self) -> bool:
        return all(self.conj_set(g) == self.element_set
                   for g in self.parent.generators)

    def contains_subgroup(self, other: Subgroup) -> bool:
        return other.element_set <= self.element_set

    def reparent(self, group: FiniteGroup) -> Subgroup:
        """The same element set viewed inside another (super)group."""
        if group.degree != self.parent.degree or not self.element_set <= group.element_set:
            raise NotSubgroup("element set does not embed in the target group")
        return Subgroup(group, self.elements, validate=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent == other.parent and self.elements == other.elements

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Subgroup) -> bool:
        return (self.order, self.key()) < (other.order, other.key())

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, gens={list(self.generators())!r})"


@lru_cache(maxsize=None)
def promote(H: Subgroup) -> FiniteGroup:
    """View a subgroup as a finite group in its own right (same degree)."""
    return FiniteGroup(H.parent.degree, H.generators(), H.elements)


@lru_cache(maxsize=None)
def mult_table(G: FiniteGroup) -> tuple[dict, tuple[tuple[int, ...], ...]]:
    """Index map and integer multiplication table of a group.

    Closures inside a fixed parent run on these indices, which avoids
    allocating permutation objects in the hottest loops (the identity sits
    at index 0 because it is lexicographically minimal).
    """
    index = {x: i for i, x in enumerate(G.elements)}
    table = tuple(tuple(index[a * b] for b in G.elements) for a in G.elements)
    return index, table


def close_indices(table: tuple[tuple[int, ...], ...], seed: Iterable[int]) -> frozenset:
    """Subgroup closure inside a parent group, on element indices."""
    gens = [i for i in seed if i != 0]
    closed = {0}
    frontier = [0]
    while frontier and gens:
        new = []
        for a in frontier:
            row = table[a]
            for g in gens:
                b = row[g]
                if b not in closed:
                    closed.add(b)
                    new.append(b)
        frontier = new
    return frozenset(closed)


def subgroup_closure(G: FiniteGroup, elements: Iterable[Permutation]) -> Subgroup:
    """The subgroup of G generated by ``elements``."""
    index, table = mult_table(G)
    closed = close_indices(table, [index[x] for x in elements])
    return Subgroup(G, [G.elements[i] for i in closed], validate=False)


def _is_p_element(x: Permutation, p: int) -> bool:
    n = x.order()
    while n % p == 0:
        n //= p
    return n == 1


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")


@lru_cache(maxsize=None)
def sylow(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup of G.

    Grows a p-subgroup P by locating a p-element of N_G(P) outside P until
    none exists.  This terminates at full p-part: if P is smaller than a
    Sylow subgroup S containing it, then N_S(P) > P supplies the next
    element.
    """
    _check_prime(p)
    P = G.trivial_subgroup()
    while True:
        N = normalizer(G, P)
        x = next(
            (y for y in N.elements if y not in P.element_set and _is_p_element(y, p)),
            None,
        )
        if x is None:
            return P
        P = subgroup_closure(G, P.elements + (x,))


def p_prime_part(G: FiniteGroup, x: Permutation, p: int) -> Permutation:
    """The p'-part of x: the power of x of order the p'-part of |x|."""
    _check_prime(p)
    if x not in G:
        raise NotSubgroup("element not in the group")
    n = x.order()
    a = 0
    m = n
    while m % p == 0:
        m //= p
        a += 1
    if a == 0:
        return x
    if m == 1:
        return G.identity
    return x ** (p ** a * pow(p ** a, -1, m))


@lru_cache(maxsize=None)
def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    if H.parent != G:
        raise NotSubgroup("subgroup belongs to a different group")
    target = H.element_set
    members = [g for g in G.elements if H.conj_set(g) == target]
    return Subgroup(G, members, validate=False)


@lru_cache(maxsize=None)
def centralizer(G: FiniteGroup, x: Permutation) -> Subgroup:
    if x not in G:
        raise NotSubgroup("element not in the group")
    return Subgroup(G, [g for g in G.elements if g * x == x * g], validate=False)


class QuotientGroup:
    """G/N realized as a permutation group on the left cosets of N.

    ``project`` maps a parent element to the coset permutation it induces;
    ``lift`` returns the minimal representative of the corresponding coset.
    """

    __slots__ = ("parent", "kernel", "cosets", "group", "_project", "_lift", "_hash")

    def __init__(self, parent: FiniteGroup, kernel: Subgroup):
        if kernel.parent != parent:
            raise NotSubgroup("kernel belongs to a different group")
        if not kernel.is_normal():
            raise NotNormal("kernel is not normal")
        self.parent = parent
        self.kernel = kernel

        coset_index: dict[Permutation, int] = {}
        reps: list[Permutation] = []
        for g in parent.elements:
            if g not in coset_index:
                idx = len(reps)
                reps.append(g)  # minimal in its coset: all smaller elements are assigned
                for nelt in kernel.elements:
                    coset_index[g * nelt] = idx
        self.cosets = tuple(reps)

        k = len(reps)
        project: dict[Permutation, Permutation] = {}
        images: set[Permutation] = set()
        for g in parent.elements:
            pi = Permutation(tuple(coset_index[g * reps[i]] for i in range(k)))
            project[g] = pi
            images.add(pi)
        gens = tuple(dict.fromkeys(project[g] for g in parent.generators))
        self.group = FiniteGroup(k, gens, images)
        assert self.group.order * kernel.order == parent.order
        self._project = project
        # coset index 0 is the kernel itself, so pi(0) recovers g's coset
        self._lift = {pi: reps[pi(0)] for pi in images}
        self._hash = hash((parent, kernel))

    def project(self, g: Permutation) -> Permutation:
        return self._project[g]

    def lift(self, q: Permutation) -> Permutation:
        return self._lift[q]

    def project_subgroup(self, H: Subgroup) -> Subgroup:
        """Image in the quotient of a subgroup of the parent."""
        return Subgroup(self.group, {self._project[h] for h in H.elements}, validate=False)

    def preimage(self, S: Subgroup) -> Subgroup:
        """Full preimage in the parent of a subgroup of the quotient."""
        if S.parent != self.group:
            raise NotSubgroup("subgroup does not live in the quotient group")
        members = [g for g in self.parent.elements if self._project[g] in S.element_set]
        return Subgroup(self.parent, members, validate=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientGroup):
            return NotImplemented
        return self.parent == other.parent and self.kernel == other.kernel

    def __hash__(self) -> int:
        return self._hash


@lru_cache(maxsize=None)
def quotient(G: FiniteGroup, N: Subgroup) -> QuotientGroup:
    return QuotientGroup(G, N)


@lru_cache(maxsize=None)
def coset_table(G: FiniteGroup, H: Subgroup) -> tuple[tuple[Permutation, ...], dict]:
    """Left-coset transversal of H in G (minimal reps) plus element -> rep map."""
    if H.parent != G:
        raise NotSubgroup("subgroup belongs to a different group")
    rep_of: dict[Permutation, Permutation] = {}
    reps: list[Permutation] = []
    for g in G.elements:
        if g not in rep_of:
            reps.append(g)
            for h in H.elements:
                rep_of[g * h] = g
    return tuple(reps), rep_of


def cosets(G: FiniteGroup, H: Subgroup) -> tuple[Permutation, ...]:
    return coset_table(G, H)[0]


def double_coset_reps(G: FiniteGroup, A: Subgroup, B: Subgroup) -> list[Permutation]:
    """One minimal representative per double coset A g B, in canonical order."""
    if A.parent != G or B.parent != G:
        raise NotSubgroup("subgroup belongs to a different group")
    covered: set[Permutation] = set()
    reps = []
    for g in G.elements:
        if g in covered:
            continue
        reps.append(g)
        for a in A.elements:
            ag = a * g
            for b in B.elements:
                covered.add(ag * b)
    return reps


def subgroup_conjugacy(G: FiniteGroup, H1: Subgroup, H2: Subgroup) -> Optional[Permutation]:
    """Some g with H1^g = H2, or None. Brute force over G."""
    if H1.order != H2.order:
        return None
    target = H2.element_set
    for g in G.elements:
        if H1.conj_set(g) == target:
            return g
    return None


@lru_cache(maxsize=None)
def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[Permutation, ...], ...]:
    """Element conjugacy classes, each sorted, ordered by minimal member."""
    inverses = {g: g.inverse() for g in G.elements}
    seen: set[Permutation] = set()
    classes = []
    for x in G.elements:
        if x in seen:
            continue
        cls = sorted({inverses[g] * x * g for g in G.elements})
        seen.update(cls)
        classes.append(tuple(cls))
    return tuple(classes)


# ---------------------------------------------------------------------------
# named constructors


def cyclic(n: int, max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    gen = Permutation(tuple((i + 1) % n for i in range(n)))
    return close_generators(n, [gen] if n > 1 else [], max_order)


def symmetric(n: int, max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError("symmetric groups supported for 1 <= n <= 5")
    if n == 1:
        return close_generators(1, [], max_order)
    gens = [Permutation.from_cycles(n, [(0, 1)]),
            Permutation.from_cycles(n, [tuple(range(n))])]
    return close_generators(n, gens, max_order)


def alternating(n: int, max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError("alternating groups supported for 1 <= n <= 5")
    if n <= 2:
        return close_generators(n, [], max_order)
    if n == 3:
        gens = [Permutation.from_cycles(3, [(0, 1, 2)])]
    elif n % 2 == 1:
        gens = [Permutation.from_cycles(n, [(0, 1, 2)]),
                Permutation.from_cycles(n, [tuple(range(n))])]
    else:
        gens = [Permutation.from_cycles(n, [(0, 1, 2)]),
                Permutation.from_cycles(n, [tuple(range(1, n))])]
    return close_generators(n, gens, max_order)


def dihedral(order: int, max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Dihedral group of the given (even) order."""
    if order < 2 or order % 2 != 0:
        raise ValueError("dihedral order must be even and at least 2")
    n = order // 2
    if n == 1:
        return cyclic(2, max_order)
    if n == 2:
        return direct_product(cyclic(2), cyclic(2), max_order)
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    flip = Permutation(tuple(n - 1 - i for i in range(n)))
    return close_generators(n, [rot, flip], max_order)


def quaternion8(max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    # regular action on {1, i, -1, -i, j, k, -j, -k}
    i = Permutation.from_cycles(8, [(0, 1, 2, 3), (4, 5, 6, 7)])
    j = Permutation.from_cycles(8, [(0, 4, 2, 6), (1, 7, 3, 5)])
    return close_generators(8, [i, j], max_order)


def klein_four(max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2), max_order)


def direct_product(G: FiniteGroup, H: FiniteGroup,
                   max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    d = G.degree + H.degree
    gens = [Permutation(g.images + tuple(range(G.degree, d))) for g in G.generators]
    gens += [Permutation(tuple(range(G.degree)) + tuple(G.degree + i for i in h.images))
             for h in H.generators]
    return close_generators(d, gens, max_order)
