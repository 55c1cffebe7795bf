"""
Gröbner bases of homogeneous ideals.

Buchberger's algorithm with the normal selection strategy and the
Gebauer-Möller pair update, plus the derived operations built on it:
elimination, kernels of ring maps, ideal intersection and partial
elimination ideals.
"""

import heapq
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .fields import FieldElement
from .polynomial import (
    Monomial,
    MonomialOrder,
    Polynomial,
    Ring,
    divides,
    lift_to,
    mono_div,
    mono_lcm,
    mono_mul,
)

logger = logging.getLogger(__name__)


class KernelCheckError(RuntimeError):
    """Raised when a computed kernel fails to vanish on the map's images."""
    pass


class Ideal:
    """
    Homogeneous ideal given by generators in a declared ring.

    Gröbner bases are cached per (order, degree bound); the ideal itself is
    treated as immutable.
    """

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()):
        gens: List[Polynomial] = []
        for g in generators:
            if g.ring.nvars != ring.nvars or g.ring.field != ring.field:
                raise ValueError(
                    f"Generator {g} does not live in a ring with {ring.nvars} variables over {ring.field}"
                )
            if g.ring != ring:
                g = g.change_ring(ring)
            if g.is_zero:
                continue
            if not g.is_homogeneous:
                raise ValueError(f"Ideal generators must be homogeneous: {g}")
            gens.append(g)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._bases: Dict[Tuple[MonomialOrder, Optional[int]], List[Polynomial]] = {}

    # -- basic queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.ring, self.generators))

    def __repr__(self) -> str:
        return f"Ideal({len(self.generators)} generators in {self.ring.nvars} variables over {self.ring.field})"

    def with_ring(self, ring: Ring) -> 'Ideal':
        return Ideal(ring, [g.change_ring(ring) for g in self.generators])

    # -- Gröbner machinery --------------------------------------------------

    def groebner_basis(
        self,
        order: Optional[MonomialOrder] = None,
        degree_bound: Optional[int] = None
    ) -> List[Polynomial]:
        """Reduced Gröbner basis under ``order`` (default: the ring's order)."""
        order = order or self.ring.order
        cache_key = (order, degree_bound)
        if cache_key not in self._bases:
            ring = self.ring if order == self.ring.order else self.ring.with_order(order)
            gens = [g.change_ring(ring) for g in self.generators]
            self._bases[cache_key] = groebner_basis(gens, degree_bound=degree_bound)
        return self._bases[cache_key]

    def normal_form(self, f: Polynomial) -> Polynomial:
        basis = self.groebner_basis()
        if f.ring != self.ring:
            f = f.change_ring(self.ring)
        return reduce_polynomial(f, basis)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero

    def contains_ideal(self, other: 'Ideal') -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_ideal(self, other: 'Ideal') -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    @property
    def is_unit(self) -> bool:
        return any(g.is_constant for g in self.groebner_basis())

    def leading_monomials(self) -> List[Monomial]:
        return [g.lm for g in self.groebner_basis()]

    def verify_basis(self) -> bool:
        """Mutual reduction check: basis and generators span the same ideal."""
        basis = self.groebner_basis()
        if not all(reduce_polynomial(g, basis).is_zero for g in self.generators):
            return False
        return is_groebner_basis(basis)

    def quadric_part(self) -> 'Ideal':
        """The ideal generated by all elements of degree at most 2."""
        basis = self.groebner_basis(MonomialOrder.grevlex(), degree_bound=2)
        return Ideal(self.ring, [g.change_ring(self.ring) for g in basis if g.degree <= 2])

    def minimal_generators(self) -> List[Polynomial]:
        """
        A minimal homogeneous generating set.

        The given generators, then the reduced basis elements, are scanned by
        degree; a candidate is kept when it is not in the ideal generated by
        those kept before it.
        """
        pool = [g for g in self.generators]
        pool += [g.change_ring(self.ring) for g in self.groebner_basis()]
        pool.sort(key=lambda g: g.degree)
        kept: List[Polynomial] = []
        reducer: List[Polynomial] = []
        current_degree: Optional[int] = None
        dirty = False
        for g in pool:
            if dirty or g.degree != current_degree:
                reducer = groebner_basis(kept, degree_bound=g.degree) if kept else []
                current_degree = g.degree
                dirty = False
            if reducer and reduce_polynomial(g, reducer).is_zero:
                continue
            kept.append(g)
            dirty = True
        return kept


# -- S-polynomials and reduction --------------------------------------------

def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    The S-polynomial of f and g; their leading terms cancel.

    Raises:
        ValueError: if either input is zero
    """
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial of the zero polynomial")
    f._check(g)
    fld = f.ring.field
    lcm = mono_lcm(f.lm, g.lm)
    left = f.mul_term(mono_div(lcm, f.lm), fld.inv(f.lc))
    right = g.mul_term(mono_div(lcm, g.lm), fld.inv(g.lc))
    return left - right


def reduce_polynomial(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """
    Full normal form of f with respect to ``basis``.

    No term of the result is divisible by a leading monomial of the basis.
    The first divisor in list order is always used.
    """
    if f.is_zero or not basis:
        return f
    ring = f.ring
    fld = ring.field
    key = ring.key
    reducers = [(g.lm, fld.inv(g.lc), [(m, c) for m, c in g.coeffs.items() if m != g.lm])
                for g in basis if not g.is_zero]

    work: Dict[Monomial, FieldElement] = dict(f.coeffs)
    heap = [tuple(-v for v in key(m)) + (m,) for m in work]  # type: ignore[operator]
    heapq.heapify(heap)
    remainder: Dict[Monomial, FieldElement] = {}

    while heap:
        entry = heapq.heappop(heap)
        m = entry[-1]
        c = work.pop(m, None)
        if c is None:
            continue
        for lm, lc_inv, tail in reducers:
            if divides(lm, m):
                factor = fld.mul(c, lc_inv)
                shift = mono_div(m, lm)
                for tm, tc in tail:
                    nm = mono_mul(tm, shift)
                    delta = fld.mul(factor, tc)
                    if nm in work:
                        value = fld.sub(work[nm], delta)
                        if value:
                            work[nm] = value
                        else:
                            del work[nm]
                    else:
                        work[nm] = fld.neg(delta)
                        heapq.heappush(heap, tuple(-v for v in key(nm)) + (nm,))  # type: ignore[arg-type]
                break
        else:
            remainder[m] = c
    return Polynomial(ring, remainder, normalized=True)


def normal_form(f: Polynomial, ideal: Ideal) -> Polynomial:
    """Remainder of f modulo the reduced Gröbner basis of the ideal (computed on demand)."""
    return ideal.normal_form(f)


# -- Buchberger -------------------------------------------------------------

def _update(
    lms: List[Monomial],
    pairs: Set[Tuple[int, int]],
    new_lm: Monomial,
    key: object
) -> Tuple[Set[Tuple[int, int]], List[Tuple[int, int]]]:
    """Gebauer-Möller update when a basis element with leading monomial new_lm is added."""
    n = len(lms)
    kept = {
        (i, j) for (i, j) in pairs
        if not divides(new_lm, mono_lcm(lms[i], lms[j]))
        or mono_lcm(lms[i], lms[j]) == mono_lcm(lms[i], new_lm)
        or mono_lcm(lms[i], lms[j]) == mono_lcm(lms[j], new_lm)
    }
    by_lcm: Dict[Monomial, List[int]] = {}
    for i in range(n):
        by_lcm.setdefault(mono_lcm(lms[i], new_lm), []).append(i)
    minimal: List[Monomial] = []
    for L in sorted(by_lcm, key=key):  # type: ignore[arg-type]
        if all(not divides(L_, L) for L_ in minimal):
            minimal.append(L)
    added = []
    for L in minimal:
        # Buchberger's first criterion: coprime leading monomials need no pair.
        if not any(mono_lcm(lms[i], new_lm) == mono_mul(lms[i], new_lm) for i in by_lcm[L]):
            added.append((min(by_lcm[L]), n))
    return kept, added


def _minimalize(basis: List[Polynomial]) -> List[Polynomial]:
    if not basis:
        return []
    key = basis[0].ring.key
    kept: List[Polynomial] = []
    for f in sorted(basis, key=lambda h: key(h.lm)):
        if all(not divides(g.lm, f.lm) for g in kept):
            kept.append(f)
    return kept


def _interreduce(basis: List[Polynomial]) -> List[Polynomial]:
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        reduced.append(reduce_polynomial(g, others).monic())
    return reduced


def groebner_basis(
    polys: Sequence[Polynomial],
    degree_bound: Optional[int] = None
) -> List[Polynomial]:
    """
    Reduced, monic Gröbner basis of the homogeneous polynomials ``polys``.

    Work proceeds degree by degree (weighted by the ring). Pairs are chosen by
    smallest lcm degree, ties broken by pair indices. With ``degree_bound``
    the computation stops after that degree and the result is a Gröbner
    basis in degrees up to the bound only. The result is sorted ascending in
    the monomial order.
    """
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        return []
    ring = polys[0].ring
    key = ring.key
    degree_of = ring.weighted_degree

    pending = sorted(polys, key=lambda p: (p.degree, key(p.lm)))
    basis: List[Polynomial] = []
    lms: List[Monomial] = []
    pairs: Set[Tuple[int, int]] = set()
    pair_heap: List[Tuple[int, int, int]] = []
    reductions = 0

    def add(h: Polynomial) -> None:
        nonlocal pairs
        h = h.monic()
        pairs, added = _update(lms, pairs, h.lm, key)
        basis.append(h)
        lms.append(h.lm)
        for i, j in added:
            pairs.add((i, j))
            heapq.heappush(pair_heap, (degree_of(mono_lcm(lms[i], lms[j])), i, j))

    gen_index = 0
    while gen_index < len(pending) or pairs:
        while pair_heap and (pair_heap[0][1], pair_heap[0][2]) not in pairs:
            heapq.heappop(pair_heap)
        next_pair_degree = pair_heap[0][0] if pair_heap else None
        next_gen_degree = pending[gen_index].degree if gen_index < len(pending) else None
        if next_gen_degree is not None and (next_pair_degree is None or next_gen_degree <= next_pair_degree):
            if degree_bound is not None and next_gen_degree > degree_bound:
                break
            h = reduce_polynomial(pending[gen_index], basis)
            gen_index += 1
        else:
            if next_pair_degree is None:
                break
            if degree_bound is not None and next_pair_degree > degree_bound:
                break
            _, i, j = heapq.heappop(pair_heap)
            pairs.discard((i, j))
            h = reduce_polynomial(s_polynomial(basis[i], basis[j]), basis)
            reductions += 1
        if not h.is_zero:
            add(h)

    logger.debug(
        f"Buchberger: {len(basis)} elements after {reductions} pair reductions "
        f"({ring.nvars} variables, order {ring.order})"
    )
    result = _interreduce(_minimalize(basis))
    result.sort(key=lambda g: key(g.lm))
    return result


def buchberger(
    ideal: Ideal,
    order: Optional[MonomialOrder] = None,
    degree_bound: Optional[int] = None
) -> Ideal:
    """
    Compute the reduced Gröbner basis of an ideal under ``order``.

    Returns the ideal presented in the ring with that order, generated by its
    reduced basis, with the basis cached.
    """
    order = order or ideal.ring.order
    basis = ideal.groebner_basis(order, degree_bound)
    ring = ideal.ring.with_order(order)
    result = Ideal(ring, basis)
    result._bases[(order, degree_bound)] = list(result.generators)
    return result


def is_groebner_basis(basis: Sequence[Polynomial]) -> bool:
    """True when every S-polynomial of basis pairs reduces to zero."""
    items = [g for g in basis if not g.is_zero]
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            if not reduce_polynomial(s_polynomial(items[a], items[b]), items).is_zero:
                return False
    return True


# -- elimination and friends ------------------------------------------------

def eliminate(ideal: Ideal, k: int, degree_bound: Optional[int] = None) -> Ideal:
    """
    I ∩ k[x_k, ..., x_{n-1}], presented in a ring with the first k variables removed.

    The survivors keep their weights and are renumbered from x0. With
    ``degree_bound`` only the part of the intersection up to that weighted
    degree is guaranteed.
    """
    if k == 0:
        return ideal
    ring = ideal.ring
    if not 0 < k < ring.nvars:
        raise ValueError(f"Cannot eliminate {k} of {ring.nvars} variables")
    basis = ideal.groebner_basis(MonomialOrder.elimination(k), degree_bound)
    small = Ring(ring.nvars - k, ring.field, MonomialOrder.grevlex(), (ring.weights or ())[k:])
    kept = []
    for g in basis:
        if any(any(m[:k]) for m in g.coeffs):
            continue
        kept.append(Polynomial(small, {m[k:]: c for m, c in g.coeffs.items()}, normalized=True))
    logger.debug(f"Eliminated {k} variables: {len(basis)} basis elements, {len(kept)} survive")
    return Ideal(small, kept)


def kernel_of_ring_map(
    ring: Ring,
    images: Sequence[Polynomial],
    relations: Sequence[Polynomial] = (),
    degree_bound: Optional[int] = None
) -> Ideal:
    """
    Homogeneous ideal of relations among ``images``.

    ``ring`` is the parameter ring the images live in; ``relations`` optionally
    cut the parameter space (the map then starts from ring/relations). The
    result lives in a standard grevlex ring with one variable per image and
    is checked to vanish on the images every time. ``degree_bound`` truncates
    the kernel: every relation of degree up to the bound is in the result.

    Raises:
        ValueError: images of different degrees or zero images
        KernelCheckError: a kernel element does not vanish on the images
    """
    if not images:
        raise ValueError("A ring map needs at least one image")
    degrees = {img.degree for img in images}
    if any(img.is_zero for img in images) or any(not img.is_homogeneous for img in images):
        raise ValueError("Images must be nonzero homogeneous forms")
    if len(degrees) != 1:
        raise ValueError(f"Images have mixed degrees {sorted(degrees)}")
    d = degrees.pop()
    n, m = ring.nvars, len(images)
    graph = Ring(
        n + m,
        ring.field,
        MonomialOrder.elimination(n),
        tuple(ring.weights or (1,) * n) + (d,) * m,
    )
    positions = list(range(n))
    generators = []
    for i, img in enumerate(images):
        y = [0] * (n + m)
        y[n + i] = 1
        generators.append(graph.monomial(y) - lift_to(img, graph, positions))
    generators.extend(lift_to(r, graph, positions) for r in relations)

    bound = degree_bound * d if degree_bound is not None else None
    kernel = eliminate(Ideal(graph, generators), n, bound)
    target = Ring(m, ring.field)
    result = Ideal(target, [g.change_ring(target) for g in kernel.generators])

    modulus = Ideal(ring, list(relations)) if relations else None
    for g in result.generators:
        value = g.substitute(list(images))
        if modulus is not None:
            value = modulus.normal_form(value)
        if not value.is_zero:
            raise KernelCheckError(f"Kernel element {g} does not vanish on the images")
    logger.debug(f"Kernel of a map to {m} images of degree {d}: {len(result)} generators")
    return result


def intersect(first: Ideal, second: Ideal) -> Ideal:
    """Intersection through t*I + (1-t)*J with t eliminated."""
    ring = first.ring
    if second.ring.nvars != ring.nvars or second.ring.field != ring.field:
        raise ValueError("Intersected ideals must share a ring")
    n = ring.nvars
    big = Ring(n + 1, ring.field, MonomialOrder.elimination(1), (0,) + tuple(ring.weights or ()))
    shifted = list(range(1, n + 1))
    t = big.variable(0)
    gens = [t * lift_to(f, big, shifted) for f in first.generators]
    gens += [(big.one() - t) * lift_to(g, big, shifted) for g in second.generators]
    result = eliminate(Ideal(big, gens), 1)
    return Ideal(ring, [g.change_ring(ring) for g in result.generators])


@dataclass
class PartialEliminationFamily:
    """K_0 ⊆ K_1 ⊆ ... read off an ideal with respect to one distinguished variable."""
    base_ideal: Ideal
    center_index: int
    levels: List[Ideal] = field(default_factory=list)

    def is_chain(self) -> bool:
        return all(
            self.levels[i + 1].contains_ideal(self.levels[i]) for i in range(len(self.levels) - 1)
        )


def partial_elimination_ideals(ideal: Ideal, center: int, max_level: int) -> PartialEliminationFamily:
    """
    Partial elimination ideals K_0, ..., K_max_level with respect to x_center.

    The center variable is moved to the front, a Gröbner basis is taken under
    an order where it alone forms the top block, and K_i is generated by the
    coefficients of the top center-power of basis elements whose center
    degree is at most i. Levels live in the ring with the center removed,
    remaining variables renumbered in their original order.
    """
    ring = ideal.ring
    n = ring.nvars
    if not 0 <= center < n:
        raise ValueError(f"Center x{center} not in ring with {n} variables")
    if n < 2:
        raise ValueError("Partial elimination needs at least two variables")
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    positions = [0 if i == center else (i + 1 if i < center else i) for i in range(n)]
    moved = Ring(n, ring.field, MonomialOrder.elimination(1))
    gens = [lift_to(g.change_ring(ring.standard()), moved, positions) for g in ideal.generators]
    basis = groebner_basis(gens)
    small = Ring(n - 1, ring.field)

    extracted: List[Tuple[int, Polynomial]] = []
    for g in basis:
        top = max(m[0] for m in g.coeffs)
        coeff = Polynomial(
            small, {m[1:]: c for m, c in g.coeffs.items() if m[0] == top}, normalized=True
        )
        extracted.append((top, coeff))

    levels = []
    for i in range(max_level + 1):
        levels.append(Ideal(small, [c for top, c in extracted if top <= i]))
    logger.debug(f"Partial elimination ideals at x{center}: {[len(k) for k in levels]} generators")
    return PartialEliminationFamily(ideal, center, levels)
