"""
Graded free resolutions.

Resolutions are built as Schreyer frames: the syzygies of a Gröbner basis are
read off its S-vectors, reduced with quotients recorded, and form a Gröbner
basis of the syzygy module under the induced order. Iterating gives a
(usually non-minimal) resolution, which is then pruned by cancelling unit
entries. Hilbert series come from the leading-term ideal, independently of
any resolution.
"""

import heapq
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..core.models import BettiTable, NumericInvariants
from .fields import FieldElement, FieldSpec
from .groebner import Ideal
from .linalg import ExactMatrix, rank
from .polynomial import (
    Monomial,
    MonomialOrder,
    Polynomial,
    Ring,
    divides,
    mono_degree,
    mono_div,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)

logger = logging.getLogger(__name__)

Term = Tuple[int, Monomial]
ModuleVector = Dict[Term, FieldElement]
Column = Dict[int, Polynomial]


class ResolutionCheckError(RuntimeError):
    """Raised when a computed resolution fails one of its automatic checks."""
    pass


# -- free modules and matrices ----------------------------------------------

@dataclass(frozen=True)
class GradedFreeModule:
    """⊕ S(-t) with one twist t per basis element, in a fixed order."""
    twists: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def degree_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for t in self.twists:
            counts[t] = counts.get(t, 0) + 1
        return counts


@dataclass
class SchreyerOrder:
    """
    Module order induced along a chain of maps.

    A term (c, m) of the module compares like the base term
    (roots[c], m * totals[c]) and then by tails[c]. Base terms compare by
    degree, then by the ring order, then by smaller component first.
    """
    ring: Ring
    base_twists: Tuple[int, ...]
    roots: List[int]
    totals: List[Monomial]
    tails: List[Tuple[int, ...]]

    @classmethod
    def term_over_position(cls, ring: Ring, twists: Sequence[int]) -> 'SchreyerOrder':
        zero = (0,) * ring.nvars
        n = len(twists)
        return cls(ring, tuple(twists), list(range(n)), [zero] * n, [()] * n)

    def key(self, term: Term) -> Tuple[int, ...]:
        c, m = term
        root = self.roots[c]
        total = mono_mul(m, self.totals[c])
        return (sum(total) + self.base_twists[root],) + self.ring.key(total) + (-root,) + self.tails[c]

    def induced(self, leads: Sequence[Term]) -> 'SchreyerOrder':
        """Order on the source of a map whose columns have the given leading terms."""
        return SchreyerOrder(
            self.ring,
            self.base_twists,
            [self.roots[c] for c, _ in leads],
            [mono_mul(m, self.totals[c]) for c, m in leads],
            [self.tails[c] + (-a,) for a, (c, _) in enumerate(leads)],
        )


class GradedMatrix:
    """
    Homogeneous map source -> target, stored by columns.

    Column l maps target row index to the entry (k, l); zero entries are
    omitted. ``order`` is set when the columns are known to form a Gröbner
    basis of their span under that order on the target.
    """

    __slots__ = ("ring", "source", "target", "columns", "order")

    def __init__(
        self,
        ring: Ring,
        source: GradedFreeModule,
        target: GradedFreeModule,
        columns: Sequence[Column],
        order: Optional[SchreyerOrder] = None
    ):
        if len(columns) != source.rank:
            raise ValueError(f"{len(columns)} columns for a source of rank {source.rank}")
        cleaned: List[Column] = []
        for col in columns:
            kept = {}
            for k, p in col.items():
                if not 0 <= k < target.rank:
                    raise IndexError(f"Row {k} outside a target of rank {target.rank}")
                if not p.is_zero:
                    kept[k] = p
            cleaned.append(kept)
        self.ring = ring
        self.source = source
        self.target = target
        self.columns = cleaned
        self.order = order

    @classmethod
    def row(cls, polys: Sequence[Polynomial], ring: Optional[Ring] = None) -> 'GradedMatrix':
        """1 x n matrix of homogeneous polynomials into S."""
        ring = ring or polys[0].ring
        source = GradedFreeModule(tuple(max(p.degree, 0) for p in polys))
        columns = [{0: p.change_ring(ring)} for p in polys]
        return cls(ring, source, GradedFreeModule((0,)), columns)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.target.rank, self.source.rank)

    def entry(self, k: int, l: int) -> Polynomial:
        return self.columns[l].get(k, self.ring.zero())

    @property
    def is_zero(self) -> bool:
        return not any(self.columns)

    def is_graded(self) -> bool:
        """Every entry (k, l) is homogeneous of degree twist(l) - twist(k)."""
        for l, col in enumerate(self.columns):
            for k, p in col.items():
                expected = self.source.twists[l] - self.target.twists[k]
                if not p.is_homogeneous or p.degree != expected:
                    return False
        return True

    def compose(self, other: 'GradedMatrix') -> 'GradedMatrix':
        """self ∘ other for other: E -> F and self: F -> G."""
        if other.target.rank != self.source.rank:
            raise ValueError(f"Cannot compose {self.shape} with {other.shape}")
        columns = []
        for col in other.columns:
            acc: Column = {}
            for k, coeff in col.items():
                for row, p in self.columns[k].items():
                    acc[row] = acc[row] + coeff * p if row in acc else coeff * p
            columns.append(acc)
        return GradedMatrix(self.ring, other.source, self.target, columns)

    def unit_entries(self) -> List[Tuple[int, int]]:
        """Positions of entries of degree zero, which are nonzero constants."""
        return [
            (k, l) for l, col in enumerate(self.columns) for k in col
            if self.source.twists[l] == self.target.twists[k]
        ]

    def constant_part(self, degree: Optional[int] = None) -> ExactMatrix:
        """
        Degree-zero entries as a field matrix.

        With ``degree`` only rows and columns of that twist are kept, renumbered
        in their original order.
        """
        rows = [k for k, t in enumerate(self.target.twists) if degree is None or t == degree]
        cols = [l for l, t in enumerate(self.source.twists) if degree is None or t == degree]
        row_index = {k: n for n, k in enumerate(rows)}
        zero = (0,) * self.ring.nvars
        data: Dict[int, Dict[int, FieldElement]] = {}
        for n, l in enumerate(cols):
            for k, p in self.columns[l].items():
                if k in row_index and self.source.twists[l] == self.target.twists[k]:
                    data.setdefault(row_index[k], {})[n] = p.coeffs.get(zero, 0)
        return ExactMatrix(len(rows), len(cols), self.ring.field, data)

    def evaluate(self, point: Sequence[FieldElement]) -> ExactMatrix:
        data: Dict[int, Dict[int, FieldElement]] = {}
        for l, col in enumerate(self.columns):
            for k, p in col.items():
                data.setdefault(k, {})[l] = p.evaluate(point)
        return ExactMatrix(self.target.rank, self.source.rank, self.ring.field, data)

    def __repr__(self) -> str:
        return f"GradedMatrix({self.target.rank}x{self.source.rank})"


@dataclass
class FreeResolution:
    """
    F_0 <- F_1 <- ... with differentials[i - 1] = d_i : F_i -> F_{i-1}.
    """
    ring: Ring
    modules: List[GradedFreeModule]
    differentials: List[GradedMatrix] = field(default_factory=list)
    minimal: bool = False

    @property
    def length(self) -> int:
        """Largest i with F_i nonzero; -1 when every module is zero."""
        nonzero = [i for i, F in enumerate(self.modules) if F.rank]
        return max(nonzero, default=-1)

    def differential(self, i: int) -> GradedMatrix:
        return self.differentials[i - 1]

    def ranks(self) -> List[int]:
        return [F.rank for F in self.modules]


# -- module vectors ---------------------------------------------------------

def _column_to_vector(col: Column) -> ModuleVector:
    return {(k, m): c for k, p in col.items() for m, c in p.coeffs.items()}


def _vector_to_column(vec: ModuleVector, ring: Ring) -> Column:
    grouped: Dict[int, Dict[Monomial, FieldElement]] = {}
    for (k, m), c in vec.items():
        grouped.setdefault(k, {})[m] = c
    return {k: Polynomial(ring, coeffs, normalized=True) for k, coeffs in sorted(grouped.items())}


def _add_term(vec: ModuleVector, term: Term, value: FieldElement, fld: FieldSpec) -> bool:
    """vec[term] += value; True when the term is new."""
    if term in vec:
        total = fld.add(vec[term], value)
        if total:
            vec[term] = total
        else:
            del vec[term]
        return False
    if value:
        vec[term] = value
        return True
    return False


def _add_shifted(vec: ModuleVector, source: ModuleVector, shift: Monomial,
                 factor: FieldElement, fld: FieldSpec) -> None:
    """vec += factor * x^shift * source."""
    for (k, m), c in source.items():
        _add_term(vec, (k, mono_mul(m, shift)), fld.mul(factor, c), fld)


class _Reducer:
    """Division by module vectors whose leading terms are known."""

    def __init__(self, vectors: Sequence[ModuleVector], order: SchreyerOrder, fld: FieldSpec):
        self.order = order
        self.field = fld
        self.vectors = list(vectors)
        self.leads: List[Term] = []
        self.lc_inv: List[FieldElement] = []
        self.tails: List[List[Tuple[Term, FieldElement]]] = []
        self.by_component: Dict[int, List[int]] = {}
        for v in self.vectors:
            self.append(v)

    def append(self, vec: ModuleVector) -> int:
        lead = max(vec, key=self.order.key)
        index = len(self.leads)
        self.leads.append(lead)
        self.lc_inv.append(self.field.inv(vec[lead]))
        self.tails.append([(t, c) for t, c in vec.items() if t != lead])
        self.by_component.setdefault(lead[0], []).append(index)
        if index >= len(self.vectors):
            self.vectors.append(vec)
        return index

    def divisor(self, term: Term) -> Optional[int]:
        comp, m = term
        for index in self.by_component.get(comp, ()):
            if divides(self.leads[index][1], m):
                return index
        return None

    def reduce(self, vec: ModuleVector, full: bool = True) -> Tuple[ModuleVector, ModuleVector]:
        """
        Divide vec, returning (remainder, quotients).

        Quotients are keyed by (basis index, monomial). Without ``full`` the
        division stops at the first leading term no basis element divides.
        """
        fld = self.field
        key = self.order.key
        work = dict(vec)
        heap = [tuple(-v for v in key(t)) + (t,) for t in work]  # type: ignore[operator]
        heapq.heapify(heap)
        remainder: ModuleVector = {}
        quotients: ModuleVector = {}
        while heap:
            term = heapq.heappop(heap)[-1]
            c = work.pop(term, None)
            if c is None:
                continue
            index = self.divisor(term)
            if index is None:
                if not full:
                    work[term] = c
                    remainder.update(work)
                    return remainder, quotients
                remainder[term] = c
                continue
            factor = fld.mul(c, self.lc_inv[index])
            shift = mono_div(term[1], self.leads[index][1])
            _add_term(quotients, (index, shift), factor, fld)
            for (k, m), tc in self.tails[index]:
                new = (k, mono_mul(m, shift))
                if _add_term(work, new, fld.neg(fld.mul(factor, tc)), fld):
                    heapq.heappush(heap, tuple(-v for v in key(new)) + (new,))  # type: ignore[arg-type]
        return remainder, quotients


# -- syzygies ---------------------------------------------------------------

def _schreyer_syzygies(
    vectors: Sequence[ModuleVector],
    order: SchreyerOrder,
    fld: FieldSpec
) -> Tuple[List[ModuleVector], List[Term], List[Term]]:
    """
    Syzygies of a Gröbner basis, one per minimal S-pair lead.

    Returns (syzygies, their leading terms, leading terms of the inputs).
    """
    reducer = _Reducer(vectors, order, fld)
    leads = reducer.leads
    syzygies: List[ModuleVector] = []
    syz_leads: List[Term] = []
    for a, (comp, ma) in enumerate(leads):
        candidates = []
        for b in reducer.by_component[comp]:
            if b <= a:
                continue
            q = mono_div(mono_lcm(ma, leads[b][1]), ma)
            candidates.append((mono_degree(q), b, q))
        candidates.sort()
        kept: List[Monomial] = []
        for _, b, qa in candidates:
            if any(divides(p, qa) for p in kept):
                continue
            kept.append(qa)
            mb = leads[b][1]
            qb = mono_div(mono_mul(ma, qa), mb)
            work: ModuleVector = {}
            _add_shifted(work, vectors[a], qa, reducer.lc_inv[a], fld)
            _add_shifted(work, vectors[b], qb, fld.neg(reducer.lc_inv[b]), fld)
            remainder, quotients = reducer.reduce(work)
            if remainder:
                raise ResolutionCheckError(
                    "An S-vector did not reduce to zero: the columns are not a Gröbner basis"
                )
            syz: ModuleVector = {}
            _add_term(syz, (a, qa), reducer.lc_inv[a], fld)
            _add_term(syz, (b, qb), fld.neg(reducer.lc_inv[b]), fld)
            for term, c in quotients.items():
                _add_term(syz, term, fld.neg(c), fld)
            syzygies.append(syz)
            syz_leads.append((a, qa))
    return syzygies, syz_leads, list(leads)


def _module_groebner(
    vectors: Sequence[ModuleVector],
    order: SchreyerOrder,
    fld: FieldSpec
) -> Tuple[List[ModuleVector], List[ModuleVector]]:
    """
    Gröbner basis of the span of ``vectors`` with each element's expression
    in the inputs, as vectors keyed by (input index, monomial).
    """
    zero = (0,) * order.ring.nvars
    basis: List[ModuleVector] = []
    lifts: List[ModuleVector] = []
    reducer: Optional[_Reducer] = None
    queue: List[Tuple[ModuleVector, ModuleVector]] = [
        (dict(v), {(i, zero): fld.one()}) for i, v in enumerate(vectors) if v
    ]
    pairs: List[Tuple[int, int]] = []
    while queue or pairs:
        if queue:
            vec, lift = queue.pop(0)
        else:
            i, j = pairs.pop(0)
            (ci, mi), (_, mj) = reducer.leads[i], reducer.leads[j]  # type: ignore[union-attr]
            lcm = mono_lcm(mi, mj)
            fi, fj = reducer.lc_inv[i], fld.neg(reducer.lc_inv[j])  # type: ignore[union-attr]
            vec, lift = {}, {}
            _add_shifted(vec, basis[i], mono_div(lcm, mi), fi, fld)
            _add_shifted(vec, basis[j], mono_div(lcm, mj), fj, fld)
            _add_shifted(lift, lifts[i], mono_div(lcm, mi), fi, fld)
            _add_shifted(lift, lifts[j], mono_div(lcm, mj), fj, fld)
        if reducer is not None and vec:
            vec, quotients = reducer.reduce(vec, full=False)
            for (index, shift), c in quotients.items():
                _add_shifted(lift, lifts[index], shift, fld.neg(c), fld)
        if not vec:
            continue
        if reducer is None:
            reducer = _Reducer([vec], order, fld)
        else:
            reducer.append(vec)
        basis.append(vec)
        lifts.append(lift)
        new = len(basis) - 1
        comp = reducer.leads[new][0]
        pairs.extend((i, new) for i in reducer.by_component[comp] if i != new)
    return basis, lifts


def _combine(
    coefficients: ModuleVector,
    vectors: Sequence[ModuleVector],
    fld: FieldSpec
) -> ModuleVector:
    """Σ c x^m vectors[i] over the (i, m) -> c entries of ``coefficients``."""
    out: ModuleVector = {}
    for (i, m), c in coefficients.items():
        _add_shifted(out, vectors[i], m, c, fld)
    return out


def _sorted_syzygies(
    syzygies: List[ModuleVector],
    leads: List[Term]
) -> Tuple[List[ModuleVector], List[Term]]:
    """Group by leading component, lex-descending leading monomials within a group."""
    order = sorted(
        range(len(syzygies)), key=lambda s: (leads[s][0], tuple(-x for x in leads[s][1]))
    )
    return [syzygies[s] for s in order], [leads[s] for s in order]


def _vector_twist(vec: ModuleVector, twists: Sequence[int]) -> int:
    k, m = next(iter(vec))
    return twists[k] + mono_degree(m)


def module_syzygies(M: GradedMatrix) -> GradedMatrix:
    """
    Generators of the syzygy module of the columns of M.

    When M carries a Schreyer order its columns are taken as a Gröbner
    basis: the result is then a Gröbner basis of the syzygies under the
    induced order, carried on the result. Otherwise a Gröbner basis of the
    column span is computed first and the syzygies are pulled back to the
    original columns.
    """
    ring, fld = M.ring, M.ring.field
    vectors = [_column_to_vector(col) for col in M.columns]
    order = M.order
    if order is not None:
        syzygies, leads, column_leads = _schreyer_syzygies(vectors, order, fld)
        syzygies, leads = _sorted_syzygies(syzygies, leads)
        twists = tuple(_vector_twist(s, M.source.twists) for s in syzygies)
        return GradedMatrix(
            ring,
            GradedFreeModule(twists),
            M.source,
            [_vector_to_column(s, ring) for s in syzygies],
            order.induced(column_leads),
        )

    order = SchreyerOrder.term_over_position(ring, M.target.twists)
    basis, lifts = _module_groebner(vectors, order, fld)
    generators: List[ModuleVector] = []
    reducer = _Reducer(basis, order, fld)
    if basis:
        basis_syz, _, _ = _schreyer_syzygies(basis, order, fld)
        generators += [_combine(s, lifts, fld) for s in basis_syz]
    zero = (0,) * ring.nvars
    for l, vec in enumerate(vectors):
        if not vec:
            generators.append({(l, zero): fld.one()})
            continue
        remainder, quotients = reducer.reduce(vec)
        if remainder:
            raise ResolutionCheckError("A column does not reduce to zero modulo its own span")
        relation: ModuleVector = {(l, zero): fld.one()}
        for (index, shift), c in quotients.items():
            _add_shifted(relation, lifts[index], shift, fld.neg(c), fld)
        generators.append(relation)
    unique: List[ModuleVector] = []
    for g in generators:
        if g and g not in unique:
            unique.append(g)
    twists = tuple(_vector_twist(g, M.source.twists) for g in unique)
    return GradedMatrix(
        ring, GradedFreeModule(twists), M.source, [_vector_to_column(g, ring) for g in unique]
    )


# -- resolutions ------------------------------------------------------------

def _standard_ideal(ideal: Ideal, order: Optional[MonomialOrder] = None) -> Ideal:
    ring = ideal.ring.standard()
    if order is not None:
        ring = ring.with_order(order)
    return ideal.with_ring(ring)


def schreyer_frame(
    ideal: Ideal,
    max_length: Optional[int] = None,
    order: Optional[MonomialOrder] = None
) -> FreeResolution:
    """
    Non-minimal resolution of S/I by iterated Schreyer syzygies.

    The reduced Gröbner basis is sorted lex-descending by leading monomial,
    and so is every later level within each leading component; this keeps
    the number of steps within the number of variables.
    """
    std = _standard_ideal(ideal, order)
    ring = std.ring
    basis = sorted(std.groebner_basis(), key=lambda g: g.lm, reverse=True)
    modules = [GradedFreeModule((0,))]
    differentials: List[GradedMatrix] = []
    if basis:
        current: Optional[GradedMatrix] = GradedMatrix.row(basis, ring)
        current.order = SchreyerOrder.term_over_position(ring, (0,))
    else:
        current = None
    while current is not None and current.source.rank:
        if len(differentials) >= ring.nvars:
            raise ResolutionCheckError(
                f"Resolution longer than {ring.nvars} steps in {ring.nvars} variables"
            )
        differentials.append(current)
        modules.append(current.source)
        logger.debug(f"Schreyer frame: F_{len(differentials)} has rank {current.source.rank}")
        if max_length is not None and len(differentials) >= max_length:
            break
        current = module_syzygies(current)
    return FreeResolution(ring, modules, differentials, minimal=False)


def minimalize(resolution: FreeResolution) -> FreeResolution:
    """
    Prune a graded resolution by cancelling unit entries.

    A unit c at (a, b) of d_i splits off S(-t) -> S(-t): row a and column b
    leave d_i, which becomes d[k][l] - d[k][b] d[a][l] / c, while column a
    leaves d_{i-1} and row b leaves d_{i+1}.
    """
    ring = resolution.ring
    fld = ring.field
    n = len(resolution.differentials)
    zero_mono = (0,) * ring.nvars
    twists = [dict(enumerate(F.twists)) for F in resolution.modules]
    cols: List[Dict[int, Column]] = [{}] + [
        {l: dict(col) for l, col in enumerate(d.columns)} for d in resolution.differentials
    ]
    cancelled = 0

    def find_unit(i: int, l: int) -> Optional[Tuple[int, FieldElement]]:
        t = twists[i][l]
        for k in sorted(cols[i][l]):
            if twists[i - 1][k] == t:
                return k, cols[i][l][k].coeffs[zero_mono]
        return None

    def cancel(i: int, a: int, b: int, c: FieldElement) -> None:
        col_b = cols[i].pop(b)
        c_inv = fld.inv(c)
        others = [(k, p) for k, p in col_b.items() if k != a]
        for col in cols[i].values():
            entry = col.pop(a, None)
            if entry is None:
                continue
            factor = entry.scale(c_inv)
            for k, p in others:
                value = col[k] - p * factor if k in col else -(p * factor)
                if value.is_zero:
                    col.pop(k, None)
                else:
                    col[k] = value
        if i >= 2:
            cols[i - 1].pop(a)
        if i + 1 <= n:
            for col in cols[i + 1].values():
                col.pop(b, None)
        del twists[i - 1][a]
        del twists[i][b]

    for i in range(1, n + 1):
        changed = True
        while changed:
            changed = False
            for l in sorted(cols[i]):
                if l not in cols[i]:
                    continue
                unit = find_unit(i, l)
                if unit is not None:
                    cancel(i, unit[0], l, unit[1])
                    cancelled += 1
                    changed = True

    index = [{old: new for new, old in enumerate(sorted(level))} for level in twists]
    modules = [GradedFreeModule(tuple(level[k] for k in sorted(level))) for level in twists]
    differentials = []
    for i in range(1, n + 1):
        columns = [
            {index[i - 1][k]: p for k, p in cols[i][l].items()} for l in sorted(cols[i])
        ]
        differentials.append(GradedMatrix(ring, modules[i], modules[i - 1], columns))
    while len(modules) > 1 and not modules[-1].rank:
        modules.pop()
        differentials.pop()
    if cancelled:
        logger.debug(f"Minimalization cancelled {cancelled} unit pairs")
    return FreeResolution(ring, modules, differentials, minimal=True)


def free_resolution(
    ideal: Ideal,
    max_length: Optional[int] = None,
    order: Optional[MonomialOrder] = None,
    verify: bool = True
) -> FreeResolution:
    """
    Minimal graded free resolution of S/I.

    With ``max_length`` only F_0 .. F_max_length are computed. With
    ``verify`` the composition of differentials, the length bound and the
    Euler characteristic against the Hilbert series are checked.

    Raises:
        ResolutionCheckError: if an automatic check fails
    """
    frame_length = max_length + 1 if max_length is not None else None
    frame = schreyer_frame(ideal, frame_length, order)
    result = minimalize(frame)
    if max_length is not None and len(result.modules) > max_length + 1:
        result.modules = result.modules[:max_length + 1]
        result.differentials = result.differentials[:max_length]
    logger.info(
        f"Resolution over {result.ring.field}: frame ranks {frame.ranks()}, minimal ranks {result.ranks()}"
    )
    if verify:
        if result.length > result.ring.nvars:
            raise ResolutionCheckError(
                f"Projective dimension {result.length} exceeds {result.ring.nvars}"
            )
        if not composition_is_zero(result):
            raise ResolutionCheckError("Consecutive differentials do not compose to zero")
        if max_length is None:
            numerator, _ = hilbert_series(ideal)
            euler = betti_table(result).euler_numerator()
            if euler != numerator:
                raise ResolutionCheckError(
                    f"Euler characteristic {euler} disagrees with the Hilbert numerator {numerator}"
                )
    return result


def composition_is_zero(resolution: FreeResolution) -> bool:
    diffs = resolution.differentials
    return all(diffs[i].compose(diffs[i + 1]).is_zero for i in range(len(diffs) - 1))


def unit_entries(resolution: FreeResolution) -> List[Tuple[int, int, int]]:
    """(i, row, column) for every degree-zero entry of every differential."""
    return [
        (i, k, l)
        for i, d in enumerate(resolution.differentials, start=1)
        for k, l in d.unit_entries()
    ]


def betti_table(resolution: FreeResolution) -> BettiTable:
    """
    β_{i,j} = number of twists equal to i+j in F_i.

    Raises:
        ValueError: for a non-minimal resolution
    """
    if not resolution.minimal:
        raise ValueError("Betti tables are read off minimal resolutions; minimalize first")
    entries: Dict[Tuple[int, int], int] = {}
    for i, F in enumerate(resolution.modules):
        for t in F.twists:
            entries[(i, t - i)] = entries.get((i, t - i), 0) + 1
    return BettiTable(entries)


def betti_from_constant_ranks(resolution: FreeResolution) -> BettiTable:
    """
    Betti numbers of any graded resolution, from Tor against the residue field:
    β_{i,D-i} = #{twists D in F_i} - rank d_i^0[D] - rank d_{i+1}^0[D].
    """
    diffs = resolution.differentials
    entries: Dict[Tuple[int, int], int] = {}
    for i, F in enumerate(resolution.modules):
        for D, count in F.degree_counts().items():
            incoming = rank(diffs[i - 1].constant_part(D)) if i >= 1 else 0
            outgoing = rank(diffs[i].constant_part(D)) if i < len(diffs) else 0
            value = count - incoming - outgoing
            if value:
                entries[(i, D - i)] = value
    return BettiTable(entries)


def exactness_certificate(
    resolution: FreeResolution,
    rng: Optional[np.random.Generator] = None,
    samples: int = 2
) -> Dict[int, bool]:
    """
    rank d_i + rank d_{i+1} == rank F_i for every i ≥ 1, ranks taken as the
    maximum over ``samples`` random evaluations.
    """
    rng = rng or np.random.default_rng(0)
    ring = resolution.ring
    fld = ring.field
    ranks = [0] * (len(resolution.differentials) + 2)
    for _ in range(max(samples, 1)):
        point = [fld.random_element(rng) for _ in range(ring.nvars)]
        for i, d in enumerate(resolution.differentials, start=1):
            ranks[i] = max(ranks[i], rank(d.evaluate(point)))
    return {
        i: ranks[i] + ranks[i + 1] == F.rank
        for i, F in enumerate(resolution.modules) if i >= 1
    }


# -- Hilbert series ---------------------------------------------------------

def _poly_add(a: List[int], b: List[int]) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return out


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(coeffs: List[int]) -> List[int]:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _minimal_monomials(monos: Sequence[Monomial]) -> Tuple[Monomial, ...]:
    kept: List[Monomial] = []
    for m in sorted(set(monos), key=lambda x: (sum(x), x)):
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def _numerator(gens: Tuple[Monomial, ...], cache: Dict[Tuple[Monomial, ...], List[int]]) -> List[int]:
    """K-polynomial of S/J for the monomial ideal J = (gens), by pivoting on a variable power."""
    if gens in cache:
        return cache[gens]
    if not gens:
        return [1]
    shared = None
    for a, g in enumerate(gens):
        for h in gens[a + 1:]:
            common = [v for v, (x, y) in enumerate(zip(g, h)) if x and y]
            if common:
                shared = common
                break
        if shared:
            break
    if shared is None:
        result = [1]
        for g in gens:
            factor = [0] * (sum(g) + 1)
            factor[0], factor[-1] = 1, -1
            result = _poly_mul(result, factor)
        cache[gens] = result
        return result
    var = max(shared, key=lambda v: sum(1 for g in gens if g[v]))
    e = min(g[var] for g in gens if g[var])
    pivot = tuple(e if v == var else 0 for v in range(len(gens[0])))
    plus = _minimal_monomials([g for g in gens if g[var] < e] + [pivot])
    colon = _minimal_monomials([tuple(max(x - y, 0) for x, y in zip(g, pivot)) for g in gens])
    result = _poly_add(_numerator(plus, cache), [0] * e + _numerator(colon, cache))
    cache[gens] = result
    return result


def hilbert_series(ideal: Ideal) -> Tuple[List[int], List[int]]:
    """
    Numerator N(t) of HS(S/I) = N(t) / (1-t)^n, and the h-vector
    N(t) / (1-t)^codim.

    Both are read off the leading-term ideal of a grevlex Gröbner basis.
    The zero ideal gives N = 1; the unit ideal gives N = 0 and an empty
    h-vector.
    """
    std = _standard_ideal(ideal)
    lms = [g.lm for g in std.groebner_basis()]
    if any(not any(m) for m in lms):
        return [0], []
    numerator = _trim(_numerator(_minimal_monomials(lms), {}))
    h_vector, _ = reduce_hilbert_numerator(numerator)
    return numerator, h_vector


def reduce_hilbert_numerator(numerator: List[int]) -> Tuple[List[int], int]:
    """Divide out (1-t) as often as possible: (h-vector, number of factors)."""
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed(numerator)), t)
    if poly.is_zero:
        return [], 0
    divisor = sympy.Poly(1 - t, t)
    count = 0
    while poly.degree() > 0:
        quotient, remainder = poly.div(divisor)
        if not remainder.is_zero:
            break
        poly = quotient
        count += 1
    return [int(c) for c in reversed(poly.all_coeffs())], count


def numeric_invariants(ideal: Ideal, resolution: FreeResolution) -> NumericInvariants:
    """
    Dimension, degree, codimension, regularity, projective dimension, ACM
    flag and the largest p with N_{2,p}.

    Raises:
        ValueError: for the zero ideal or a non-minimal resolution
    """
    if ideal.is_zero:
        raise ValueError("Numeric invariants are not defined for the zero ideal")
    numerator, _ = hilbert_series(ideal)
    h_vector, codim = reduce_hilbert_numerator(numerator)
    table = betti_table(resolution)
    n = ideal.ring.nvars
    if table.euler_numerator() != numerator:
        logger.warning(
            f"Betti table Euler characteristic {table.euler_numerator()} "
            f"disagrees with the Hilbert numerator {numerator}"
        )
    pd = table.max_i
    steep = [i for (i, j) in table.entries if j >= 2]
    return NumericInvariants(
        hilbert_numerator=numerator,
        h_vector=h_vector,
        dimension=n - codim - 1,
        degree=sum(h_vector),
        codimension=codim,
        regularity=table.max_j,
        projective_dimension=pd,
        is_acm=pd == codim,
        max_p_with_N2p=min(steep) - 1 if steep else None,
    )


# -- quadrics and generators in low degree ----------------------------------

def minimal_generator_counts(ideal: Ideal, max_degree: int) -> Dict[int, int]:
    """
    β_{1,j} for generator degrees j+1 ≤ max_degree, computed as
    dim I_δ - dim S_1·I_{δ-1} from a basis truncated at max_degree.
    """
    std = _standard_ideal(ideal)
    ring = std.ring
    fld = ring.field
    basis = std.groebner_basis(degree_bound=max_degree)
    lms = [g.lm for g in basis]
    counts: Dict[int, int] = {}
    for delta in range(1, max_degree + 1):
        monos = list(monomials_of_degree(ring.nvars, delta))
        column = {m: c for c, m in enumerate(monos)}
        dim_in_ideal = sum(1 for m in monos if any(divides(l, m) for l in lms))
        rows: Dict[int, Dict[int, FieldElement]] = {}
        for g in basis:
            if g.degree >= delta:
                continue
            for s in monomials_of_degree(ring.nvars, delta - g.degree):
                rows[len(rows)] = {column[mono_mul(m, s)]: c for m, c in g.coeffs.items()}
        generated = rank(ExactMatrix(len(rows), len(monos), fld, rows)) if rows else 0
        if dim_in_ideal - generated:
            counts[delta - 1] = dim_in_ideal - generated
    return counts


def resolution_summary(resolution: FreeResolution) -> Dict[str, Any]:
    """Plain-data summary for logs and kv output."""
    return {
        "field": str(resolution.ring.field),
        "nvars": resolution.ring.nvars,
        "ranks": resolution.ranks(),
        "minimal": resolution.minimal,
        "length": resolution.length,
    }
