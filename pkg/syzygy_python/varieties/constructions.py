"""
Constructors for the projective varieties the engine studies.

Every constructor returns a homogeneous Ideal in the standard grevlex ring of
its ambient space. Image ideals come from kernel_of_ring_map, point sets from
iterated intersection, and all randomness is drawn from a numpy Generator
seeded by the caller.
"""

import itertools
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.fields import FieldElement, FieldSpec
from ..algebra.groebner import Ideal, eliminate, intersect, kernel_of_ring_map
from ..algebra.linalg import ExactMatrix, inverse, nullspace, rank
from ..algebra.polynomial import Polynomial, Ring, monomials_of_degree
from ..algebra.resolution import hilbert_series, reduce_hilbert_numerator
from ..core.models import PointConfiguration, ScrollSpec

logger = logging.getLogger(__name__)

RANDOM_HEIGHT = 100


class ConstructionError(ValueError):
    """Raised when construction parameters cannot produce the requested variety."""
    pass


class UnsupportedConstructionError(ConstructionError):
    """Raised for constructions that are deliberately not attempted."""
    pass


def _rng(seed: int, attempt: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed, attempt]) if attempt else np.random.default_rng(seed)


# -- scrolls ----------------------------------------------------------------

def rational_normal_scroll(spec: ScrollSpec, field: Optional[FieldSpec] = None) -> Ideal:
    """
    2x2 minors of the block catalecticant matrix of S(a_1, ..., a_k).

    Block i owns a_i + 1 consecutive variables and contributes a_i columns
    (x_j, x_{j+1}); a block with a_i = 0 adds a cone point and no columns.
    """
    ring = Ring(spec.ambient + 1, field or FieldSpec())
    x = ring.gens()
    top: List[Polynomial] = []
    bottom: List[Polynomial] = []
    start = 0
    for a in spec.a:
        for j in range(a):
            top.append(x[start + j])
            bottom.append(x[start + j + 1])
        start += a + 1
    minors = [
        top[c1] * bottom[c2] - top[c2] * bottom[c1]
        for c1, c2 in itertools.combinations(range(len(top)), 2)
    ]
    logger.info(f"Scroll {spec} in P^{spec.ambient}: {len(minors)} quadrics")
    return Ideal(ring, minors)


# -- parametrized curves and surfaces ---------------------------------------

def veronese_embed_plane_curve(
    f: Polynomial,
    d: int,
    degree_bound: Optional[int] = None
) -> Ideal:
    """
    Ideal of ν_d(V(f)) in P^{C(d+2,2)-1}.

    The coordinates are the degree-d monomials in x0, x1, x2, lex-descending.
    f = 0 embeds the whole plane. ``degree_bound`` truncates the result.

    Raises:
        ConstructionError: f not a form in three variables, or d < 2
    """
    if f.ring.nvars != 3:
        raise ConstructionError(f"A plane curve needs 3 variables, got {f.ring.nvars}")
    if not f.is_homogeneous:
        raise ConstructionError(f"Plane curve equation must be homogeneous: {f}")
    if d < 2:
        raise ConstructionError(f"Veronese degree must be at least 2, got {d}")
    ring = f.ring.standard()
    images = [ring.monomial(m) for m in monomials_of_degree(3, d)]
    relations = [] if f.is_zero else [f.change_ring(ring)]
    ideal = kernel_of_ring_map(ring, images, relations, degree_bound=degree_bound)
    logger.info(
        f"ν_{d} of {'P^2' if f.is_zero else f'V({f})'} in P^{len(images) - 1}: "
        f"{len(ideal)} generators"
    )
    return ideal


def monomial_curve(exponents: Sequence[int], field: Optional[FieldSpec] = None) -> Ideal:
    """
    Ideal of the curve [s^e0, s^e1 t^(e0-e1), ..., t^e0 ...] in P^r.

    Raises:
        ConstructionError: exponents not strictly decreasing and nonnegative
    """
    exps = list(exponents)
    if len(exps) < 2:
        raise ConstructionError("A monomial curve needs at least two exponents")
    if any(e < 0 for e in exps) or any(a <= b for a, b in zip(exps, exps[1:])):
        raise ConstructionError(
            f"Exponents must be strictly decreasing and nonnegative: {tuple(exps)}"
        )
    ring = Ring(2, field or FieldSpec())
    top = exps[0]
    images = [ring.monomial((e, top - e)) for e in exps]
    ideal = kernel_of_ring_map(ring, images)
    logger.info(f"Monomial curve M{tuple(exps)} in P^{len(exps) - 1}: {len(ideal)} generators")
    return ideal


# -- projections and sections -----------------------------------------------

def _as_points(points: object) -> List[Tuple[FieldElement, ...]]:
    if isinstance(points, PointConfiguration):
        return [tuple(p) for p in points.points]
    return [tuple(p) for p in points]  # type: ignore[attr-defined]


def project_from_span(ideal: Ideal, points: object) -> Ideal:
    """
    Closure of the image of V(I) under projection from the span of ``points``.

    Coordinates are changed so that the span becomes a coordinate subspace
    (its annihilating linear forms become the last variables), after which
    the first variables are eliminated.

    Raises:
        ConstructionError: dependent points, or no room left for the image
    """
    ring = ideal.ring.standard()
    fld = ring.field
    n = ring.nvars
    pts = _as_points(points)
    s = len(pts)
    if s == 0:
        return ideal.with_ring(ring)
    if any(len(p) != n for p in pts):
        raise ConstructionError(f"Projection points need {n} coordinates")
    if n - s <= 2:
        raise ConstructionError(
            f"Ambient too small: projecting P^{n - 1} from {s} point(s) leaves at most a line"
        )
    point_matrix = ExactMatrix.from_dense(pts, fld)
    if rank(point_matrix) != s:
        raise ConstructionError("Projection points are linearly dependent")

    forms = nullspace(point_matrix)  # linear forms vanishing on the span
    completion: List[List[FieldElement]] = []
    for k in range(n):
        unit = [fld.one() if i == k else fld.zero() for i in range(n)]
        trial = completion + [unit] + forms
        if rank(ExactMatrix.from_dense(trial, fld)) == len(trial):
            completion.append(unit)
        if len(completion) == s:
            break
    change = ExactMatrix.from_dense(completion + forms, fld)
    back = inverse(change).to_dense()
    z = ring.gens()
    images = [sum((z[j].scale(back[i][j]) for j in range(n) if back[i][j]), ring.zero())
              for i in range(n)]
    moved = Ideal(ring, [g.change_ring(ring).substitute(images) for g in ideal.generators])
    result = eliminate(moved, s)
    result = result.with_ring(Ring(n - s, fld))
    if any(g.degree == 1 for g in result.generators):
        logger.warning(f"Projection image lies in a hyperplane of P^{n - s - 1}")
    if result.is_zero:
        raise ConstructionError(f"Ambient too small: the image fills P^{n - s - 1}")
    logger.info(f"Projected from {s} points into P^{n - s - 1}: {len(result)} generators")
    return result


def hyperplane_section(
    ideal: Ideal,
    count: int,
    seed: int,
    height: int = RANDOM_HEIGHT
) -> Ideal:
    """
    Cut by ``count`` seeded random hyperplanes.

    The last ``count`` variables are replaced by random linear forms in the
    others, so the ambient space drops by ``count``.

    Raises:
        ConstructionError: count < 1 or larger than dim V(I) + 1
    """
    ring = ideal.ring.standard()
    n = ring.nvars
    numerator, _ = hilbert_series(ideal)
    _, codim = reduce_hilbert_numerator(numerator)
    dim = n - 1 - codim
    if count < 1:
        raise ConstructionError("A hyperplane section needs count ≥ 1")
    if count > dim + 1 or count >= n:
        raise ConstructionError(f"Cannot cut a {dim}-dimensional variety by {count} hyperplanes")
    rng = _rng(seed)
    small = Ring(n - count, ring.field)
    x = small.gens()
    images = list(x)
    for _ in range(count):
        coeffs = [ring.field.random_element(rng, height) for _ in range(n - count)]
        images.append(small.linear_form(coeffs))
    gens = [g.change_ring(ring).substitute(images) for g in ideal.generators]
    logger.info(f"Hyperplane section by {count} forms (seed {seed}) into P^{n - count - 1}")
    return Ideal(small, gens)


# -- points -----------------------------------------------------------------

def general_position_check(points: Sequence[Sequence[FieldElement]], field: FieldSpec) -> bool:
    """Every min(r+1, #points) of the points are linearly independent."""
    pts = [tuple(p) for p in points]
    if not pts:
        return True
    size = min(len(pts[0]), len(pts))
    for subset in itertools.combinations(pts, size):
        if rank(ExactMatrix.from_dense(list(subset), field)) < size:
            return False
    return True


def point_ideal(point: Sequence[FieldElement], ring: Ring) -> Ideal:
    """Linear forms vanishing at one point."""
    forms = nullspace(ExactMatrix.from_dense([list(point)], ring.field))
    return Ideal(ring, [ring.linear_form(v) for v in forms])


def points_ideal(points: Sequence[Sequence[FieldElement]], ring: Ring) -> Ideal:
    """Ideal of a finite point set by iterated intersection."""
    result = point_ideal(points[0], ring)
    for p in points[1:]:
        result = intersect(result, point_ideal(p, ring))
    return result


def random_points(
    r: int,
    d: int,
    seed: int,
    field: Optional[FieldSpec] = None,
    height: int = RANDOM_HEIGHT
) -> Tuple[PointConfiguration, Ideal]:
    """
    d seeded random points of P^r and their ideal.

    Coordinates are integers in [-height, height] over QQ and uniform over
    F_p. A sample failing the general position check is redrawn once with a
    warning.

    Raises:
        ConstructionError: r < 2, d ≤ r (the points span a hyperplane at most),
            or two samples in a row fail the check
    """
    fld = field or FieldSpec()
    if r < 2:
        raise ConstructionError(f"Ambient dimension must be at least 2, got {r}")
    if d <= r:
        raise ConstructionError(f"{d} points in P^{r} are degenerate (they lie on a hyperplane)")
    for attempt in range(2):
        rng = _rng(seed, attempt)
        pts = [tuple(fld.random_element(rng, height) for _ in range(r + 1)) for _ in range(d)]
        if general_position_check(pts, fld) and len(set(pts)) == d:
            break
        logger.warning(f"Points drawn with seed {seed} are not in general position; reseeding")
    else:
        raise ConstructionError(f"No general point configuration from seed {seed}")
    ring = Ring(r + 1, fld)
    ideal = points_ideal(pts, ring)
    logger.info(f"{d} random points in P^{r} (seed {seed}): {len(ideal)} generators")
    return PointConfiguration(r, list(pts), seed, general=True), ideal


def points_on_rational_normal_curve(
    r: int,
    d: int,
    seed: int,
    field: Optional[FieldSpec] = None,
    height: int = RANDOM_HEIGHT
) -> Tuple[PointConfiguration, Ideal]:
    """
    d points (s^r, s^(r-1), ..., 1) on the rational normal curve, for distinct
    seeded s. Any r+1 of them are independent (Vandermonde).
    """
    fld = field or FieldSpec()
    if r < 2:
        raise ConstructionError(f"Ambient dimension must be at least 2, got {r}")
    rng = _rng(seed)
    params: List[FieldElement] = []
    while len(params) < d:
        s = fld.random_element(rng, height)
        if s not in params:
            params.append(s)
    pts = [tuple(fld.element(Fraction(s) ** (r - i)) for i in range(r + 1)) for s in params]
    ring = Ring(r + 1, fld)
    ideal = points_ideal(pts, ring)
    logger.info(f"{d} points on the rational normal curve in P^{r} (seed {seed})")
    return PointConfiguration(r, list(pts), seed, general=True), ideal


# -- divisors on rational normal surface scrolls ----------------------------

def hyperelliptic_range_ok(a: int, b: int, beta: int) -> bool:
    """
    (e-1-m)/2 ≤ a ≤ e/2 for the curve of class 2H + beta*F on S(a, b),
    where e = a+b and m = a+b+beta-1.
    """
    e = a + b
    m = e + beta - 1
    return e - 1 - m <= 2 * a <= e


def scroll_divisor(
    a: int,
    b: int,
    beta: int,
    seed: int,
    field: Optional[FieldSpec] = None,
    height: int = RANDOM_HEIGHT
) -> Ideal:
    """
    Random curve of class 2H + beta*F on the smooth scroll S(a, b).

    The Cox ring k[s, t, u, v] is graded with weights (1, 1, b-a+1, 1), so the
    hyperplane sections u s^(a-i) t^i and v s^(b-j) t^j all have weight b+1.
    The curve is the zero set of u^2 P + u v Q + v^2 R with seeded binary
    forms of degrees 2a+beta, a+b+beta and 2b+beta, pushed into P^(a+b+1).
    Its degree is 2(a+b) + beta.

    Raises:
        UnsupportedConstructionError: a = 0 (the cone S(0, b))
        ConstructionError: a > b, or a class that is empty or contains the
            directrix as a fixed component
    """
    if a == 0:
        raise UnsupportedConstructionError(
            f"Divisors on the singular scroll S(0,{b}) are not constructed"
        )
    if a < 0 or a > b:
        raise ConstructionError(f"Scroll divisors need 1 ≤ a ≤ b, got a={a}, b={b}")
    if 2 * (a + b) + beta < 1:
        raise ConstructionError(f"Class 2H{beta:+d}F on S({a},{b}) has no curves")
    if 2 * a + beta < 0:
        raise ConstructionError(f"Class 2H{beta:+d}F on S({a},{b}) has a fixed component")
    if not hyperelliptic_range_ok(a, b, beta):
        logger.warning(f"S({a},{b}) with beta={beta} lies outside the hyperelliptic range filter")
    fld = field or FieldSpec()
    rng = _rng(seed)
    cox = Ring(4, fld, weights=(1, 1, b - a + 1, 1))

    def binary_form(degree: int, u: int, v: int) -> Polynomial:
        terms = {}
        for i in range(degree + 1):
            c = fld.random_element(rng, height)
            while not c:
                c = fld.random_element(rng, height)
            terms[(degree - i, i, u, v)] = c
        return Polynomial(cox, terms)

    equation = (
        binary_form(2 * a + beta, 2, 0)
        + binary_form(a + b + beta, 1, 1)
        + binary_form(2 * b + beta, 0, 2)
    )
    images = [cox.monomial((a - i, i, 1, 0)) for i in range(a + 1)]
    images += [cox.monomial((b - j, j, 0, 1)) for j in range(b + 1)]
    ideal = kernel_of_ring_map(cox, images, [equation])
    logger.info(
        f"Curve of class 2H{beta:+d}F on S({a},{b}) (seed {seed}): degree {2 * (a + b) + beta}, "
        f"{len(ideal)} generators"
    )
    return ideal


def vanishes_on_parametrization(
    ideal: Ideal,
    images: Sequence[Polynomial],
    samples: int = 25,
    seed: int = 0,
    height: int = RANDOM_HEIGHT
) -> bool:
    """Every generator vanishes at the images of ``samples`` random parameter points."""
    fld = ideal.ring.field
    rng = _rng(seed)
    nparams = images[0].ring.nvars
    for _ in range(samples):
        point = [fld.random_element(rng, height) for _ in range(nparams)]
        values = [img.evaluate(point) for img in images]
        if any(g.evaluate(values) for g in ideal.generators):
            return False
    return True
