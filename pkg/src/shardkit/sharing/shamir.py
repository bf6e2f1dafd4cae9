"""Classic (t, n) Shamir sharing: Horner dealing, Lagrange recovery of f(0)."""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from shardkit.errors import InconsistentSharesError, InsufficientSharesError, ParameterError
from shardkit.sharing.field import (
    FieldElement,
    OpCounter,
    PrimeModulus,
    RandomSource,
    add,
    div,
    mul,
    neg,
    sample_uniform,
    sub,
)


@dataclass(frozen=True)
class PolynomialSpec:
    constant: FieldElement
    coefficients: Tuple[FieldElement, ...]
    modulus: PrimeModulus

    @property
    def degree(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class Point:
    x: FieldElement
    y: FieldElement

    def __post_init__(self):
        if self.x.value == 0:
            raise ParameterError("x = 0 would reveal the constant term")


def evaluate(poly: PolynomialSpec, x: FieldElement, counter: Optional[OpCounter] = None) -> FieldElement:
    """f(x) by Horner's rule, exactly `degree` multiplications."""
    if not poly.coefficients:
        return poly.constant
    acc = poly.coefficients[-1]
    for coef in reversed(poly.coefficients[:-1]):
        acc = add(mul(acc, x, counter), coef)
    return add(mul(acc, x, counter), poly.constant)


def random_polynomial(constant: FieldElement, degree: int, rng: RandomSource) -> PolynomialSpec:
    modulus = constant.modulus
    coefficients = tuple(sample_uniform(rng, modulus) for _ in range(degree))
    return PolynomialSpec(constant, coefficients, modulus)


def deal_shamir(
    secret: FieldElement,
    t: int,
    n: int,
    rng: RandomSource,
    counter: Optional[OpCounter] = None,
) -> Tuple[PolynomialSpec, List[Point]]:
    p = secret.modulus.p
    if t < 1:
        raise ParameterError("threshold t must be at least 1")
    if t > n:
        raise ParameterError(f"threshold t={t} exceeds share count n={n}")
    if n >= p:
        raise ParameterError(f"n={n} distinct x-coordinates do not fit in GF({p})")

    poly = random_polynomial(secret, t - 1, rng)
    points = []
    for i in range(1, n + 1):
        x = secret.modulus.element(i)
        points.append(Point(x, evaluate(poly, x, counter)))
    return poly, points


def distinct_points(points: Iterable[Point]) -> List[Point]:
    """Collapse equal copies, reject one x carrying two y values. Sorted by x."""
    by_x: Dict[int, Point] = {}
    for point in points:
        seen = by_x.get(point.x.value)
        if seen is None:
            by_x[point.x.value] = point
        elif seen.y != point.y:
            raise InconsistentSharesError()
    return [by_x[x] for x in sorted(by_x)]


def interpolate_at_zero(points: Sequence[Point], counter: Optional[OpCounter] = None) -> FieldElement:
    """Σ yᵢ·Π_{j≠i} (−xⱼ)/(xᵢ−xⱼ): t·(t−1) multiplications for t points."""
    secret = points[0].y.modulus.zero()
    for i, pi in enumerate(points):
        term = pi.y
        for j, pj in enumerate(points):
            if i != j:
                term = mul(term, div(neg(pj.x), sub(pi.x, pj.x), counter), counter)
        secret = add(secret, term)
    return secret


def reconstruct_shamir(
    points: Iterable[Point],
    t: int,
    counter: Optional[OpCounter] = None,
    insufficient_message: str = "insufficient shares",
) -> FieldElement:
    """Interpolate the first t distinct points, then check every extra point.

    `counter` tallies only the t-point interpolation; the re-interpolations
    that check extra points against it are not counted.
    """
    if t < 1:
        raise ParameterError("threshold t must be at least 1")
    unique = distinct_points(points)
    if len(unique) < t:
        raise InsufficientSharesError(insufficient_message)

    base = unique[:t]
    secret = interpolate_at_zero(base, counter)
    # Swapping any extra point into the base must give the same f(0);
    # otherwise the extra point is off the polynomial.
    for extra in unique[t:]:
        if interpolate_at_zero(base[:-1] + [extra]) != secret:
            raise InconsistentSharesError()
    return secret
