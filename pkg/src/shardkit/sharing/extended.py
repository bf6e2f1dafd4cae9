"""Shamir sharing with crucial and mutual-redundant shares.

The dealer draws r crucial offsets R₁..R_r and k−1 coefficients, then
shares S′ = S + ΣRᵢ on a degree k−1 polynomial. Crucial holders get
their Rᵢ; every normal slot gets its own point; all members of one
redundant group get copies of a single point. Recovery interpolates S′
from k distinct points and subtracts every Rᵢ.

k counts distinct evaluation points and r counts crucial shares, so a
scheme needs k + r participants. Formal statements of the construction
that speak of a threshold t mean t = k + r; worked examples that call
the point count "the threshold" mean t = k.
"""
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from shardkit.errors import CrucialShareMissingError, InconsistentSharesError, ParameterError
from shardkit.sharing.field import (
    FieldElement,
    OpCounter,
    PrimeModulus,
    RandomSource,
    add,
    sample_uniform,
    sub,
)
from shardkit.sharing.scheme import (
    Child,
    CrucialValue,
    ExtendedShare,
    Leaf,
    Payload,
    PointValue,
    ShareBundle,
    ShareSlot,
    SlotKind,
    Threshold,
    layout,
    scheme_fingerprint,
    validate_slots,
)
from shardkit.sharing.shamir import Point, evaluate, random_polynomial, reconstruct_shamir
from shardkit.sharing.sharing_logger import SharingLogger

logger = SharingLogger()


@dataclass(frozen=True)
class ExtendedParams:
    k: int
    modulus: PrimeModulus
    issuance: Tuple[ShareSlot, ...]

    def __post_init__(self):
        validate_slots(self.k, list(self.issuance), self.modulus)

    @property
    def r(self) -> int:
        return sum(1 for s in self.issuance if s.kind is SlotKind.CRUCIAL)

    @property
    def n(self) -> int:
        return len(self.issuance)

    @property
    def distinct_points(self) -> int:
        return len({pl.x for pl in layout(self.issuance) if pl.x is not None})

    def as_scheme(self) -> Threshold:
        return Threshold(
            self.k,
            tuple(Child(Leaf(s.holder), s.kind, s.group) for s in self.issuance),
        )


def deal_level(
    secret: FieldElement,
    k: int,
    slots: Sequence[ShareSlot],
    rng: RandomSource,
    counter: Optional[OpCounter] = None,
) -> List[Payload]:
    """One payload per slot, in slot order. Draw order: R₁..R_r, then a₁..a_{k−1}."""
    modulus = secret.modulus
    placements = layout(slots)
    r = sum(1 for pl in placements if pl.crucial_index is not None)

    offsets = [sample_uniform(rng, modulus) for _ in range(r)]
    shifted = secret
    for offset in offsets:
        shifted = add(shifted, offset)
    poly = random_polynomial(shifted, k - 1, rng)

    points: Dict[int, FieldElement] = {}
    payloads: List[Payload] = []
    for slot, placement in zip(slots, placements):
        if placement.crucial_index is not None:
            payloads.append(CrucialValue(placement.crucial_index, offsets[placement.crucial_index - 1]))
            continue
        if placement.x not in points:
            # Copies inside a redundant group reuse the first evaluation.
            points[placement.x] = evaluate(poly, modulus.element(placement.x), counter)
        payloads.append(PointValue(modulus.element(placement.x), points[placement.x], slot.group))
    return payloads


def deal_extended(
    secret: FieldElement,
    params: ExtendedParams,
    rng: RandomSource,
    counter: Optional[OpCounter] = None,
) -> ShareBundle:
    if secret.modulus.p != params.modulus.p:
        raise ParameterError(f"secret is not in GF({params.modulus.p})")
    start = time.perf_counter()
    scheme_id = scheme_fingerprint(params.as_scheme())
    bundle = ShareBundle(params.modulus, scheme_id)
    payloads = deal_level(secret, params.k, params.issuance, rng, counter)
    for index, (slot, payload) in enumerate(zip(params.issuance, payloads)):
        bundle.shares.setdefault(slot.holder, []).append(ExtendedShare(slot.holder, payload, (index,)))
    logger.log_deal(scheme_id, len(bundle.shares), params.n, time.perf_counter() - start)
    return bundle


def recover_level(
    payloads: Iterable[Payload],
    k: int,
    r: int,
    counter: Optional[OpCounter] = None,
) -> FieldElement:
    offsets: Dict[int, FieldElement] = {}
    points = []
    for payload in payloads:
        if isinstance(payload, CrucialValue):
            seen = offsets.setdefault(payload.index, payload.value)
            if seen != payload.value:
                raise InconsistentSharesError()
        else:
            points.append(Point(payload.x, payload.y))

    if any(i not in offsets for i in range(1, r + 1)):
        raise CrucialShareMissingError()
    shifted = reconstruct_shamir(points, k, counter, "insufficient distinct shares")
    for index in sorted(offsets):
        shifted = sub(shifted, offsets[index])
    return shifted


def reconstruct_extended(
    shares: Iterable[ExtendedShare],
    params: ExtendedParams,
    counter: Optional[OpCounter] = None,
) -> FieldElement:
    return recover_level((s.payload for s in shares), params.k, params.r, counter)


def authorized_extended(held: Iterable[ShareSlot], params: ExtendedParams) -> bool:
    """All crucial slots present and at least k distinct points among the rest."""
    held = set(held)
    points = set()
    for slot, placement in zip(params.issuance, layout(params.issuance)):
        if slot not in held:
            if placement.crucial_index is not None:
                return False
            continue
        if placement.x is not None:
            points.add(placement.x)
    return len(points) >= params.k


def deal_additive(
    secret: FieldElement,
    holder_ids: Sequence[str],
    rng: RandomSource,
) -> Dict[str, FieldElement]:
    """S = Σ rᵢ + r′: every holder is needed, nobody alone learns anything."""
    if not holder_ids:
        raise ParameterError("additive sharing needs at least one holder")
    if len(set(holder_ids)) != len(holder_ids):
        raise ParameterError("holder ids must be unique")
    values = [sample_uniform(rng, secret.modulus) for _ in holder_ids[:-1]]
    last = secret
    for value in values:
        last = sub(last, value)
    return dict(zip(holder_ids, values + [last]))


def reconstruct_additive(values: Iterable[FieldElement]) -> FieldElement:
    values = list(values)
    if not values:
        raise ParameterError("no additive shares given")
    total = values[0]
    for value in values[1:]:
        total = add(total, value)
    return total
