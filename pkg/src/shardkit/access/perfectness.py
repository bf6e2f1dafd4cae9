"""Brute-force perfectness: what does a coalition learn about the secret?

For a small prime every dealer randomness vector is dealt once. A
coalition's view is the tuple of share values its members hold; the
count of (secret, randomness) pairs per candidate secret that reproduce
an observed view is uniform exactly when the view says nothing about
the secret.

Share values are linear in (secret, randomness), so
deal(s, v) = deal(0, v) + s * deal(1, 0). Only the p^d dealings at
secret 0 are run; each one is matched against the view shifted back by
every candidate secret.
"""
import itertools
import logging
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from shardkit.errors import EnumerationLimitError
from shardkit.sharing.compartments import deal_payloads
from shardkit.sharing.field import PrimeModulus, ReplayRandom, make_rng
from shardkit.sharing.scheme import (
    CrucialValue,
    SchemeNode,
    iter_leaves,
    randomness_dimension,
    validate_tree,
)
from shardkit.sharing.sharing_logger import SharingLogger
from shardkit.utils import timer

logger = SharingLogger()

MAX_PRIME = 13
MAX_STATES = 10 ** 7


@dataclass(frozen=True)
class SecretDistribution:
    counts: Tuple[int, ...]
    true_secret: int

    @property
    def support(self) -> List[int]:
        return [s for s, c in enumerate(self.counts) if c]

    @property
    def uniform(self) -> bool:
        return len(set(self.counts)) == 1 and self.counts[0] > 0

    @property
    def point_mass(self) -> bool:
        return self.support == [self.true_secret]


class PerfectnessEnumerator:

    def __init__(self, scheme: SchemeNode, p: int):
        if p > MAX_PRIME:
            raise EnumerationLimitError(f"perfectness enumeration needs p <= {MAX_PRIME}, got {p}")
        self.modulus = PrimeModulus(p)
        validate_tree(scheme, self.modulus)
        self.scheme = scheme
        self.dimension = randomness_dimension(scheme)
        if p ** self.dimension > MAX_STATES:
            raise EnumerationLimitError(
                f"state space too large: {p}^{self.dimension} randomness assignments"
            )
        self.leaf_holders = [leaf.holder for _, leaf in sorted(iter_leaves(scheme))]
        self.unit = self.deal(1, [0] * self.dimension)

    def deal(self, secret: int, randomness: Sequence[int]) -> Tuple[int, ...]:
        """Share values of every leaf, in path order."""
        payloads = deal_payloads(self.modulus.element(secret), self.scheme, ReplayRandom(randomness))
        return tuple(
            (payload.value if isinstance(payload, CrucialValue) else payload.y).value
            for _, _, payload in payloads
        )

    def default_randomness(self) -> List[int]:
        rng = make_rng(0)
        return [rng.randrange(self.modulus.p) for _ in range(self.dimension)]

    def distributions(
        self,
        subsets: Sequence[Iterable[str]],
        secret: int = 0,
        randomness: Optional[Sequence[int]] = None,
    ) -> List[SecretDistribution]:
        """One pass over all randomness vectors answers every subset."""
        p = self.modulus.p
        secret %= p
        observed = self.deal(secret, self.default_randomness() if randomness is None else randomness)

        views = []
        for subset in subsets:
            members = set(subset)
            positions = [i for i, h in enumerate(self.leaf_holders) if h in members]
            # The secret-0 view that secret s would need to reproduce `observed`.
            targets: Dict[Tuple[int, ...], List[int]] = {}
            for s in range(p):
                key = tuple((observed[i] - s * self.unit[i]) % p for i in positions)
                targets.setdefault(key, []).append(s)
            views.append((positions, targets, [0] * p))

        start = time.perf_counter()
        for vector in itertools.product(range(p), repeat=self.dimension):
            row = self.deal(0, vector)
            for positions, targets, counts in views:
                for s in targets.get(tuple(row[i] for i in positions), ()):
                    counts[s] += 1
        logger.log_enumeration("dealings", p ** self.dimension, time.perf_counter() - start)

        return [SecretDistribution(tuple(counts), secret) for _, _, counts in views]

    def distribution(
        self,
        subset: Iterable[str],
        secret: int = 0,
        randomness: Optional[Sequence[int]] = None,
    ) -> SecretDistribution:
        return self.distributions([subset], secret, randomness)[0]


@timer(log_level=logging.DEBUG)
def perfectness_check(
    scheme: SchemeNode,
    p: int,
    subset: Iterable[str],
    secret: int = 0,
    randomness: Optional[Sequence[int]] = None,
) -> SecretDistribution:
    return PerfectnessEnumerator(scheme, p).distribution(subset, secret, randomness)
