import logging
import time
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional

from shardkit.access.formula import AccessFormula, check_universe, evaluate_formula, literals, subsets
from shardkit.sharing.compartments import tree_authorized
from shardkit.sharing.scheme import SchemeNode, holders
from shardkit.sharing.sharing_logger import SharingLogger
from shardkit.utils import timer

logger = SharingLogger()


@dataclass(frozen=True)
class EquivalenceReport:
    equivalent: bool
    subsets_checked: int
    counterexample: Optional[FrozenSet[str]] = None

    def __bool__(self):
        return self.equivalent


def default_universe(scheme: SchemeNode, f: AccessFormula) -> list:
    return sorted(set(holders(scheme)) | set(literals(f)))


@timer(log_level=logging.DEBUG)
def verify_equivalence(
    scheme: SchemeNode,
    f: AccessFormula,
    universe: Optional[Iterable[str]] = None,
) -> EquivalenceReport:
    """Compare the scheme's access structure with the formula on every subset.

    The first mismatch, smallest subsets first, is returned as the
    counterexample.
    """
    ids = check_universe(default_universe(scheme, f) if universe is None else universe)
    start = time.perf_counter()
    checked = 0
    for subset in subsets(ids):
        checked += 1
        if tree_authorized(subset, scheme) != evaluate_formula(f, subset):
            return EquivalenceReport(False, checked, subset)
    logger.log_enumeration("subsets", checked, time.perf_counter() - start)
    return EquivalenceReport(True, checked)
