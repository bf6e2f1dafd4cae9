"""Monotone access formulas and their minimal authorized sets."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import AbstractSet, FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

from shardkit.errors import EnumerationLimitError, ParameterError
from shardkit.utils import timer
from shardkit.utils.settings import ENUMERATION_LIMIT


@dataclass(frozen=True)
class Literal:
    holder: str


@dataclass(frozen=True)
class And:
    children: Tuple["AccessFormula", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ParameterError("and() needs at least two operands")


@dataclass(frozen=True)
class Or:
    children: Tuple["AccessFormula", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ParameterError("or() needs at least two operands")


@dataclass(frozen=True)
class ThresholdGate:
    k: int
    children: Tuple["AccessFormula", ...]

    def __post_init__(self):
        if not 1 <= self.k <= len(self.children):
            raise ParameterError(f"thr() needs 1 <= k <= {len(self.children)}, got k={self.k}")


AccessFormula = Union[Literal, And, Or, ThresholdGate]


def evaluate_formula(f: AccessFormula, subset: AbstractSet[str]) -> bool:
    if isinstance(f, Literal):
        return f.holder in subset
    if isinstance(f, And):
        return all(evaluate_formula(c, subset) for c in f.children)
    if isinstance(f, Or):
        return any(evaluate_formula(c, subset) for c in f.children)
    return sum(1 for c in f.children if evaluate_formula(c, subset)) >= f.k


def literals(f: AccessFormula) -> List[str]:
    if isinstance(f, Literal):
        return [f.holder]
    return sorted({h for c in f.children for h in literals(c)})


def check_universe(universe: Iterable[str], limit: int = ENUMERATION_LIMIT) -> List[str]:
    ids = sorted(set(universe))
    if len(ids) > limit:
        raise EnumerationLimitError(f"{len(ids)} shareholders exceed the enumeration limit of {limit}")
    return ids


def subsets(ids: Sequence[str]) -> Iterator[FrozenSet[str]]:
    """All subsets by size, then lexicographically."""
    for size in range(len(ids) + 1):
        for combo in combinations(ids, size):
            yield frozenset(combo)


@dataclass(frozen=True)
class MinimalClauseSet:
    clauses: FrozenSet[FrozenSet[str]]

    def __post_init__(self):
        for a in self.clauses:
            for b in self.clauses:
                if a < b:
                    raise ParameterError(f"clause {sorted(a)} is contained in {sorted(b)}")

    def __len__(self):
        return len(self.clauses)

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> List[FrozenSet[str]]:
        return sorted(self.clauses, key=lambda c: (len(c), sorted(c)))

    def ids(self) -> List[str]:
        return sorted({h for c in self.clauses for h in c})

    def core(self) -> FrozenSet[str]:
        """Ids present in every clause."""
        if not self.clauses:
            return frozenset()
        return frozenset.intersection(*self.clauses)

    def to_formula(self) -> AccessFormula:
        """Disjunction of conjunctions, one per clause."""
        terms: List[AccessFormula] = []
        for clause in self.sorted():
            if not clause:
                raise ParameterError("the empty clause has no formula")
            members = tuple(Literal(h) for h in sorted(clause))
            terms.append(members[0] if len(members) == 1 else And(members))
        if not terms:
            raise ParameterError("an empty clause set has no formula")
        return terms[0] if len(terms) == 1 else Or(tuple(terms))


@timer(log_level=logging.DEBUG)
def minimal_clauses(f: AccessFormula, universe: Iterable[str]) -> MinimalClauseSet:
    ids = check_universe(universe)
    authorized = set()
    minimal = set()
    # Subsets come smallest first, so all proper subsets are already judged.
    for subset in subsets(ids):
        if not evaluate_formula(f, subset):
            continue
        authorized.add(subset)
        if not any(subset - {h} in authorized for h in subset):
            minimal.add(subset)
    return MinimalClauseSet(frozenset(minimal))
