"""Formula → scheme compiler.

First try a single extended level: ids in every minimal clause become
crucial shares, interchangeable ids that never meet in a clause become
one redundant group, and what is left must be "any k of these points".
Formulas that do not fit get a compartment tree with one node per
operator: and → (n, n), or → (1, n), thr(k) → (k, n).
"""
import logging
from dataclasses import dataclass
from math import comb
from typing import FrozenSet, Iterable, List, Optional, Set

from shardkit.access.equivalence import verify_equivalence
from shardkit.access.formula import (
    AccessFormula,
    And,
    Literal,
    MinimalClauseSet,
    Or,
    check_universe,
    literals,
    minimal_clauses,
)
from shardkit.errors import CompilerError
from shardkit.sharing.scheme import (
    Child,
    Leaf,
    SchemeNode,
    SlotKind,
    Threshold,
    distinct_points,
    is_flat,
    shares_per_holder,
)
from shardkit.utils import timer

Clauses = Set[FrozenSet[str]]


@dataclass(frozen=True)
class CompileReport:
    scheme: Threshold
    ideal: bool
    total_shares: int
    max_shares_per_holder: int
    flattened: bool
    distinct_points: int


def _swap(clauses: Clauses, a: str, b: str) -> Clauses:
    swap = {a: b, b: a}
    return {frozenset(swap.get(h, h) for h in c) for c in clauses}


def mergeable(clauses: Clauses, a: str, b: str) -> bool:
    """a and b never share a clause, and exchanging them is a symmetry."""
    if any(a in c and b in c for c in clauses):
        return False
    return _swap(clauses, a, b) == clauses


def redundant_groups(clauses: Clauses) -> List[List[str]]:
    """Greedy pairwise merge in lexicographic id order."""
    groups: List[List[str]] = []
    for h in sorted({h for c in clauses for h in c}):
        for group in groups:
            if all(mergeable(clauses, member, h) for member in group):
                group.append(h)
                break
        else:
            groups.append([h])
    return groups


def collapse(clauses: Clauses, groups: List[List[str]]) -> Clauses:
    """Replace every id by its group's first member."""
    rep = {member: group[0] for group in groups for member in group}
    return {frozenset(rep[h] for h in c) for c in clauses}


def expand(clauses: Clauses, groups: List[List[str]]) -> Clauses:
    """Inverse of `collapse`: every representative may stand for any member."""
    members = {group[0]: group for group in groups}
    expanded: Clauses = set()
    for clause in clauses:
        partial = [frozenset()]
        for h in clause:
            partial = [p | {m} for p in partial for m in members.get(h, [h])]
        expanded.update(partial)
    return expanded


def _all_k_subsets(clauses: Clauses, units: Iterable[str]) -> Optional[int]:
    sizes = {len(c) for c in clauses}
    if len(sizes) != 1:
        return None
    k = sizes.pop()
    units = set(units)
    # C(n, k) clauses of size k over n units are exactly all k-subsets.
    return k if len(clauses) == comb(len(units), k) else None


def flatten(clauses: MinimalClauseSet) -> Optional[Threshold]:
    """A single extended level realizing the clause set, if one exists."""
    if not clauses.clauses:
        return None
    crucial = set(clauses.core())
    residual: Clauses = {c - crucial for c in clauses.clauses}
    if residual == {frozenset()}:
        # Everyone is crucial; keep the last one as the single point, k = 1.
        last = max(crucial)
        crucial.discard(last)
        residual = {frozenset({last})}
    groups = redundant_groups(residual)
    merged = collapse(residual, groups)
    k = _all_k_subsets(merged, (g[0] for g in groups))
    if k is None:
        return None

    children = [Child(Leaf(h), SlotKind.CRUCIAL) for h in sorted(crucial)]
    for number, group in enumerate((g for g in groups if len(g) > 1), start=1):
        children.extend(Child(Leaf(h), SlotKind.REDUNDANT, f"g{number}") for h in group)
    children.extend(Child(Leaf(g[0])) for g in groups if len(g) == 1)
    return Threshold(k, tuple(children))


def _node(f: AccessFormula) -> SchemeNode:
    if isinstance(f, Literal):
        return Leaf(f.holder)
    if isinstance(f, And):
        k = len(f.children)
    elif isinstance(f, Or):
        k = 1
    else:
        k = f.k
    return Threshold(k, tuple(Child(_node(c)) for c in f.children))


def formula_tree(f: AccessFormula) -> Threshold:
    """One threshold node per operator of the formula."""
    node = _node(f)
    return node if isinstance(node, Threshold) else Threshold(1, (Child(node),))


@timer(log_level=logging.DEBUG)
def compile_formula(f: AccessFormula, universe: Optional[Iterable[str]] = None) -> CompileReport:
    ids = check_universe(literals(f) if universe is None else universe)
    clauses = minimal_clauses(f, ids)
    scheme = flatten(clauses)
    flattened = scheme is not None
    if scheme is None:
        scheme = formula_tree(f)

    report = verify_equivalence(scheme, f, ids)
    if not report.equivalent:
        raise CompilerError(
            f"compiler produced wrong scheme: disagrees on {sorted(report.counterexample)}"
        )
    counts = shares_per_holder(scheme)
    max_per_holder = max(counts.values())
    return CompileReport(
        scheme=scheme,
        ideal=max_per_holder == 1,
        total_shares=sum(counts.values()),
        max_shares_per_holder=max_per_holder,
        flattened=flattened and is_flat(scheme),
        distinct_points=distinct_points(scheme),
    )
