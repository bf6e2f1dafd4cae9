"""Share counts of the clause-per-scheme construction, with and without
factoring out the ids common to every clause."""
from dataclasses import dataclass

from shardkit.access.formula import MinimalClauseSet
from shardkit.errors import ParameterError
from shardkit.sharing.scheme import Child, Leaf, SlotKind, Threshold


@dataclass(frozen=True)
class NaiveCounts:
    per_clause_total: int
    factored_total: int


def naive_share_counts(clauses: MinimalClauseSet) -> NaiveCounts:
    if not clauses.clauses:
        raise ParameterError("no clauses to count")
    core = clauses.core()
    per_clause = sum(len(c) for c in clauses.clauses)
    factored = len(core) + sum(len(c - core) for c in clauses.clauses)
    return NaiveCounts(per_clause, factored)


def _all_of(ids) -> Threshold:
    return Threshold(len(ids), tuple(Child(Leaf(h)) for h in sorted(ids)))


def _any_of(nodes) -> Threshold:
    return Threshold(1, tuple(Child(n) for n in nodes))


def naive_scheme(clauses: MinimalClauseSet, factored: bool = False) -> Threshold:
    """The scheme whose leaf count `naive_share_counts` reports.

    Unfactored: an (|c|,|c|) scheme per clause under a (1, m) root.
    Factored: the common core become crucial leaves of the root, whose
    one normal child is the (1, m) node over the residual clauses.
    """
    if not clauses.clauses:
        raise ParameterError("no clauses to build a scheme from")
    ordered = clauses.sorted()
    core = clauses.core()
    residual = [c - core for c in ordered]
    if not factored or not core or any(not c for c in residual):
        return _any_of(_all_of(c) for c in ordered)

    crucial = tuple(Child(Leaf(h), SlotKind.CRUCIAL) for h in sorted(core))
    return Threshold(1, crucial + (Child(_any_of(_all_of(c) for c in residual)),))
