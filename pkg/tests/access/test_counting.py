import pytest

from shardkit.access.counting import naive_scheme, naive_share_counts
from shardkit.access.equivalence import verify_equivalence
from shardkit.access.formula import And, Literal, MinimalClauseSet, Or, ThresholdGate, literals, minimal_clauses
from shardkit.errors import ParameterError
from shardkit.sharing.scheme import SlotKind, total_shares


def lits(*ids):
    return tuple(Literal(h) for h in ids)


@pytest.fixture(scope="module")
def vault_clauses():
    managers = lits("m1", "m2", "m3")
    f = And(lits("o", "sec") + (
        Or((ThresholdGate(2, managers), And((Or(managers), Or(lits("s1", "s2", "s3")))))),
    ))
    return f, minimal_clauses(f, literals(f))


def test_vault_counts(vault_clauses):
    _, clauses = vault_clauses
    counts = naive_share_counts(clauses)
    assert (counts.per_clause_total, counts.factored_total) == (48, 26)


def test_naive_schemes_have_the_counted_leaves(vault_clauses):
    _, clauses = vault_clauses
    assert total_shares(naive_scheme(clauses)) == 48
    factored = naive_scheme(clauses, factored=True)
    assert total_shares(factored) == 26
    assert [c.kind for c in factored.children] == [SlotKind.CRUCIAL, SlotKind.CRUCIAL, SlotKind.NORMAL]


@pytest.mark.slow
@pytest.mark.parametrize("factored", [False, True])
def test_naive_schemes_realize_the_formula(vault_clauses, factored):
    f, clauses = vault_clauses
    assert verify_equivalence(naive_scheme(clauses, factored), f).equivalent


def test_without_common_ids_factoring_changes_nothing():
    clauses = MinimalClauseSet(frozenset({frozenset("AB"), frozenset("BC"), frozenset("CD")}))
    counts = naive_share_counts(clauses)
    assert counts.per_clause_total == counts.factored_total == 6
    assert naive_scheme(clauses, factored=True) == naive_scheme(clauses)


def test_empty_clause_set():
    with pytest.raises(ParameterError):
        naive_share_counts(MinimalClauseSet(frozenset()))
    with pytest.raises(ParameterError):
        naive_scheme(MinimalClauseSet(frozenset()))
