import pytest

from shardkit.access.formula import (
    And,
    Literal,
    MinimalClauseSet,
    Or,
    ThresholdGate,
    check_universe,
    evaluate_formula,
    literals,
    minimal_clauses,
    subsets,
)
from shardkit.errors import EnumerationLimitError, ParameterError

VAULT = ["o", "m1", "m2", "m3", "s1", "s2", "s3"]


def lits(*ids):
    return tuple(Literal(h) for h in ids)


def crucial_vault():
    managers = lits("m1", "m2", "m3")
    leaders = lits("s1", "s2", "s3")
    return And(lits("o", "sec") + (
        Or((ThresholdGate(2, managers), And((Or(managers), Or(leaders))))),
    ))


def test_any_two_of_seven():
    f = ThresholdGate(2, lits(*VAULT))
    assert evaluate_formula(f, {"o", "m1"})
    assert not evaluate_formula(f, {"s3"})


def test_weighted_vault():
    f = Or((
        Literal("o"),
        ThresholdGate(2, lits("m1", "m2", "m3")),
        And((ThresholdGate(2, lits("s1", "s2", "s3")), Or(lits("m1", "m2", "m3")))),
    ))
    assert evaluate_formula(f, {"o"})
    assert evaluate_formula(f, {"m1", "s1", "s3"})
    assert not evaluate_formula(f, {"m1", "s1"})


def test_operand_counts_are_checked():
    with pytest.raises(ParameterError):
        And((Literal("a"),))
    with pytest.raises(ParameterError):
        Or((Literal("a"),))
    with pytest.raises(ParameterError, match="k=3"):
        ThresholdGate(3, lits("a", "b"))
    with pytest.raises(ParameterError):
        ThresholdGate(0, lits("a", "b"))


def test_literals_are_sorted_and_unique():
    assert literals(crucial_vault()) == ["m1", "m2", "m3", "o", "s1", "s2", "s3", "sec"]


def test_subsets_order():
    assert [sorted(s) for s in subsets(["a", "b", "c"])] == [
        [], ["a"], ["b"], ["c"], ["a", "b"], ["a", "c"], ["b", "c"], ["a", "b", "c"],
    ]


def test_crucial_vault_has_twelve_clauses_of_four():
    f = crucial_vault()
    clauses = minimal_clauses(f, literals(f))
    assert len(clauses) == 12
    assert {len(c) for c in clauses} == {4}
    assert clauses.core() == frozenset({"o", "sec"})
    assert clauses.sorted()[0] == frozenset({"o", "sec", "m1", "m2"})


def test_chain_clauses():
    f = Or((And(lits("A", "B")), And(lits("B", "C")), And(lits("C", "D"))))
    clauses = minimal_clauses(f, "ABCD")
    assert set(clauses.clauses) == {frozenset("AB"), frozenset("BC"), frozenset("CD")}
    assert clauses.core() == frozenset()


def test_cnf_clauses():
    f = And((Literal("U1"), Or(lits("U2", "U3")), Or(lits("U2", "U4"))))
    clauses = minimal_clauses(f, literals(f))
    assert clauses.sorted() == [frozenset({"U1", "U2"}), frozenset({"U1", "U3", "U4"})]


def test_clause_set_must_be_an_antichain():
    with pytest.raises(ParameterError, match="contained"):
        MinimalClauseSet(frozenset({frozenset("a"), frozenset("ab")}))


def test_clause_set_to_formula_round_trip():
    f = crucial_vault()
    clauses = minimal_clauses(f, literals(f))
    again = minimal_clauses(clauses.to_formula(), clauses.ids())
    assert again == clauses


def test_single_clause_formula():
    clauses = MinimalClauseSet(frozenset({frozenset({"a"})}))
    assert clauses.to_formula() == Literal("a")
    with pytest.raises(ParameterError):
        MinimalClauseSet(frozenset()).to_formula()


def test_enumeration_limit():
    ids = [f"h{i:02d}" for i in range(21)]
    with pytest.raises(EnumerationLimitError):
        check_universe(ids)
    assert check_universe(ids[:20]) == ids[:20]
    with pytest.raises(EnumerationLimitError):
        minimal_clauses(Or(lits(*ids)), ids)
