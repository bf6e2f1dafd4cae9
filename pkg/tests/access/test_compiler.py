import pytest

from shardkit.access.compiler import (
    collapse,
    compile_formula,
    expand,
    flatten,
    formula_tree,
    mergeable,
    redundant_groups,
)
from shardkit.access.equivalence import verify_equivalence
from shardkit.access.formula import And, Literal, MinimalClauseSet, Or, ThresholdGate, literals, minimal_clauses
from shardkit.sharing.scheme import Child, Leaf, SlotKind, Threshold, shares_per_holder


def lits(*ids):
    return tuple(Literal(h) for h in ids)


def clauses(*groups):
    return {frozenset(g) for g in groups}


CRUCIAL_VAULT = And(lits("o", "sec") + (
    Or((ThresholdGate(2, lits("m1", "m2", "m3")),
        And((Or(lits("m1", "m2", "m3")), Or(lits("s1", "s2", "s3")))))),
))
CHAIN = Or((And(lits("A", "B")), And(lits("B", "C")), And(lits("C", "D"))))
CNF = And((Literal("U1"), Or(lits("U2", "U3")), Or(lits("U2", "U4"))))


def test_crucial_vault_compiles_to_one_ideal_level():
    report = compile_formula(CRUCIAL_VAULT)
    assert report.flattened
    assert report.ideal
    assert report.total_shares == 8
    assert report.max_shares_per_holder == 1
    assert report.distinct_points == 4
    scheme = report.scheme
    assert scheme.k == 2
    kinds = [(c.node.holder, c.kind, c.group) for c in scheme.children]
    assert kinds == [
        ("o", SlotKind.CRUCIAL, None),
        ("sec", SlotKind.CRUCIAL, None),
        ("s1", SlotKind.REDUNDANT, "g1"),
        ("s2", SlotKind.REDUNDANT, "g1"),
        ("s3", SlotKind.REDUNDANT, "g1"),
        ("m1", SlotKind.NORMAL, None),
        ("m2", SlotKind.NORMAL, None),
        ("m3", SlotKind.NORMAL, None),
    ]


def test_chain_needs_compartments():
    report = compile_formula(CHAIN)
    assert not report.flattened
    assert not report.ideal
    assert report.total_shares == 6
    assert shares_per_holder(report.scheme) == {"A": 1, "B": 2, "C": 2, "D": 1}
    assert verify_equivalence(report.scheme, CHAIN).equivalent


def test_cnf_compiles_to_compartments():
    report = compile_formula(CNF)
    assert not report.flattened
    assert report.scheme.k == 3
    assert shares_per_holder(report.scheme)["U2"] == 2


def test_plain_threshold_stays_plain():
    report = compile_formula(ThresholdGate(2, lits("a", "b", "c", "d")))
    assert report.flattened and report.ideal
    assert report.scheme == Threshold(2, tuple(Child(Leaf(h)) for h in "abcd"))


def test_crucial_plus_interchangeable_pair():
    # c with exactly one of x, y
    f = And((Literal("c"), Or(lits("x", "y"))))
    report = compile_formula(f)
    assert report.flattened
    assert report.scheme.k == 1
    assert [c.kind for c in report.scheme.children] == [
        SlotKind.CRUCIAL, SlotKind.REDUNDANT, SlotKind.REDUNDANT,
    ]


def test_everyone_crucial_keeps_one_point():
    report = compile_formula(And(lits("a", "b", "c")))
    assert report.flattened
    assert report.scheme == Threshold(1, (
        Child(Leaf("a"), SlotKind.CRUCIAL),
        Child(Leaf("b"), SlotKind.CRUCIAL),
        Child(Leaf("c")),
    ))


def test_single_literal():
    report = compile_formula(Literal("solo"))
    assert report.scheme == Threshold(1, (Child(Leaf("solo")),))


def test_mergeable():
    chain = clauses("AB", "BC", "CD")
    assert not mergeable(chain, "A", "B")
    assert not mergeable(chain, "A", "C")
    assert not mergeable(chain, "A", "D")
    assert mergeable(clauses("ax", "ay"), "x", "y")


def test_redundant_groups_are_greedy_in_id_order():
    assert redundant_groups(clauses({"a", "x"}, {"a", "y"}, {"a", "z"})) == [["a"], ["x", "y", "z"]]
    groups = redundant_groups(clauses({"m1", "m2"}, {"m1", "s1"}, {"m2", "s1"}, {"m1", "s2"}, {"m2", "s2"}))
    assert groups == [["m1"], ["m2"], ["s1", "s2"]]


def test_collapse_and_expand_are_inverse():
    original = clauses({"m1", "m2"}, {"m1", "s1"}, {"m1", "s2"}, {"m2", "s1"}, {"m2", "s2"})
    groups = [["m1"], ["m2"], ["s1", "s2"]]
    merged = collapse(original, groups)
    assert merged == clauses({"m1", "m2"}, {"m1", "s1"}, {"m2", "s1"})
    assert expand(merged, groups) == original


def test_flatten_refuses_the_chain():
    assert flatten(MinimalClauseSet(frozenset(clauses("AB", "BC", "CD")))) is None
    assert flatten(MinimalClauseSet(frozenset())) is None


def test_formula_tree_maps_operators_to_thresholds():
    tree = formula_tree(CNF)
    assert tree.k == 3
    assert [c.node.k for c in tree.children[1:]] == [1, 1]


@pytest.mark.slow
@pytest.mark.parametrize("f", [
    CRUCIAL_VAULT,
    CHAIN,
    CNF,
    ThresholdGate(2, lits("o", "m1", "m2", "m3", "s1", "s2", "s3")),
    And((ThresholdGate(3, lits("o", "m1", "m2", "m3", "s1", "s2", "s3")), Or(lits("o", "m1", "m2", "m3")))),
    Or((Literal("o"), ThresholdGate(2, lits("m1", "m2", "m3")),
        And((ThresholdGate(2, lits("s1", "s2", "s3")), Or(lits("m1", "m2", "m3")))))),
], ids=["crucial-vault", "chain", "cnf", "any-two", "hierarchical", "weighted"])
def test_compiled_schemes_realize_their_formula(f):
    report = compile_formula(f)
    assert verify_equivalence(report.scheme, f).equivalent
    clauses_ = minimal_clauses(f, literals(f))
    assert report.total_shares >= len(clauses_.ids())
