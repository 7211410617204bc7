"""Query language: parsing, printing, sort checking, evaluation."""

import hypothesis.strategies as st
import pytest
from hypothesis import given

from affordances import rough
from affordances.affordance import Sort
from affordances.dsl import (
    Complement,
    Cylindrify,
    Diff,
    Intersect,
    LowerApprox,
    OpCall,
    SetName,
    Union,
    UpperApprox,
    check_sorts,
    evaluate,
    parse,
    print_query,
)
from affordances.errors import (
    QuerySyntaxError,
    SortMismatch,
    UnknownOperatorName,
    UnknownSetName,
)
from affordances.operators import FULL_MASK, RelationSelector
from query_corpus import MALFORMED, VALID


def test_parse_op_call_with_default_selector():
    assert parse("poss[E; raw](X, Y)") == OpCall(
        "poss", Sort.E, SetName("X"), SetName("Y"))
    assert parse("poss[E](X, Y)") == parse("poss[E; raw](X, Y)")


def test_parse_mask():
    got = parse("alpha_up[A; mask=23](S, P)")
    assert got == OpCall("alpha_up", Sort.A, SetName("S"), SetName("P"),
                         RelationSelector.RAW, frozenset({2, 3}))


def test_parse_mask_defaults():
    assert parse("alpha_up[E](X, Y)").mask == FULL_MASK
    assert parse("alpha_low[E](X, Y)").mask is None
    assert parse("poss[E](X, Y)").mask is None


def test_parse_nested_approximations():
    got = parse("poss[E; upper](up(X)@A, up(Y)@O)")
    assert got == OpCall("poss", Sort.E,
                         UpperApprox(SetName("X"), Sort.A),
                         UpperApprox(SetName("Y"), Sort.O),
                         RelationSelector.UPPER)


def test_parse_cylindrify_takes_no_arguments():
    assert parse("cyl[E; lower]") == Cylindrify(Sort.E, RelationSelector.LOWER)


def test_parse_set_algebra_is_left_associative():
    got = parse("X | Y & Z \\ W")
    assert got == Diff(Intersect(Union(SetName("X"), SetName("Y")),
                                 SetName("Z")), SetName("W"))
    grouped = parse("X | (Y & Z)")
    assert grouped == Union(SetName("X"), Intersect(SetName("Y"), SetName("Z")))


def test_parse_complement_and_tags():
    assert parse("!(X)@A") == Complement(SetName("X"), Sort.A)
    assert parse("X@O") == SetName("X", Sort.O)
    assert parse("low(X | Y)@E") == LowerApprox(
        Union(SetName("X"), SetName("Y")), Sort.E)


@pytest.mark.parametrize("text", VALID)
def test_corpus_round_trip(text):
    tree = parse(text)
    printed = print_query(tree)
    assert parse(printed) == tree
    assert print_query(parse(printed)) == printed


def test_printer_drops_defaults():
    assert print_query(parse("poss[E; raw](X, Y)")) == "poss[E](X, Y)"
    assert print_query(parse("alpha_up[O; upper; mask=123](X, Y)")) \
        == "alpha_up[O; upper](X, Y)"
    assert print_query(parse("alpha_up[E; mask=31](X, Y)")) \
        == "alpha_up[E; mask=13](X, Y)"
    assert print_query(parse("X|(Y&Z)")) == "X | (Y & Z)"


@pytest.mark.parametrize("text, line, column", MALFORMED)
def test_malformed_positions(text, line, column):
    with pytest.raises(QuerySyntaxError) as err:
        parse(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_unknown_operator_name_is_its_own_error():
    with pytest.raises(UnknownOperatorName) as err:
        parse("foo[E](X, Y)")
    assert err.value.column == 1
    assert "foo" in str(err.value)


def test_syntax_error_message_shape():
    with pytest.raises(QuerySyntaxError) as err:
        parse("poss[Q](X, Y)")
    assert str(err.value).startswith("1:6: ")
    assert "'A', 'O', 'E'" in str(err.value)


_AST_NAMES = st.sampled_from(["TallPros", "Balls", "DunkSpots", "Zed", "qx"])
_AST_SORTS = st.sampled_from(list(Sort))
_AST_SELECTORS = st.sampled_from(list(RelationSelector))
_AST_MASKS = st.sampled_from([frozenset({1}), frozenset({2, 3}),
                              frozenset({1, 3}), FULL_MASK])
_PLAIN_OPS = st.sampled_from(["poss", "suff", "nec", "dusuff", "suffstar",
                              "necu", "possu", "alpha_low"])


def _grow(children):
    return st.one_of(
        st.builds(Union, children, children),
        st.builds(Intersect, children, children),
        st.builds(Diff, children, children),
        st.builds(Complement, children, _AST_SORTS),
        st.builds(UpperApprox, children, _AST_SORTS),
        st.builds(LowerApprox, children, _AST_SORTS),
        st.builds(OpCall, _PLAIN_OPS, _AST_SORTS, children, children,
                  _AST_SELECTORS),
        st.builds(OpCall, st.just("alpha_up"), _AST_SORTS, children, children,
                  _AST_SELECTORS, _AST_MASKS),
        st.builds(Cylindrify, _AST_SORTS, _AST_SELECTORS),
    )


_EXPRESSIONS = st.recursive(
    st.builds(SetName, _AST_NAMES, st.none() | _AST_SORTS), _grow,
    max_leaves=8)


@given(_EXPRESSIONS)
def test_random_ast_round_trip(expr):
    assert parse(print_query(expr)) == expr


def test_check_sorts_results(dunk):
    _, sets = dunk
    declared = {name: ns.sort for name, ns in sets.items()}
    assert check_sorts(parse("poss[E](TallPros, Balls)"), declared) is Sort.E
    assert check_sorts(parse("suff[A](Balls, DunkSpots)"), declared) is Sort.A
    assert check_sorts(parse("cyl[E]"), declared) == (Sort.A, Sort.O)


def test_check_sorts_rejects_swapped_arguments(dunk):
    _, sets = dunk
    declared = {name: ns.sort for name, ns in sets.items()}
    with pytest.raises(SortMismatch, match="query.arg1: expected sort A, found O"):
        check_sorts(parse("poss[E](Balls, TallPros)"), declared)


def test_check_sorts_rejects_mixed_union(dunk):
    _, sets = dunk
    declared = {name: ns.sort for name, ns in sets.items()}
    with pytest.raises(SortMismatch, match="AxO"):
        check_sorts(parse("cyl[E] | DunkSpots"), declared)
    with pytest.raises(SortMismatch, match="query: expected sort A, found O"):
        check_sorts(parse("TallPros | Balls"), declared)


def test_check_sorts_rejects_wrong_tag(dunk):
    _, sets = dunk
    declared = {name: ns.sort for name, ns in sets.items()}
    with pytest.raises(SortMismatch, match="expected sort O, found A"):
        check_sorts(parse("TallPros@O"), declared)


def test_check_sorts_reports_unknown_names(dunk):
    _, sets = dunk
    declared = {name: ns.sort for name, ns in sets.items()}
    with pytest.raises(UnknownSetName, match="Nope"):
        check_sorts(parse("poss[E](TallPros, Nope)"), declared)


def test_evaluate_op_call(dunk):
    structure, sets = dunk
    got = evaluate(parse("poss[E](TallPros, Balls)"), structure, sets)
    assert got == frozenset({"e1", "e2", "e3", "e4", "e9"})


def test_evaluate_vacuous_sufficiency(dunk):
    structure, sets = dunk
    got = evaluate(parse("suff[E](Empty, Balls)"), structure, sets)
    assert got == frozenset(structure.environments.objects)


def test_evaluate_set_algebra(dunk):
    structure, sets = dunk
    balls = sets["Balls"].members
    basketballs = sets["Basketballs"].members
    assert evaluate(parse("Balls \\ Basketballs"), structure, sets) \
        == balls - basketballs
    assert evaluate(parse("Balls & Basketballs"), structure, sets) \
        == basketballs
    assert evaluate(parse("!(Balls)@O"), structure, sets) \
        == frozenset(structure.objects.objects) - balls


def test_evaluate_approximations_match_rough(dunk):
    structure, sets = dunk
    members = sets["TallPros"].members
    partition = structure.partition(Sort.A)
    assert evaluate(parse("up(TallPros)@A"), structure, sets) \
        == rough.upper(partition, members)
    assert evaluate(parse("low(TallPros)@A"), structure, sets) \
        == rough.lower(partition, members)


def test_evaluate_cylindrify_projects_phi(dunk):
    structure, sets = dunk
    got = evaluate(parse("cyl[E]"), structure, sets)
    assert got == frozenset({(t.a, t.o) for t in structure.phi})
    assert len(got) == 8


def test_evaluate_mask_default_is_full(dunk):
    structure, sets = dunk
    explicit = evaluate(parse("alpha_up[E; mask=123](TallPros, Balls)"),
                        structure, sets)
    implicit = evaluate(parse("alpha_up[E](TallPros, Balls)"), structure, sets)
    assert explicit == implicit


@pytest.mark.parametrize("text", VALID)
def test_corpus_evaluates_on_sample(dunk, text):
    structure, sets = dunk
    got = evaluate(parse(text), structure, sets)
    assert isinstance(got, frozenset)
