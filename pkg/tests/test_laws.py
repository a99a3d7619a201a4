from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from aggroup.core import validate
from aggroup.laws import (
    VII_POINTWISE,
    EvaluationError,
    Ident,
    Inv,
    Law,
    LawSyntaxError,
    Mul,
    Var,
    builtin_laws,
    check_law,
    evaluate,
    format_law,
    format_term,
    parse_law,
    parse_term,
    run_suite,
)

from conftest import E1_ROWS, E2_ROWS, cyclic_rows, table


def test_builtin_suite_has_fourteen_laws():
    laws = builtin_laws()
    assert len(laws) == 14
    assert len({nl.name for nl in laws}) == 14


def test_parse_shapes():
    assert parse_term("a*b*c") == Mul(Mul(Var("a"), Var("b")), Var("c"))
    assert parse_term("a*(b*c)") == Mul(Var("a"), Mul(Var("b"), Var("c")))
    assert parse_term("inv(a)*e") == Mul(Inv(Var("a")), Ident())
    law = parse_law("a*b = c*d => b*a = d*c")
    assert len(law.premises) == 1 and len(law.chain) == 2
    assert parse_law("x = y, y = z => x = z").variables == ("x", "y", "z")


@pytest.mark.parametrize("bad", ["", "a*", "a = ", "(a*b = c", "a => b", "a = b =>", "inv a = a", "a + b = c", "a = b c"])
def test_syntax_errors(bad):
    with pytest.raises(LawSyntaxError):
        parse_law(bad)


def test_syntax_error_position():
    with pytest.raises(LawSyntaxError) as info:
        parse_law("a*=b")
    assert info.value.pos == 2


def test_evaluate_examples():
    t = table(E1_ROWS)
    assert evaluate(parse_term("(a*b)*c"), t, {"a": 1, "b": 2, "c": 0}) == 2
    assert evaluate(parse_term("a"), t, {"a": 2}) == 2
    assert evaluate(parse_term("inv(a)"), validate(table(E2_ROWS)), {"a": 2}) == 3


def test_evaluation_errors():
    t = table(E1_ROWS)
    with pytest.raises(EvaluationError):
        evaluate(parse_term("a*b"), t, {"a": 0})
    with pytest.raises(EvaluationError):
        evaluate(parse_term("e*a"), t, {"a": 0})
    with pytest.raises(EvaluationError):
        check_law(parse_law("inv(a) = a"), t)


def test_commutativity_counterexample_on_e1():
    assert check_law(parse_law("a*b = b*a"), table(E1_ROWS)) == {"a": 0, "b": 1}
    assert check_law(parse_law("a*b = b*a"), table(cyclic_rows(4))) is None


def test_builtin_suite_on_examples():
    for rows in (E1_ROWS, E2_ROWS):
        rep = run_suite(validate(table(rows)))
        assert rep.ok, [r.name for r in rep.failures()]


def test_pointwise_right_identity_reading_is_not_a_law():
    g = validate(table(E1_ROWS))
    # 1*2 = 1 yet 2*1 = 0
    assert check_law(parse_law(VII_POINTWISE), g) == {"a": 1, "f": 2}


def test_medial_fails_on_a_non_ag_groupoid():
    # x*y = 2x + y mod 3 is medial; x*y = x*x + y mod 3 is not
    rows = [[(x * x + y) % 3 for y in range(3)] for x in range(3)]
    assert check_law(parse_law("(a*b)*(c*d) = (a*c)*(b*d)"), table(rows)) is not None


# -- differential test against a direct evaluator ------------------------------

VARS = ["a", "b", "c"]


def terms(depth=3):
    leaf = st.sampled_from(VARS).map(Var)
    return st.recursive(
        leaf | st.just(Ident()),
        lambda kids: st.one_of(st.builds(Mul, kids, kids), st.builds(Inv, kids)),
        max_leaves=6,
    )


def naive_value(t, g, env):
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Ident):
        return g.identity
    if isinstance(t, Inv):
        return g.inverse[naive_value(t.arg, g, env)]
    return g.table.entries[naive_value(t.left, g, env)][naive_value(t.right, g, env)]


def naive_check(law, g):
    names = law.variables
    for vals in product(range(g.order), repeat=len(names)):
        env = dict(zip(names, vals))
        if any(naive_value(a, g, env) != naive_value(b, g, env) for a, b in law.premises):
            continue
        vs = [naive_value(t, g, env) for t in law.chain]
        if len(set(vs)) > 1:
            return env
    return None


GROUPS = [validate(table(r)) for r in (E1_ROWS, E2_ROWS, cyclic_rows(3))]


@settings(max_examples=300, deadline=None)
@given(terms(), terms(), st.booleans(), terms(), terms(), st.sampled_from(GROUPS))
def test_check_law_matches_naive(l, r, with_premise, pl, pr, g):
    law = Law(((pl, pr),) if with_premise else (), (l, r))
    assert check_law(law, g) == naive_check(law, g)


@settings(max_examples=300, deadline=None)
@given(terms(), terms(), terms())
def test_format_parse_round_trip(a, b, c):
    law = Law(((a, b),), (b, c))
    assert parse_law(format_law(law)) == law
    assert parse_term(format_term(a)) == a
