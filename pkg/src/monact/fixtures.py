"""The small instances used throughout the test battery: the two-element
monoid with zero and the acts built over it."""

from __future__ import annotations

from .core import Act, Category, Monoid, make_act, theta_act, validate_monoid


def s2() -> Monoid:
    """({1,0}, multiplication): the unique monoid with zero of order 2."""
    return validate_monoid(("1", "0"), ((0, 1), (1, 1)), one=0, zero=1)


def act_a(monoid: Monoid = None, category: Category = Category.ACT0) -> Act:
    """{θ, a} with 0a = θ: the smallest act with a nonzero element."""
    m = monoid or s2()
    zero = 0 if category is Category.ACT0 else None
    return make_act(m, ("θ", "a"), ((0, 1), (0, 0)), category, zero)


def act_b(monoid: Monoid = None) -> Act:
    """ActA disjoint-union one extra discrete zero: an ACTO act with two
    zeros."""
    m = monoid or s2()
    return make_act(m, ("θ", "a", "θ_S"), ((0, 1, 2), (0, 0, 2)),
                    Category.ACTO, None)


def act_w(monoid: Monoid = None, category: Category = Category.ACT0) -> Act:
    """{θ, a, b} with 0a = 0b = θ: indecomposable in ACTO, decomposable in
    ACT0."""
    m = monoid or s2()
    zero = 0 if category is Category.ACT0 else None
    return make_act(m, ("θ", "a", "b"), ((0, 1, 2), (0, 0, 0)),
                    category, zero)


def theta(monoid: Monoid = None, category: Category = Category.ACT0) -> Act:
    return theta_act(monoid or s2(), category)


def fixture_workspace() -> dict:
    """Named fixtures as loaded by the CLI's --seed-fixtures flag."""
    m = s2()
    return {
        "monoids": {"S2": m},
        "acts": {
            "ActA": act_a(m),
            "ActB": act_b(m),
            "ActW": act_w(m),
            "Theta": theta(m),
        },
    }
