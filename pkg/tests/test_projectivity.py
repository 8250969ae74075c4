"""Idempotents, principal acts, projectivity certificates, covers, and the
projective-cover search."""

import pytest

from monact import (
    Category,
    coproduct,
    enumerate_homs,
    functor_F_obj,
    identity_hom,
    is_cover,
    is_isomorphic,
    is_projective,
    make_act,
    make_hom,
    principal_act,
    projective_cover,
    regular_act,
    theta_act,
    validate_monoid,
)
from monact.errors import EmptyAct, NotIdempotent
from monact.fixtures import act_a, act_b, act_w, s2, theta
from monact.projectivity import generating_set, idempotents

from oracles import lifting_projective

ACTO, ACT0 = Category.ACTO, Category.ACT0


def _k4():
    """1, 0, a, b with a² = 1, ab = ba = b, b² = 0."""
    return validate_monoid(
        ("1", "0", "a", "b"),
        ((0, 1, 2, 3), (1, 1, 1, 1), (2, 1, 0, 3), (3, 1, 3, 1)),
        one=0, zero=1)


# ---------------------------------------------------------------------------
# idempotents and principal acts


def test_idempotents():
    assert idempotents(s2()) == [0, 1]
    assert idempotents(_k4()) == [0, 1]


def test_principal_acts():
    m = s2()
    s1 = principal_act(m, m.one, ACT0)
    assert is_isomorphic(s1, regular_act(m, ACT0)) is not None
    s0 = principal_act(m, m.zero, ACT0)
    assert is_isomorphic(s0, theta_act(m)) is not None
    with pytest.raises(NotIdempotent):
        principal_act(_k4(), 3)  # b is not idempotent


# ---------------------------------------------------------------------------
# projectivity


def test_projective_fixtures():
    assert is_projective(theta(), ACT0) is not None
    assert is_projective(act_a(), ACT0) is not None
    cert = is_projective(act_w(), ACT0)
    assert cert is not None and len(cert.parts) == 2


def test_non_projective_act():
    # indecomposable of size 3 over S2, but the principal acts have size 2, 1
    assert is_projective(act_w(None, ACTO), ACTO) is None


def test_projectivity_certificate_is_checkable():
    cert = is_projective(act_w(), ACT0)
    for comp, e, iso in cert.parts:
        assert cert.act.monoid.mul[e][e] == e
        assert iso.is_injective() and iso.is_surjective()


def test_functor_image_of_free_act_is_projective():
    m = s2()
    free2 = coproduct(ACTO, [regular_act(m), regular_act(m)]).act
    assert is_projective(free2, ACTO) is not None
    f_free2, _ = functor_F_obj(free2)
    assert is_projective(f_free2, ACT0) is not None


def test_projectivity_agrees_with_the_lifting_oracle_on_fixtures():
    for act, category in ((act_a(), ACT0), (act_w(), ACT0),
                          (act_w(None, ACTO), ACTO), (act_b(), ACTO)):
        assert (is_projective(act, category) is not None) == \
            lifting_projective(act, category, size_bound=4)


def test_projectivity_rejects_empty():
    from monact import empty_act
    with pytest.raises(EmptyAct):
        is_projective(empty_act(s2()), ACTO)


# ---------------------------------------------------------------------------
# covers


def test_identity_on_hollow_act_is_a_cover():
    cover = is_cover(identity_hom(act_a()))
    assert cover is not None
    # evidence: the unique maximal proper subact misses "a"
    (sub, missed), = cover.evidence
    assert sub.label_set() == ("θ",) and missed == 1


def test_surjection_that_is_not_a_cover():
    b = act_b()
    _, pi = functor_F_obj(b)
    assert pi.is_surjective()
    assert is_cover(pi) is None  # {θ, a} already surjects


def test_non_surjection_is_not_a_cover():
    w = act_w()
    f = make_hom(act_a(), w, (0, 1))
    assert is_cover(f) is None


def test_generating_sets():
    assert generating_set(act_a()) == [1]
    assert sorted(generating_set(act_w())) == [1, 2]
    assert generating_set(regular_act(s2())) == [0]


# ---------------------------------------------------------------------------
# projective covers


def test_projective_cover_of_projective_act_is_an_iso():
    for act in (theta(), act_a(), act_w()):
        cover = projective_cover(act, ACT0)
        assert cover is not None
        assert cover.epi.source.size == act.size
        assert is_cover(cover.epi) is not None
        assert is_projective(cover.epi.source, ACT0) is not None


def test_projective_cover_in_acto_needs_a_bigger_domain():
    w = act_w(None, ACTO)
    cover = projective_cover(w, ACTO)
    assert cover is not None
    # S ⊔ S, one copy of S per generator
    assert cover.epi.source.size == 4
    assert is_projective(cover.epi.source, ACTO) is not None


def test_projective_cover_respects_explicit_bound():
    w = act_w(None, ACTO)
    assert projective_cover(w, ACTO, size_bound=3) is None


def test_default_bound_covers_many_generators():
    """A wedge of three two-element acts over a four-element monoid: the
    smallest projective cover has 10 elements, more than |A| + |S| = 8."""
    m = _k4()
    act = make_act(m, ("θ", "x", "y", "z"),
                   ((0, 1, 2, 3), (0, 0, 0, 0), (0, 1, 2, 3), (0, 0, 0, 0)),
                   ACT0, 0)
    assert projective_cover(act, ACT0, size_bound=8) is None
    cover = projective_cover(act, ACT0)
    assert cover is not None
    assert cover.epi.source.size == 10
