"""monact: a workbench for finite monoids with zero and their left acts.

The package implements the two act categories (S-Act^O with the empty initial
object and S-Act_0 with a designated zero), the gluing functor between them,
and decision procedures for projectivity, covers, hollowness, perfectness and
steadiness, all verified over exhaustively enumerated small instances."""

from .core import (
    Act,
    ActCongruence,
    ActHom,
    Category,
    Monoid,
    Subact,
    act0_view,
    acto_view,
    all_subacts,
    compose_homs,
    empty_act,
    enumerate_homs,
    identity_hom,
    is_isomorphic,
    make_act,
    make_congruence,
    make_hom,
    make_subact,
    quotient_act,
    rees_quotient,
    regular_act,
    subact_as_act,
    subact_generated,
    theta_act,
    validate_monoid,
    zero_set,
)
from .constructions import (
    Coproduct,
    SubstantialDecomposition,
    adjoin_zero,
    coproduct,
    functor_F_mor,
    functor_F_obj,
    product,
    reflection_factorization,
    substantial_summand,
)
from .structure import (
    Decomposition,
    decompose,
    is_compact_bounded,
    is_cyclic,
    is_hollow,
    is_locally_cyclic,
    is_superfluous,
    maximal_proper_subacts,
)
from .projectivity import (
    Cover,
    ProjectivityCertificate,
    idempotents,
    is_cover,
    is_projective,
    principal_act,
    projective_cover,
)
from .classifiers import (
    ClassifierReport,
    acc_cyclic_subacts_report,
    cyclic_acts,
    is_left_0perfect,
    is_left_0steady,
    is_left_perfect,
    is_left_steady,
    verify_witnesses,
)
from .enumeration import (
    canonical_act_key,
    canonical_monoid_key,
    enumerate_acts,
    enumerate_left_congruences,
    enumerate_monoids_with_zero,
    enumerate_monoids_with_zero_upto,
)
from . import errors, fixtures

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
