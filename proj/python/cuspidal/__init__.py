"""Rational cuspidal curves: semigroups of cusps, Alexander polynomials,
staircase complexes, d-invariants, and the semigroup distribution test."""

from ._cuspidal import (
    AlexanderPoly,
    CharSequence,
    CriterionReport,
    CriterionRow,
    CuspidalError,
    DegreeTally,
    Staircase,
    StepFunction,
    SurveyResult,
    alexander_from_gaps,
    coefficient_check,
    d_invariant,
    enumerate_char_sequences,
    extendable_spinc,
    first_semigroup_failure,
    gaps_from_alexander,
    genus_compatibility,
    inf_convolve_I,
    inf_convolve_R,
    is_known_unicuspidal,
    j_function,
    k_coefficients,
    matsuoka_sakai,
    orevkov_bound,
    orevkov_inequality,
    semigroup_distribution,
    strong_multiplicity,
    survey_coprime_pairs,
    survey_single_cusp,
    table_degree,
    torus_alexander,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["cusp"]


def cusp(spec):
    """CharSequence from "p;q1,q2,..." (or an existing CharSequence)."""
    return spec if isinstance(spec, CharSequence) else CharSequence.parse(spec)
