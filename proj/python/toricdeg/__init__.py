"""Toric degenerations from valuations.

Thin Python layer over the C++ core: ideals are exchanged as variable lists plus
generator strings, reports come back as plain dictionaries.
"""
from ._toricdeg import (
    Cancelled,
    Ideal,
    ToricdegError,
    VerificationFailed,
    embed_value_semigroup,
    family_ideal,
    fiber,
    fixture_names,
    groebner_basis,
    initial_ideal,
    moment,
    parse_ideal,
    projection_limit,
    run_fixture,
    sample_moment_image,
    toric_ideal,
    valuation_pipeline,
)

__all__ = [
    "Cancelled",
    "Ideal",
    "ToricdegError",
    "VerificationFailed",
    "embed_value_semigroup",
    "family_ideal",
    "fiber",
    "fixture_names",
    "groebner_basis",
    "initial_ideal",
    "moment",
    "parse_ideal",
    "projection_limit",
    "run_fixture",
    "sample_moment_image",
    "toric_ideal",
    "valuation_pipeline",
]
