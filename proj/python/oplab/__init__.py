"""Dimension sequences of monomial operads and graded algebras."""

from ._oplab import (
    Algebra,
    CompletenessError,
    DegenerateSeriesError,
    InvalidArgumentError,
    OplabError,
    ParseError,
    Presentation,
    WindowTooShortError,
    divides,
    fit_rational,
    gk,
    guess,
    min_envelope,
    minimal_period,
    one_turn_counts,
    operadization_dims,
    preset_dims,
    preset_list,
    preset_presentation,
    sweep,
    symmetric_envelope,
    zero_runs,
)

__all__ = [
    "Algebra",
    "CompletenessError",
    "DegenerateSeriesError",
    "InvalidArgumentError",
    "OplabError",
    "ParseError",
    "Presentation",
    "WindowTooShortError",
    "divides",
    "fit_rational",
    "gk",
    "guess",
    "min_envelope",
    "minimal_period",
    "one_turn_counts",
    "operadization_dims",
    "preset_dims",
    "preset_list",
    "preset_presentation",
    "sweep",
    "symmetric_envelope",
    "zero_runs",
]
