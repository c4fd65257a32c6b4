"""Exact orbit-sum invariants of the seven frieze groups on truncated series."""

from .compositions import EMPTY, Composition, composition, compositions_of, parse_composition
from .errors import ParseError
from .monomials import (
    ALPHABET_X,
    ALPHABET_XY,
    MonomialX,
    MonomialXY,
    UNIT_X,
    UNIT_XY,
    format_monomial,
    normal_form_x,
    normal_form_xy,
    parse_monomial,
)
from .groups import (
    FriezeGroup,
    GroupElement,
    format_word,
    generator,
    generators,
    identity,
    parse_word,
    shift,
)
from .actions import act, act_x, act_xy, orbit_in_window, stabilizer
from .series import (
    TruncatedSeries,
    act_series,
    complete_sym,
    elementary_sym,
    is_invariant,
)
from .basis import (
    BasisIndex,
    canonical_index,
    enumerate_indices,
    expand_basis_function,
    expand_in_basis,
    format_basis_label,
    index_of_monomial,
    make_index,
    parse_basis_label,
    representative_monomial,
)
from .structure import (
    CensusReport,
    ComponentType,
    component_type,
    decomposition_census,
    double_coordinates,
    embed_double,
    embed_line,
    has_finite_support,
    is_constant_sequence,
    line_coordinates,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET_X",
    "ALPHABET_XY",
    "BasisIndex",
    "CensusReport",
    "ComponentType",
    "Composition",
    "EMPTY",
    "FriezeGroup",
    "GroupElement",
    "MonomialX",
    "MonomialXY",
    "ParseError",
    "TruncatedSeries",
    "UNIT_X",
    "UNIT_XY",
    "act",
    "act_series",
    "act_x",
    "act_xy",
    "canonical_index",
    "complete_sym",
    "component_type",
    "composition",
    "compositions_of",
    "decomposition_census",
    "double_coordinates",
    "elementary_sym",
    "embed_double",
    "embed_line",
    "enumerate_indices",
    "expand_basis_function",
    "expand_in_basis",
    "format_basis_label",
    "format_monomial",
    "format_word",
    "generator",
    "generators",
    "has_finite_support",
    "identity",
    "index_of_monomial",
    "is_constant_sequence",
    "is_invariant",
    "line_coordinates",
    "make_index",
    "normal_form_x",
    "normal_form_xy",
    "orbit_in_window",
    "parse_basis_label",
    "parse_composition",
    "parse_monomial",
    "parse_word",
    "representative_monomial",
    "shift",
    "stabilizer",
]
