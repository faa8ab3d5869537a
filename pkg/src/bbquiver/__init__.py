"""Biquandle colorings, biquandle brackets and coloring/bracket quivers."""

from .algebra import (
    AxiomError,
    AxiomReport,
    Biquandle,
    BiquandleMap,
    FormatError,
    enumerate_endomorphisms,
    identity_map,
    is_homomorphism,
    parse_biquandle,
    verify_axioms,
)
from .bracket import (
    BiquandleBracket,
    BracketError,
    BracketReport,
    bracket_multiset,
    iter_brackets,
    make_bracket,
    parse_bracket,
    search_brackets,
    state_sum,
    verify_bracket,
)
from .diagram import Crossing, Diagram, DiagramError, from_braid, parse_diagram, unknot, writhe
from .homset import Coloring, Homset, counting_invariant, enumerate_colorings
from .kernels import BACKEND
from .quiver import (
    BracketQuiver,
    ColoringQuiver,
    QuiverError,
    arrow_polynomial,
    build_bracket_quiver,
    build_coloring_quiver,
    export_dot,
    export_json,
    in_degree_polynomial,
    vertex_polynomial,
)
from .ring import ExpPolynomial, ModRing, NonUnit, RingElem, canonical_string

__version__ = "0.1.0"
