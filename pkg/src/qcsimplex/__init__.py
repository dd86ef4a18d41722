"""Quasi-cyclic binary codes built from cyclic simplex codes."""

from .distance import (
    CodeReport,
    DimensionCapError,
    DistanceTable,
    DistanceVector,
    EmptyCodeError,
    exhaustive_min_distance,
    pair_distance_vector,
    three_gen_formula_distance,
    triple_distance_table,
    two_gen_formula_distance,
    two_weight_check,
)
from .gf2poly import (
    CyclicWord,
    Gf2Poly,
    OctalParseError,
    format_octal,
    parse_octal,
    poly_divmod,
    poly_mul,
    shift_mul,
    weight,
)
from .qcmodel import (
    CirculantRowGroup,
    QcCodeSpec,
    SpecFormatError,
    build_one_gen,
    build_three_gen,
    build_two_gen,
    code_dimension,
    encode,
    extend_with_block_parity,
    extend_with_unit_rows,
    generator_matrix,
    spec_from_dict,
    spec_to_dict,
)
from .search import (
    OffsetTuple,
    SearchBudgetError,
    SearchResult,
    canonicalize_three_gen,
    canonicalize_two_gen,
    search_three_gen,
    search_two_gen,
)
from .simplex import (
    SimplexCode,
    SimplexError,
    codewords,
    simplex_from_generator,
    simplex_from_primitive,
)

__version__ = "0.1.0"
