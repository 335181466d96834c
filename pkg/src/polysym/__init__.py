"""Exact computer algebra for the ring of polysymmetric functions."""

from .classical import (
    ClassicalMatrix,
    SymExpr,
    classical_transition,
    convert_classical,
    kostka,
    mn_multiply,
    multiply_m_by,
    omega,
    pleth_pr,
    ssyt_count,
    to_monomial,
)
from .core import (
    FAMILY_BASES,
    POLY_BASES,
    PURE_BASES,
    PolyExpr,
    PolyMatrix,
    multiply_p_tensor,
    tensor_transition,
)
from .foundations import (
    Block,
    BlockSequence,
    EMPTY_TYPE,
    Partition,
    Rational,
    SplitType,
    block_sequence,
    conjugate,
    enumerate_partitions,
    enumerate_types,
    type_scale,
    type_stats,
    type_union,
)
from .monomial_rules import (
    TensorBrickTabloid,
    m_times_P,
    m_times_blocks,
    tensor_brick_tabloids,
    transition_to_m,
)
from .oracle import (
    CrossCheckReport,
    TruncatedPoly,
    cross_check,
    extract_m_tensor,
    generate,
    oracle_expand,
    oracle_transition,
)
from .power_rules import (
    ConstantRowTableau,
    block_in_p,
    constant_row_h_tableaux,
    constant_row_p_tableaux,
    p_times_block,
    transition_to_p,
)
from .schur_rules import (
    TensorTableau,
    polyribbon_tableaux,
    ribbon_tableaux,
    s_times_E_block,
    s_times_H_block,
    s_times_P_block,
    transition_to_s,
)
from .shapes import (
    PolyribbonDecomposition,
    RibbonStep,
    SkewShape,
    add_polyribbons,
    add_ribbons,
    dual_polyribbon_decompose,
    polyribbon_decompose,
)
from .transitions import convert, transition_matrix

__version__ = "0.1.0"
