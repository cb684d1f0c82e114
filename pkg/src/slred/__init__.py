"""Exact-arithmetic toolkit for nilpotent orbits of sl_N, good gradings built
from pyramids, and the finite data attached to adjacent-orbit reductions:
ghost bases, auxiliary nilpotents, conjugators and screening coefficients.

Everything is computed over the rationals with `fractions.Fraction`; no
floating point arithmetic is used anywhere.
"""

__version__ = "0.1.0"

from .lie import (
    ExactMatrix,
    GradingElement,
    Root,
    all_roots,
    bracket,
    grading_of_root,
    jordan_type,
    root_decomposition,
    trace_form,
)
from .orbits import (
    OrbitChain,
    Partition,
    box_move_witness,
    covers_of,
    dominance_leq,
    is_adjacent,
    partitions_of,
    reduction_path,
    satisfies_box_move,
    transpose,
)
from .pyramids import (
    GoodPair,
    Pyramid,
    align_for_theorem,
    build_pyramid,
    good_pair,
    grading_element_of,
    is_good_grading,
    left_aligned_offsets,
    nilpotent_from_pyramid,
    raising_operator,
    render,
    right_aligned_offsets,
)
from .star import (
    BiGradedPiece,
    BiGrading,
    StarCertificate,
    bigrade,
    centralizer_piece,
    check_star,
    compute_omega,
)
from .reduction import (
    AdjacencyData,
    ReductionDatum,
    adjacency_data,
    build_case_one,
    build_chain,
    build_reduction,
    conjugator_height_two,
    embed_case_two,
    verify_conjugation,
)
from .screening import (
    OmegaSplit,
    Poly,
    PolyMatrix,
    ScreeningSet,
    UnipotentChart,
    exp_nilpotent,
    fourier_compare,
    fourier_signs,
    g0_conjugate,
    left_action_coeffs,
    left_action_of,
    log_unipotent,
    right_action_of,
    screening_coeffs,
)
from .cli import Report, emit, main, verify_all
