"""Curve neighborhoods and Seidel-type quantum products for Grassmannian
Schubert classes, verified exhaustively on torus-fixed points."""

from .grassmann import (
    MAX_RANK,
    Partition,
    box_complement,
    box_partitions,
    conjugate,
    dual_case,
    dual_mask,
    fp_schubert_b,
    fp_schubert_bminus,
    mask_of,
    partition_to_perm,
    perm_to_partition,
    subset_of,
    translate_fp,
)
from .neighborhoods import (
    CaseReport,
    GFlagChain,
    SweepReport,
    chain_fixed_points,
    fp_projected_schubert,
    fp_richardson,
    g_flag_chain,
    gamma_fp,
    sweep,
    v_from_gflags,
    verify_case,
)
from .perms import (
    Perm,
    bruhat_leq,
    compose,
    identity,
    inverse,
    join,
    length,
    longest_element,
    min_coset_rep,
    parabolic_quotient,
    seidel_element,
    seidel_generator,
)
from .quantum import (
    QClass,
    SeidelCheck,
    classical_product,
    lr_coeff,
    min_q_degree,
    quantum_product,
    rim_hook_reduce,
    seidel_class,
    seidel_degree,
    seidel_product_check,
)

__all__ = [
    "MAX_RANK",
    "Partition",
    "Perm",
    "QClass",
    "CaseReport",
    "GFlagChain",
    "SeidelCheck",
    "SweepReport",
    "box_complement",
    "box_partitions",
    "bruhat_leq",
    "chain_fixed_points",
    "classical_product",
    "compose",
    "conjugate",
    "dual_case",
    "dual_mask",
    "fp_projected_schubert",
    "fp_richardson",
    "fp_schubert_b",
    "fp_schubert_bminus",
    "g_flag_chain",
    "gamma_fp",
    "identity",
    "inverse",
    "join",
    "length",
    "longest_element",
    "lr_coeff",
    "mask_of",
    "min_coset_rep",
    "min_q_degree",
    "parabolic_quotient",
    "partition_to_perm",
    "perm_to_partition",
    "quantum_product",
    "rim_hook_reduce",
    "seidel_class",
    "seidel_degree",
    "seidel_element",
    "seidel_generator",
    "seidel_product_check",
    "subset_of",
    "sweep",
    "translate_fp",
    "v_from_gflags",
    "verify_case",
]

__version__ = "0.1.0"
