from .dilation import (
    NormalizedPair,
    normalize_pair,
    dilation_basis,
    dilation_projector,
    coordinate_subspace,
    dilation_residual_singvals,
    dilation_residual_geometric,
    dilation_angles,
    dilation_cosines,
    eval_additive_bound,
    eval_weyl_additive,
)
