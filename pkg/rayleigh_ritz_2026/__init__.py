from .ritz import (
    RitzData,
    ritz,
    residual_singvals,
    projected_singvals,
    projected_residual_singvals,
    ritz_extremes_on_join,
    invariance_threshold,
    is_invariant,
)
