from .majorization import (
    MajorizationResult,
    weak_majorize,
    strong_majorize,
    prefix_margins,
    decreasing,
    pad_zeros,
)
