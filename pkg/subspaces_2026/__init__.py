from numeric_core_2026.subspace import Subspace
from .angles import (
    AngleVector,
    principal_angles,
    sines_via_complement,
    join,
    project_onto,
    complement,
    projector_product_singvals,
)
