from .errors import (
    RitzBoundsError,
    NonFiniteError,
    NotHermitianError,
    DimensionMismatchError,
    EmptySubspaceError,
    NotPSDError,
    SpectrumRangeError,
    NotAcuteError,
    InfiniteTangentError,
    NotInvariantError,
    GapConditionError,
    SingularBlockError,
    MatrixFormatError,
)
from .tolerance import TolerancePolicy, DEFAULT_POLICY
from .subspace import Subspace
from .linalg import (
    as_matrix,
    check_hermitian,
    eigh,
    eigvalsh,
    svd_decreasing,
    orthonormalize,
    hermitian_function,
    psd_sqrt,
    inverse_singular_values,
    condition_number,
)
from .matrix_io import read_matrix, write_matrix, read_subspace, parse_matrix, format_matrix
