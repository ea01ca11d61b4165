from .report import (
    BoundGrade,
    BoundId,
    BoundReport,
    PROVEN_BOUNDS,
    CONJECTURAL_BOUNDS,
    make_report,
    reports_to_json,
    write_reports,
)
from .pair import RitzPair
from .mixed import (
    lhs_ritz_change,
    eval_conjecture,
    eval_thm_mixed,
    eval_cor_tangent,
    eval_apriori,
    eval_lemma_relation,
)
from .posteriori import (
    eval_sun91,
    eval_weyl_matching,
    eval_davis_kahan,
    eval_quadratic_aposteriori,
    spectral_gap,
)
from .block_discard import eval_block_discard, coordinate_block
from .evaluate import evaluate_all, evaluate_bound, TRIPLE_BOUNDS, NOT_APPLICABLE
