# harness_2026/artifacts.py
import json
import logging
import os
from typing import Any, Dict, Iterable, Mapping

import numpy as np

from numeric_core_2026.matrix_io import write_matrix

logger = logging.getLogger(__name__)


def write_counterexample(base_dir: str, name: str, matrices: Mapping[str, np.ndarray],
                         payload: Dict[str, Any]) -> str:
    """Write a replayable case: one ``<key>.mat`` per matrix plus ``report.json``."""
    path = os.path.join(base_dir, name)
    os.makedirs(path, exist_ok=True)
    for key, matrix in matrices.items():
        write_matrix(os.path.join(path, f"{key}.mat"), matrix)
    with open(os.path.join(path, 'report.json'), 'w', encoding='utf-8', newline='\n') as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write('\n')
    logger.warning(f"Wrote counterexample artifact {path}")
    return path


def write_jsonl(path: str, rows: Iterable[Dict[str, Any]]) -> int:
    count = 0
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        for row in rows:
            handle.write(json.dumps(row, sort_keys=True))
            handle.write('\n')
            count += 1
    logger.info(f"Wrote {count} records to {path}")
    return count
