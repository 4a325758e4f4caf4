import json
import math
from enum import Enum

import numpy as np

# larger integers lose precision in common JSON readers
SAFE_INTEGER = 2 ** 53


def to_jsonable(obj):
    if hasattr(obj, 'to_json'):
        return to_jsonable(obj.to_json())
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, np.integer):
        obj = int(obj)
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= SAFE_INTEGER else obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return 'omega'
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return str(obj)


def canonical_json(obj):
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + '\n'
