"""Exact computations for the Picard modular group PU(2,1,O7).

Every pipeline returns a plain JSON-compatible dict. Options shared by the
heavier pipelines (max_reduce_iters, precision_bits, closure_cap,
word_search_len, height_bound) are keyword arguments.
"""

import json
from functools import wraps

from . import _picard
from ._picard import ArithmeticOverflow, CapExceeded, InvalidArgument, PrecisionError

__all__ = [
    "ArithmeticOverflow",
    "CapExceeded",
    "InvalidArgument",
    "PrecisionError",
    "eval_word",
    "projective_order",
    "ford_spheres",
    "ford_reduce",
    "depths",
    "cusp_overlaps",
    "cusp_torsion",
    "torsion_enumerate",
    "torsion_stabilizer",
    "mirror_verify",
    "mirror_search",
    "presentation",
    "congruence",
    "report",
]


def _point(p):
    if isinstance(p, str):
        return p
    return ",".join(str(x) for x in p)


def _loads(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    return wrapper


projective_order = _picard.projective_order
eval_word = _loads(_picard.eval_word)
ford_spheres = _loads(_picard.ford_spheres)
depths = _loads(_picard.depths)
cusp_overlaps = _loads(_picard.cusp_overlaps)
cusp_torsion = _loads(_picard.cusp_torsion)
mirror_search = _loads(_picard.mirror_search)
mirror_verify = _loads(_picard.mirror_verify)
congruence = _loads(_picard.congruence)
torsion_enumerate = _loads(_picard.torsion_enumerate)
presentation = _loads(_picard.presentation)
report = _loads(_picard.report)


def ford_reduce(point, **options):
    """Reduce a negative point, given as "[a,b,c]" or a sequence of entries."""
    return json.loads(_picard.ford_reduce(_point(point), **options))


def torsion_stabilizer(point, **options):
    return json.loads(_picard.torsion_stabilizer(_point(point), **options))
