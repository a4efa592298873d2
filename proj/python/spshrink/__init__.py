"""Spectrum-shrinking maps, eigenvalue selection and preserver reconstruction."""

import json as _json

from . import _spshrink
from ._spshrink import (
    Error,
    apply_function,
    calc_2x2_closed_form,
    canonical_shrinker,
    hn_select,
    isotropy_order,
    membership,
    sample,
    spaces,
    spectral_idempotents,
    spectrum,
    spectrum_inclusion_defect,
    spectrum_match_distance,
    su_select,
    theta,
    theta_decompose,
    un_lambda_select,
    verify_cycle_decomposition,
    xz_matrix,
)


def _loads(fn):
    def wrapper(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


check_shrinking = _loads(_spshrink.check_shrinking)
monodromy = _loads(_spshrink.monodromy)
classify_component = _loads(_spshrink.classify_component)
reconstruct = _loads(_spshrink.reconstruct)
classify_preserver = _loads(_spshrink.classify_preserver)
run_criterion = _loads(_spshrink.run_criterion)


def matrix_from_json(obj):
    """Inverse of the report encoding {"n": n, "entries": [[[re, im], ...], ...]}."""
    import numpy as np

    return np.array([[complex(re, im) for re, im in row] for row in obj["entries"]])
