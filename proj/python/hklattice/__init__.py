"""Exact Hilbert-Kunz functions of normal affine semigroup rings.

Integers are exact Python ints, rationals are "p/q" strings, structured
results are plain dicts decoded from the core's canonical JSON.
"""

import json

from ._core import (
    InfeasibleError,
    ValidationError,
    __version__,
    bfs_lengths,
    contains,
    count,
    extreme_rays,
    hk_counts,
    hk_via_cells,
    hs_multiplicity,
    hypersurface_lengths,
    is_normal,
    is_pointed,
    support_hyperplanes,
    svg,
    volume_via_cells,
)
from . import _core

__all__ = [
    "InfeasibleError",
    "ValidationError",
    "__version__",
    "bfs_lengths",
    "cell_decomposition",
    "contains",
    "count",
    "ehrhart",
    "extreme_rays",
    "hk_closed_form",
    "hk_counts",
    "hk_via_cells",
    "hs_multiplicity",
    "hypersurface_lengths",
    "is_normal",
    "is_pointed",
    "run",
    "support_hyperplanes",
    "svg",
    "volume_via_cells",
]


def ehrhart(generators, ideal=None):
    """Counting quasipolynomial of P: degree, period, coefficient tables, latex."""
    return json.loads(_core.ehrhart_json(generators, ideal))


def hk_closed_form(generators, p, e_max=2):
    """Closed form of e -> #((p^e)P cap Z^d), checked against direct counts."""
    return json.loads(_core.hk_form_json(generators, p, e_max))


def cell_decomposition(generators):
    """Classes of the cell decomposition of P for the maximal monomial ideal."""
    return json.loads(_core.cell_classes_json(generators))


def run(spec):
    """Run a problem spec (dict, JSON text, or key = value text); returns the report."""
    if isinstance(spec, dict):
        return json.loads(_core.run_spec_json(json.dumps(spec), True))
    text = str(spec)
    return json.loads(_core.run_spec_json(text, text.lstrip().startswith("{")))
