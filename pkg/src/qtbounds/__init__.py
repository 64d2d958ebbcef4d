"""Minimum-distance bounds for quasi-twisted codes.

Computes the spectral bound (over several defining-set bound families), the
Jensen concatenation bound and the Lally bound for a quasi-twisted code, and
checks them against the exact minimum distance.
"""

from .concat import constituents, jensen_bound
from .gf import GF, field
from .lally import lally_bound, lally_decompose
from .linalg import INF, LinearCode, min_distance
from .qtcode import QtCode, exact_min_distance
from .spectral import EigenData, spectral_bound, spectral_bounds, spectrum
from .tower import FieldTower, build_tower

__version__ = "0.1.0"

__all__ = [
    "GF",
    "field",
    "FieldTower",
    "build_tower",
    "LinearCode",
    "min_distance",
    "INF",
    "QtCode",
    "exact_min_distance",
    "spectrum",
    "EigenData",
    "spectral_bound",
    "spectral_bounds",
    "constituents",
    "jensen_bound",
    "lally_decompose",
    "lally_bound",
]
