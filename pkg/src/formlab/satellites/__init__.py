"""Satellites (local definitions) of formations and the classes they define."""

from .membership import (
    FCentralVerdict,
    f_central_verdicts,
    membership,
    membership_both,
    membership_characterized,
    monolithic_quotients,
    satellite_value,
)
from .samples import shipped_names, shipped_spec, shipped_specs
from .spec import KINDS, SatelliteSpec, format_satellite, parse_satellite, read_satellite
from .transforms import (
    class_of,
    integrate,
    lemma43_normalize,
    theorem44_transform,
    theorem51_bridge,
)
