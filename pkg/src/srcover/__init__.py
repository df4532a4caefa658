"""Covering codes in the sum-rank metric: lifts from Hamming covering codes, exact radius
engines, and bounds on code sizes and block lengths."""

from .galois import FieldElement, FieldSpec, Tower, field_make, linearized_to_matrix
from .space import BlockVector, SpaceSpec, ball_volume, mat_rank, rank_distribution, space_make, sr_distance, sr_weight
from .hamming import HammingCode, covering_radius_exact, delsarte_radius_bound, scalar_extend
from .registry import CoveringRecord, Registry, registry_load, registry_validate
from .construct import SumRankCode, embed_rows, pad, sr_covering_lift, sr_linearized_lift
from .radius import RadiusReport, list_census, sr_radius_exact, sr_radius_probe, verify_construction
from .linalg import GuardError

__version__ = "0.1.0"
