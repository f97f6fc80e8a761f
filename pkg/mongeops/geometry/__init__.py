# mongeops/geometry/__init__.py
"""Monge metrics, the Hamiltonian conditions and the invariants built on them."""
from .classify import Classification, classify2
from .conditions import (
    ConditionReport,
    ConditionResult,
    CurvatureReport,
    check_conditions_lower,
    check_conditions_upper,
    curvature_check,
    curvature_residual,
)
from .connection import derive_c, is_monge
from .projective import projective_transform
from .segre import SegreData, format_segre, metric_from_lift, monge_lift, parse_segre, same_segre
from .types import Connection, MongeMetric, OperatorData, WForm
from .variety import SingularVariety, singular_variety
from .wform import WSystem, derive_w, w_constraint_system

__all__ = [
    "Classification",
    "ConditionReport",
    "ConditionResult",
    "Connection",
    "CurvatureReport",
    "MongeMetric",
    "OperatorData",
    "SegreData",
    "SingularVariety",
    "WForm",
    "WSystem",
    "check_conditions_lower",
    "check_conditions_upper",
    "classify2",
    "curvature_check",
    "curvature_residual",
    "derive_c",
    "derive_w",
    "format_segre",
    "is_monge",
    "metric_from_lift",
    "monge_lift",
    "parse_segre",
    "projective_transform",
    "same_segre",
    "singular_variety",
    "w_constraint_system",
]
