"""Season-level plate-discipline aggregates with posterior uncertainty."""

from .batter import (
    BatterReport,
    MetricSummary,
    batter_report,
    proportion_optimal,
    runs_added,
    runs_lost,
)
from .panels import PANELS, PanelDecomposition, decompose_panels, panel_assign
from .stability import year_to_year_correlation
from .traditional import TraditionalMetrics, ZoneSpec, traditional_metrics

__all__ = [
    "BatterReport",
    "MetricSummary",
    "PANELS",
    "PanelDecomposition",
    "TraditionalMetrics",
    "ZoneSpec",
    "batter_report",
    "decompose_panels",
    "panel_assign",
    "proportion_optimal",
    "runs_added",
    "runs_lost",
    "traditional_metrics",
    "year_to_year_correlation",
]
