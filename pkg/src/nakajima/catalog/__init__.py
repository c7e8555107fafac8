"""Built-in curves and named verification scenarios."""

from .curves import CURVE_NAMES, CurveSpec, get_curve, least_primitive_root
from .report import REPORT_SCHEMA, Report, Step
from .scenarios import SCENARIOS, extremality_grid, run_scenario

__all__ = [
    "CURVE_NAMES", "CurveSpec", "REPORT_SCHEMA", "Report", "SCENARIOS", "Step", "extremality_grid",
    "get_curve", "least_primitive_root", "run_scenario",
]
