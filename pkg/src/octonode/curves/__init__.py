"""Space curves as images of plane curves, and the numbers they feed into the octic construction."""

from .implicit import CurveMapSpec, DimensionError, implicitize
from .report import CurveReport, curve_report, degree_nine_obstruction, preset

__all__ = ["CurveMapSpec", "CurveReport", "DimensionError", "curve_report", "degree_nine_obstruction",
           "implicitize", "preset"]
