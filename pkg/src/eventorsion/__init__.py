"""Exact classification of even cyclic rational torsion subgroups for the
curve family y^2 = x(x+M)(x+N), M = m + n*sqrt(D), N = m - n*sqrt(D)."""

from .classifier import (
    ClassificationReport,
    InconsistencyError,
    NonSquareYError,
    TorsionClass,
    Witness,
    WitnessI,
    WitnessII,
    WitnessIII,
    WitnessIV,
    WitnessV,
    check_case_i,
    check_case_ii,
    check_case_iii,
    check_case_iv,
    check_case_v,
    classify,
    full_report,
    generator,
)
from .corpus import CorpusRecord
from .curve import (
    INFINITY,
    CurveMND,
    GeneralCubic,
    InvalidCurveError,
    NonCyclicReport,
    Point,
    QuadElement,
    add,
    double_x,
    from_general,
    is_halvable,
    is_square_quad,
    normalize,
    order,
    three_torsion_quartic,
)
from .family import FamilySample, sample_case
from .oracle import TorsionGroup, assert_family_shape, discriminant, torsion_group

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "CorpusRecord",
    "CurveMND",
    "FamilySample",
    "GeneralCubic",
    "INFINITY",
    "InconsistencyError",
    "InvalidCurveError",
    "NonCyclicReport",
    "NonSquareYError",
    "Point",
    "QuadElement",
    "TorsionClass",
    "TorsionGroup",
    "Witness",
    "WitnessI",
    "WitnessII",
    "WitnessIII",
    "WitnessIV",
    "WitnessV",
    "add",
    "assert_family_shape",
    "check_case_i",
    "check_case_ii",
    "check_case_iii",
    "check_case_iv",
    "check_case_v",
    "classify",
    "discriminant",
    "double_x",
    "from_general",
    "full_report",
    "generator",
    "is_halvable",
    "is_square_quad",
    "normalize",
    "order",
    "sample_case",
    "three_torsion_quartic",
    "torsion_group",
]
