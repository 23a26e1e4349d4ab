"""Groebner bases and standard monomials of vanishing ideals of points over F_p."""

from .bma import PointSet, buchberger_moller
from .essbm import GroebnerResult, Variety, essbm, project_points
from .estimators import BuchbergerMoller, EssBM
from .order import TermOrder, parse_order
from .poly import Polynomial

__all__ = [
    "BuchbergerMoller",
    "EssBM",
    "GroebnerResult",
    "PointSet",
    "Polynomial",
    "TermOrder",
    "Variety",
    "buchberger_moller",
    "essbm",
    "parse_order",
    "project_points",
]

__version__ = "0.1.0"
