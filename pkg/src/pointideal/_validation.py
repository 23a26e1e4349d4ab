"""Input checks shared by the estimators and the CLI."""

from __future__ import annotations

import numpy as np
from sklearn.utils.validation import check_array

from .field import PrimeField
from .order import TermOrder, parse_order


def check_points(X, p: int, n_features: int | None = None) -> np.ndarray:
    """Validate a 2-D integer array of residues in ``[0, p)``."""
    X = check_array(X, dtype=np.int64, ensure_min_samples=1)
    if n_features is not None and X.shape[1] != n_features:
        raise ValueError(f"X has {X.shape[1]} features, expected {n_features}")
    if X.size and (X.min() < 0 or X.max() >= p):
        raise ValueError(f"coordinates must lie in [0, {p})")
    return X


def check_field(p) -> int:
    return PrimeField(int(p)).p


def check_order(order, n: int, varorder=None) -> TermOrder:
    if isinstance(order, TermOrder):
        if order.n != n:
            raise ValueError(f"term order is on {order.n} variables, data has {n}")
        if varorder is not None:
            raise ValueError("varorder cannot be combined with a TermOrder instance")
        return order
    if varorder is not None and not isinstance(varorder, str):
        varorder = ",".join(str(v) for v in varorder)
    return parse_order(order, n, varorder)
