"""Estimator interface: fit a vanishing ideal to a set of points.

``fit(X)`` learns the reduced Groebner basis of the rows of ``X``;
``transform(X)`` evaluates the basis on new rows (all zeros exactly on the
fitted points) and ``predict(X)`` flags rows that lie on the fitted set.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_field, check_order, check_points
from .bma import PointSet, buchberger_moller
from .essbm import Variety, essbm


class _VanishingIdeal(TransformerMixin, BaseEstimator):

    def __init__(self, p=3, order="lex", varorder=None, strict=False):
        self.p = p
        self.order = order
        self.varorder = varorder
        self.strict = strict

    def _variety(self, X):
        p = check_field(self.p)
        X = check_points(X, p)
        self.n_features_in_ = X.shape[1]
        self.order_ = check_order(self.order, X.shape[1], self.varorder)
        return Variety.from_points(X.tolist(), p, X.shape[1], strict=self.strict)

    def transform(self, X):
        """Values of every basis element at every row, shape ``(len(X), len(G))``."""
        check_is_fitted(self, "groebner_basis_")
        X = check_points(X, self.p_, self.n_features_in_)
        rows = X.tolist()
        return np.array([[g.evaluate(pt) for g in self.groebner_basis_] for pt in rows],
                        dtype=np.int64).reshape(len(rows), len(self.groebner_basis_))

    def predict(self, X):
        """True for rows on which the whole basis vanishes."""
        return ~self.transform(X).any(axis=1)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "groebner_basis_")
        return np.array([str(g) for g in self.groebner_basis_], dtype=object)


class EssBM(_VanishingIdeal):
    """Vanishing ideal via essential-variable elimination.

    Suited to few points in many variables.  Besides ``groebner_basis_``
    and ``standard_monomials_`` the fitted estimator exposes
    ``essential_variables_`` (0-based indices) and ``relations_``, the
    linear relations heading each inessential variable.
    """

    def fit(self, X, y=None):
        v = self._variety(X)
        res = essbm(v, self.order_)
        self.p_ = v.p
        self.result_ = res
        self.groebner_basis_ = res.g
        self.standard_monomials_ = res.sm
        self.essential_variables_ = res.ev
        self.relations_ = res.rel
        return self


class BuchbergerMoller(_VanishingIdeal):
    """Vanishing ideal via the Buchberger-Moeller algorithm on all variables."""

    def fit(self, X, y=None):
        v = self._variety(X)
        gb, sm = buchberger_moller(PointSet(v.points, v.p, self.order_))
        self.p_ = v.p
        self.groebner_basis_ = gb
        self.standard_monomials_ = sm
        return self
