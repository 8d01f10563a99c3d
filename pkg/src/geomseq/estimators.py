"""scikit-learn style wrappers around the sequence constructors and analyses.

``GeneralizedNTUGenerator`` is fitted once per parameter tuple and then maps
time indices to symbols.  The two transformers are stateless: each row of
``X`` is read as one period of a sequence.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from ._validation import ParameterError, check_alphabet, is_prime
from .correlate import autocorrelation_profile
from .gf import ExtFieldContext
from .lincomp import berlekamp_massey, minimal_poly_gcd
from .seqgen import SymbolSequence, build_sequence


class GeneralizedNTUGenerator(TransformerMixin, BaseEstimator):
    """Builds ``T_A``, ``t_A``, their complements or ``S^e`` on ``fit``.

    ``transform`` takes integer time indices (any shape) and returns the
    symbols at those indices, wrapping around the period.
    """

    def __init__(self, p=3, m=2, ell=2, A=1, kind="T", e=None, primitive_poly=None):
        self.p = p
        self.m = m
        self.ell = ell
        self.A = A
        self.kind = kind
        self.e = e
        self.primitive_poly = primitive_poly

    def fit(self, X=None, y=None):
        ctx = ExtFieldContext(self.p, self.m, None if self.primitive_poly is None else tuple(self.primitive_poly))
        check_alphabet(self.ell, ctx.p)
        self.context_ = ctx
        self.sequence_ = build_sequence(ctx, self.ell, self.A, self.kind, self.e)
        self.period_ = self.sequence_.period
        return self

    def transform(self, X):
        check_is_fitted(self, "sequence_")
        idx = np.asarray(X)
        if idx.dtype.kind not in "iu":
            raise ParameterError("time indices must be integers")
        return self.sequence_.symbols[idx % self.period_]

    def symbols(self) -> np.ndarray:
        """One full period of the fitted sequence."""
        check_is_fitted(self, "sequence_")
        return self.sequence_.symbols.copy()


def _rows_as_sequences(X, ell: int) -> list[SymbolSequence]:
    X = check_array(X, dtype=np.int64, ensure_min_features=1)
    if X.min(initial=0) < 0 or X.max(initial=0) >= ell:
        raise ParameterError(f"entries must lie in [0, {ell - 1}]")
    return [SymbolSequence.from_symbols(row, ell) for row in X]


class _RowTransformer(TransformerMixin, BaseEstimator):
    def fit(self, X, y=None):
        if not is_prime(self.ell):
            raise ParameterError(f"ell must be prime, got {self.ell}")
        X = check_array(X, dtype=np.int64)
        self.n_features_in_ = X.shape[1]
        return self

    def _sequences(self, X):
        check_is_fitted(self, "n_features_in_")
        seqs = _rows_as_sequences(X, self.ell)
        if seqs and seqs[0].period != self.n_features_in_:
            raise ParameterError(f"expected rows of length {self.n_features_in_}, got {seqs[0].period}")
        return seqs


class LinearComplexityTransformer(_RowTransformer):
    """Row-wise linear complexity; output has shape ``(n_rows, 1)``."""

    def __init__(self, ell=2, method="gcd"):
        self.ell = ell
        self.method = method

    def transform(self, X):
        measure = {"gcd": minimal_poly_gcd, "bm": berlekamp_massey}.get(self.method)
        if measure is None:
            raise ParameterError(f"unknown method {self.method!r}; expected 'gcd' or 'bm'")
        return np.array([[measure(s).linear_complexity] for s in self._sequences(X)], dtype=np.int64)


class AutocorrelationTransformer(_RowTransformer):
    """Row-wise periodic autocorrelation at every shift (binary rows only)."""

    def __init__(self, ell=2):
        self.ell = ell

    def fit(self, X, y=None):
        if self.ell != 2:
            raise ParameterError("autocorrelation is defined here for binary sequences only")
        return super().fit(X, y)

    def transform(self, X):
        return np.vstack([autocorrelation_profile(s).values for s in self._sequences(X)])
