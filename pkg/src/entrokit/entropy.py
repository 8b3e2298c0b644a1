"""Generalized Tsallis entropy of single, joint, and conditional variables.

The entropy of a distribution P is -sum_x p^{r+k+1} ln_{k,r}(p), with
zero-probability terms contributing 0. Each term collapses algebraically
to p (1 - p^{2k}) / (2k), which is the canonical evaluator here: it is
exact at p = 0, non-negative on [0, 1], and makes the r-cancellation
explicit. The literal as-written evaluator is kept alongside as a
cross-check.

Conditional entropies weight per-slice entropies by the conditioning
probability raised to 2k + 1; this is the weighting that makes the chain
rule S(X,Y) = S(X) + S(Y|X) hold identically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .deformed_log import DeformParams, ln_kr
from .distributions import Distribution, JointDistribution2, JointDistribution3
from .errors import ParamError

__all__ = [
    "EntropyValue",
    "entropy",
    "entropy_literal",
    "joint_entropy",
    "conditional_entropy",
    "conditional_entropy3",
    "mutual_entropy",
    "shannon_entropy",
    "tsallis_entropy",
    "reference_entropy",
]

DIRECTIONS = ("Y_given_X", "X_given_Y")
MODES3 = ("XY_given_Z", "Y_given_XZ", "X_given_Z", "Y_given_Z")


@dataclass(frozen=True)
class EntropyValue:
    """Non-negative entropy with the parameters it was computed under."""

    value: float
    params: DeformParams

    def __float__(self) -> float:
        return self.value


def _entropy_sum(arr: np.ndarray, k: float) -> float:
    """sum of p (1 - p^{2k}) / (2k) over positive entries of any shape."""
    p = arr[arr > 0]
    if p.size == 0:
        return 0.0
    return float(np.sum(-p * np.expm1(2.0 * k * np.log(p)) / (2.0 * k)))


def entropy(p: Distribution, params: DeformParams) -> EntropyValue:
    """Entropy -sum p^{r+k+1} ln_{k,r}(p); 0 exactly on degenerate inputs."""
    return EntropyValue(_entropy_sum(p.p, params.k), params)


def entropy_literal(p: Distribution, params: DeformParams) -> float:
    """The defining sum evaluated term by term as written, without the
    algebraic collapse. Retained as a cross-check of the canonical path."""
    k, r = params.k, params.r
    pos = p.p[p.p > 0]
    if pos.size == 0:
        return 0.0
    return float(-np.sum(np.power(pos, r + k + 1.0) * ln_kr(pos, params)))


def joint_entropy(
    j: JointDistribution2 | JointDistribution3, params: DeformParams
) -> EntropyValue:
    """Entropy of the joint, i.e. of the flattened cell distribution."""
    arr = j.m if isinstance(j, JointDistribution2) else j.t
    return EntropyValue(_entropy_sum(arr, params.k), params)


def _conditional_sum(mat: np.ndarray, k: float) -> float:
    """Weighted conditional entropy for a matrix with conditioning variable
    on the rows: sum_rows p(row)^{2k+1} S(col | row). Zero-probability rows
    contribute nothing."""
    prow = mat.sum(axis=1)
    live = prow > 0
    if not np.any(live):
        return 0.0
    cond = mat[live] / prow[live, None]
    c = np.where(cond > 0, cond, 1.0)
    inner = np.sum(-cond * np.expm1(2.0 * k * np.log(c)) / (2.0 * k), axis=1)
    return float(np.sum(np.power(prow[live], 2.0 * k + 1.0) * inner))


def conditional_entropy(
    j: JointDistribution2, params: DeformParams, direction: str = "Y_given_X"
) -> EntropyValue:
    """Conditional entropy S(Y|X) (or the transposed S(X|Y))."""
    if direction not in DIRECTIONS:
        raise ParamError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    mat = j.m if direction == "Y_given_X" else j.m.T
    return EntropyValue(_conditional_sum(mat, params.k), params)


def conditional_entropy3(
    j: JointDistribution3, params: DeformParams, mode: str
) -> EntropyValue:
    """Conditional entropies over three variables.

    XY_given_Z weights each z-slice of the (x, y) conditional by p(z)^{2k+1};
    Y_given_XZ conditions on the (x, z) pair; X_given_Z and Y_given_Z first
    marginalize out the unused variable.
    """
    if mode not in MODES3:
        raise ParamError(f"mode must be one of {MODES3}, got {mode!r}")
    t = j.t
    nx, ny, nz = t.shape
    if mode == "XY_given_Z":
        mat = np.moveaxis(t, 2, 0).reshape(nz, nx * ny)
    elif mode == "Y_given_XZ":
        mat = np.transpose(t, (0, 2, 1)).reshape(nx * nz, ny)
    elif mode == "X_given_Z":
        mat = t.sum(axis=1).T  # rows z, cols x
    else:  # Y_given_Z
        mat = t.sum(axis=0).T  # rows z, cols y
    return EntropyValue(_conditional_sum(mat, params.k), params)


def mutual_entropy(j: JointDistribution2, params: DeformParams) -> float:
    """S(X) + S(Y) - S(X,Y); equals S(Y) - S(Y|X) by the chain rule."""
    k = params.k
    sx = _entropy_sum(j.m.sum(axis=1), k)
    sy = _entropy_sum(j.m.sum(axis=0), k)
    sxy = _entropy_sum(j.m, k)
    return sx + sy - sxy


def shannon_entropy(p: Distribution) -> float:
    """-sum p ln p in nats."""
    pos = p.p[p.p > 0]
    return float(-np.sum(pos * np.log(pos)))


def tsallis_entropy(p: Distribution, q: float) -> float:
    """Standard one-parameter entropy -sum p^q ln_q(p), q != 1."""
    if q == 1:
        raise ParamError("q = 1 is the Shannon limit; use shannon_entropy")
    pos = p.p[p.p > 0]
    if pos.size == 0:
        return 0.0
    lp = np.log(pos)
    return float(-np.sum(np.exp(q * lp) * np.expm1((1.0 - q) * lp) / (1.0 - q)))


def reference_entropy(p: Distribution, family: str, q: float | None = None) -> float:
    """Dispatch to a reference entropy: family "shannon" or "tsallis" (with q)."""
    if family == "shannon":
        return shannon_entropy(p)
    if family == "tsallis":
        if q is None:
            raise ParamError("tsallis reference entropy requires q")
        return tsallis_entropy(p, q)
    raise ParamError(f'family must be "shannon" or "tsallis", got {family!r}')
