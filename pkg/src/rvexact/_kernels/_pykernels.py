"""Pure-numpy fallback statistic kernels.

Mirrors rvexact._kernels._ckernels operation for operation; the compiled
module is preferred at import time when available.  Every function takes
int64 carrier-count arrays (r0 in controls, r1 in cases) plus the fixed
margins and returns the chi-square-scale statistics as float64.

Statistic conventions (shared by both backends):

* Score   -- Pearson statistic, 0 when the carrier total is 0 or N.
* Wald    -- (log OR)^2 / var, 0 whenever any of the four cells is 0.
* WaldReg -- Wald on cells + 0.5, applied only to tables with a zero cell.
* LRT     -- deviance 2*sum(obs*log(obs/exp)), 0*log0 = 0.
* Firth   -- penalized likelihood ratio, evaluated at the closed-form
             Jeffreys-penalized optimum of the saturated two-group logistic
             model (group probabilities (r1+1/2)/(t+1) etc.; the restricted
             beta1=0 fit keeps the full-model penalty).  0 when t is 0 or N
             (singular information).

All statistics are clamped at 0 so tail comparisons never see -1e-16 noise.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

SCORE = 0
WALD = 1
WALD_REG = 2
LRT = 3
FIRTH = 4


def _score(m0: int, m1: int, r0, r1):
    n = float(m0 + m1)
    t = (r0 + r1).astype(np.float64)
    fr0 = r0.astype(np.float64)
    fr1 = r1.astype(np.float64)
    num = n * (fr1 * m0 - fr0 * m1) ** 2
    den = float(m0) * float(m1) * t * (n - t)
    with np.errstate(divide="ignore", invalid="ignore"):
        stat = num / den
    return np.where((t == 0.0) | (t == n), 0.0, stat)


def _wald_cells(a, b, c, d):
    # a = case carriers, b = case non-carriers, c = control carriers,
    # d = control non-carriers; caller guarantees all four are > 0.
    lor = np.log((a * d) / (b * c))
    var = 1.0 / a + 1.0 / b + 1.0 / c + 1.0 / d
    return lor * lor / var


def _wald(m0: int, m1: int, r0, r1, regularized: bool):
    a = r1.astype(np.float64)
    c = r0.astype(np.float64)
    b = m1 - a
    d = m0 - c
    zero_cell = (a == 0.0) | (b == 0.0) | (c == 0.0) | (d == 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        plain = _wald_cells(a, b, c, d)
    plain = np.where(zero_cell, 0.0, plain)
    if not regularized:
        return plain
    reg = _wald_cells(a + 0.5, b + 0.5, c + 0.5, d + 0.5)
    return np.where(zero_cell, reg, plain)


def _xlogy(x, y):
    # x*log(y) with the 0*log0 = 0 convention; y > 0 wherever x > 0 here.
    out = np.zeros_like(x)
    pos = x > 0.0
    out[pos] = x[pos] * np.log(x[pos] / y[pos])
    return out


def _lrt(m0: int, m1: int, r0, r1):
    n = float(m0 + m1)
    a = r1.astype(np.float64)
    c = r0.astype(np.float64)
    b = m1 - a
    d = m0 - c
    t = a + c
    ea = m1 * t / n
    eb = m1 * (n - t) / n
    ec = m0 * t / n
    ed = m0 * (n - t) / n
    g = _xlogy(a, ea) + _xlogy(b, eb) + _xlogy(c, ec) + _xlogy(d, ed)
    return np.maximum(2.0 * g, 0.0)


def _firth(m0: int, m1: int, r0, r1):
    n = float(m0 + m1)
    fr1 = r1.astype(np.float64)
    fr0 = r0.astype(np.float64)
    t = fr0 + fr1
    # Closed-form penalized optima: carriers, non-carriers, and the
    # restricted (slope = 0) fit under the full-model Jeffreys penalty.
    p1 = (fr1 + 0.5) / (t + 1.0)
    q1 = (t - fr1 + 0.5) / (t + 1.0)
    p0 = (m1 - fr1 + 0.5) / (n - t + 1.0)
    q0 = (m0 - fr0 + 0.5) / (n - t + 1.0)
    pr = (m1 + 1.0) / (n + 2.0)
    qr = (m0 + 1.0) / (n + 2.0)
    # 2*(loglik difference) grouped as relative-entropy terms plus the
    # penalty ratio, so nothing large cancels.
    ll = (
        fr1 * np.log(p1 / pr)
        + (t - fr1) * np.log(q1 / qr)
        + (m1 - fr1) * np.log(p0 / pr)
        + (m0 - fr0) * np.log(q0 / qr)
    )
    pen = np.log(p1 * q1 / (pr * qr)) + np.log(p0 * q0 / (pr * qr))
    stat = 2.0 * ll + pen
    stat = np.where((t == 0.0) | (t == n), 0.0, stat)
    return np.maximum(stat, 0.0)


def statistics(kind: int, m0: int, m1: int, r0: np.ndarray, r1: np.ndarray) -> np.ndarray:
    """Statistics of the given kind for each table (m0, m1, r0[i], r1[i])."""
    r0 = np.ascontiguousarray(r0, dtype=np.int64)
    r1 = np.ascontiguousarray(r1, dtype=np.int64)
    if kind == SCORE:
        return _score(m0, m1, r0, r1)
    if kind == WALD:
        return _wald(m0, m1, r0, r1, regularized=False)
    if kind == WALD_REG:
        return _wald(m0, m1, r0, r1, regularized=True)
    if kind == LRT:
        return _lrt(m0, m1, r0, r1)
    if kind == FIRTH:
        return _firth(m0, m1, r0, r1)
    raise ValueError(f"unknown statistic kind code {kind}")
