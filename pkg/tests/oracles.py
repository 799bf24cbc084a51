"""Finite-difference oracles and random inputs shared by the test modules.

Everything here deliberately avoids the jet pipeline: derivatives come
from central differences on plain float evaluation, so agreement with
the package is a two-route check, not a tautology.
"""

from __future__ import annotations

import math

import numpy as np

from geoverify.chart import Point

GRAD_STEP = 1e-4
HESS_STEP = 1e-3


def rand_point(rng: np.random.Generator) -> Point:
    return Point(
        rng.uniform(-2.0, 2.0),
        rng.uniform(-2.0, 2.0),
        rng.uniform(-2.0, 2.0),
        rng.uniform(0.5, 2.0),
    )


def _shift(p, k, h):
    q = list(p)
    q[k] += h
    return q


def fd_gradient(f, p, h: float = GRAD_STEP) -> np.ndarray:
    p = list(p)
    out = np.empty(4)
    for k in range(4):
        out[k] = (f(*_shift(p, k, h)) - f(*_shift(p, k, -h))) / (2.0 * h)
    return out


def fd_hessian_richardson(f, p, h: float = 2e-3) -> np.ndarray:
    """Richardson-extrapolated Hessian: kills the O(h^2) truncation term."""
    return (4.0 * fd_hessian(f, p, h / 2) - fd_hessian(f, p, h)) / 3.0


def fd_hessian(f, p, h: float = HESS_STEP) -> np.ndarray:
    p = list(p)
    out = np.empty((4, 4))
    f0 = f(*p)
    for k in range(4):
        out[k, k] = (f(*_shift(p, k, h)) - 2.0 * f0 + f(*_shift(p, k, -h))) / (h * h)
    for a in range(4):
        for b in range(a + 1, 4):
            pp = f(*_shift(_shift(p, a, h), b, h))
            pm = f(*_shift(_shift(p, a, h), b, -h))
            mp = f(*_shift(_shift(p, a, -h), b, h))
            mm = f(*_shift(_shift(p, a, -h), b, -h))
            out[a, b] = out[b, a] = (pp - pm - mp + mm) / (4.0 * h * h)
    return out


# closed-form metric data for the coordinate-formula oracles; these are the
# published matrices, entered independently of geoverify.chart
def metric_entries(x, y, s, t) -> np.ndarray:
    return np.array(
        [
            [1.0 / t, -s / t, 0.0, 0.0],
            [-s / t, (s * s + t * t) / t, 0.0, 0.0],
            [0.0, 0.0, 1.0 / (4 * t * t), 0.0],
            [0.0, 0.0, 0.0, 1.0 / (4 * t * t)],
        ]
    )


def inverse_metric_entries(x, y, s, t) -> np.ndarray:
    return np.array(
        [
            [t + s * s / t, s / t, 0.0, 0.0],
            [s / t, 1.0 / t, 0.0, 0.0],
            [0.0, 0.0, 4 * t * t, 0.0],
            [0.0, 0.0, 0.0, 4 * t * t],
        ]
    )


def sqrt_det_metric(x, y, s, t) -> float:
    # the x/y block has unit determinant, so sqrt(det g) = 1/(4 t^2)
    return 1.0 / (4.0 * t * t)


def fd_christoffel(p, h: float = GRAD_STEP) -> np.ndarray:
    """Gamma^k_ij from central differences of the metric entries."""
    p = list(p)
    dg = np.empty((4, 4, 4))
    for m in range(4):
        gp = metric_entries(*_shift(p, m, h))
        gm = metric_entries(*_shift(p, m, -h))
        dg[m] = (gp - gm) / (2.0 * h)
    ginv = inverse_metric_entries(*p)
    S = dg + dg.transpose(1, 0, 2) - dg.transpose(2, 1, 0)
    return 0.5 * np.einsum("kd,abd->kab", ginv, S)


def fd_laplace_beltrami(f, p, h: float = HESS_STEP) -> float:
    """Divergence-form Laplacian (1/sqrt g) d_a (sqrt g g^{ab} d_b f) by nested FD."""

    def flux(a, q):
        return sqrt_det_metric(*q) * float(inverse_metric_entries(*q)[a] @ fd_gradient(f, q, h))

    p = list(p)
    total = 0.0
    for a in range(4):
        total += (flux(a, _shift(p, a, h)) - flux(a, _shift(p, a, -h))) / (2.0 * h)
    return total / sqrt_det_metric(*p)


def fd_lie_derivative_metric(xi_components, p, h: float = GRAD_STEP) -> np.ndarray:
    """(L_xi g)_ab in coordinates from FD partials of g and the field."""
    p = list(p)
    g = metric_entries(*p)
    dg = np.empty((4, 4, 4))
    for m in range(4):
        dg[m] = (metric_entries(*_shift(p, m, h)) - metric_entries(*_shift(p, m, -h))) / (2.0 * h)
    xi = np.array([float(c(*p)) for c in xi_components])
    dxi = np.empty((4, 4))  # dxi[a, c] = d_a xi^c
    for a in range(4):
        qp, qm = _shift(p, a, h), _shift(p, a, -h)
        dxi[a] = [(c(*qp) - c(*qm)) / (2.0 * h) for c in xi_components]
    return np.einsum("c,cab->ab", xi, dg) + np.einsum("ac,cb->ab", dxi, g) + np.einsum("bc,ac->ab", dxi, g)


# ---------------------------------------------------------------------------
# random closed-form expressions for the jet-vs-FD sweeps


def random_expression(rng: np.random.Generator, max_depth: int = 4):
    """A random guarded expression in (x, y, s, t), safe on the sampling box.

    Division, square roots and fractional powers only ever see arguments
    bounded away from their branch points, so both the jet and the FD
    evaluation stay well conditioned.
    """
    from geoverify.jets import sqrt as jsqrt

    def build(depth):
        roll = rng.uniform()
        if depth <= 0 or roll < 0.25:
            if rng.uniform() < 0.7:
                k = int(rng.integers(0, 4))
                return lambda x, y, s, t: (x, y, s, t)[k]
            c = float(rng.uniform(0.5, 2.0))
            return lambda x, y, s, t: c
        if roll < 0.45:
            u = build(depth - 1)
            kind = int(rng.integers(0, 4))
            if kind == 0:
                return lambda x, y, s, t: jsqrt(0.5 + u(x, y, s, t) ** 2)
            if kind == 1:
                return lambda x, y, s, t: 1.0 / (1.0 + u(x, y, s, t) ** 2)
            if kind == 2:
                r = float(rng.choice([-2.0, -1.0, -0.5, 0.5, 1.5, 2.0, 3.0]))
                return lambda x, y, s, t: (0.5 + u(x, y, s, t) ** 2) ** r
            return lambda x, y, s, t: -u(x, y, s, t)
        a, b = build(depth - 1), build(depth - 1)
        kind = int(rng.integers(0, 4))
        if kind == 0:
            return lambda x, y, s, t: a(x, y, s, t) + b(x, y, s, t)
        if kind == 1:
            return lambda x, y, s, t: a(x, y, s, t) - b(x, y, s, t)
        if kind == 2:
            return lambda x, y, s, t: a(x, y, s, t) * b(x, y, s, t)
        return lambda x, y, s, t: a(x, y, s, t) / (1.0 + b(x, y, s, t) ** 2)

    return build(max_depth)


def tame_expression_at(rng: np.random.Generator, bound: float = 200.0):
    """(expression, point) pair with value, gradient and Hessian below ``bound``."""
    from geoverify.jets import point_jets

    while True:
        expr = random_expression(rng)
        p = rand_point(rng)
        jet = expr(*point_jets(p))
        if not hasattr(jet, "hess"):
            continue  # degenerate constant draw
        mags = (abs(jet.value), float(np.max(np.abs(jet.grad))), float(np.max(np.abs(jet.hess))))
        if math.isfinite(sum(mags)) and max(mags) <= bound:
            return expr, p, jet
