"""Numerical check of the gap inequality 2*I2*J2 - 3*J4 >= 0.

Minimizing 2*I2*J2 - 3*J4 over unit-norm pairs (D, u) probes the inequality's
sharp constant: the minimum over {I2(D) = 1, J2(u) = 1} is 0.2.  For fixed D
the objective is 2 - 3 u^T M(D) u with M(D)_kl = D_ijk D_ijl, so the optimal
unit u is the top eigenvector of M(D) and the search reduces to the
7-dimensional unit sphere of deviators.  The reduced problem is attacked by
multi-start projected gradient descent with Armijo backtracking.

This module certifies *consistency* with the 0.2 minimum claim - multi-start
local search plus large-sample probing - not global optimality.

All randomness is seeded; per-start trajectories depend only on
(seed, start index).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .invariants import all_invariants
from .tensor_core import HarmonicParts, Traceless3Tensor, expand

GRAD_TOL = 1e-9
EIGEN_GAP_TOL = 1e-8
ARMIJO_INIT = 0.5
ARMIJO_SHRINK = 0.5
ARMIJO_SLOPE = 1e-4


def _orthonormal_deviator_basis():
    """Orthonormal basis (in the 27-entry Euclidean metric) of the deviator space."""
    basis = []
    for a in range(7):
        comps = [0.0] * 7
        comps[a] = 1.0
        t = expand(Traceless3Tensor(tuple(comps)))
        v = [t[i][j][k] for i in range(3) for j in range(3) for k in range(3)]
        for p in basis:
            dot = sum(x * y for x, y in zip(v, p))
            v = [x - dot * y for x, y in zip(v, p)]
        norm = math.sqrt(sum(x * x for x in v))
        basis.append([x / norm for x in v])
    return basis


_BASIS = _orthonormal_deviator_basis()

# 27-entry flattening of the component placement, for coordinate readback:
# independent component positions (i, j, k) zero-based -> flat index 9i+3j+k
_INDEP_FLAT = (0, 1, 2, 4, 5, 13, 14)  # D111 D112 D113 D122 D123 D222 D223


def deviator_from_coords(x) -> Traceless3Tensor:
    """Deviator whose 27-entry expansion is sum_a x[a] * basis[a]."""
    flat = [0.0] * 27
    for c, e in zip(x, _BASIS):
        for i in range(27):
            flat[i] += c * e[i]
    return Traceless3Tensor(tuple(flat[i] for i in _INDEP_FLAT))


def coords_from_deviator(d: Traceless3Tensor):
    t = expand(d)
    flat = [t[i][j][k] for i in range(3) for j in range(3) for k in range(3)]
    return [sum(x * y for x, y in zip(flat, e)) for e in _BASIS]


def _contraction_matrix(flat):
    """M(D)_kl = D_ijk D_ijl from the flat 27-entry expansion."""
    m = [[0.0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            base = 9 * i + 3 * j
            for k in range(3):
                dk = flat[base + k]
                if dk:
                    row = m[k]
                    for l in range(3):
                        row[l] += dk * flat[base + l]
    return m


def symmetric_eigh3(m):
    """Eigenvalues (ascending) and eigenvectors of a symmetric 3x3, cyclic Jacobi.

    Sweeps until the off-diagonal is below 1e-14 * scale, which puts the
    eigenresidual |M w - lambda w| well under 1e-12 for unit-scale input.
    """
    a = [row[:] for row in m]
    v = [[1.0 if i == j else 0.0 for j in range(3)] for i in range(3)]
    scale = max(1.0, max(abs(a[i][j]) for i in range(3) for j in range(3)))
    for _ in range(30):
        if max(abs(a[0][1]), abs(a[0][2]), abs(a[1][2])) < 1e-14 * scale:
            break
        for p in range(2):
            for q in range(p + 1, 3):
                if abs(a[p][q]) < 1e-300:
                    continue
                theta = 0.5 * math.atan2(2.0 * a[p][q], a[q][q] - a[p][p])
                c, s = math.cos(theta), math.sin(theta)
                for k in range(3):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k], a[q][k] = c * apk - s * aqk, s * apk + c * aqk
                for k in range(3):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p], a[k][q] = c * akp - s * akq, s * akp + c * akq
                for k in range(3):
                    vkp, vkq = v[k][p], v[k][q]
                    v[k][p], v[k][q] = c * vkp - s * vkq, s * vkp + c * vkq
    order = sorted(range(3), key=lambda i: a[i][i])
    eigenvalues = [a[i][i] for i in order]
    eigenvectors = [[v[k][i] for k in range(3)] for i in order]
    return eigenvalues, eigenvectors


@dataclass(frozen=True)
class FeasiblePoint:
    """Unit-norm deviator plus unit vector: I2(D) = 1, J2(u) = 1."""

    deviator: Traceless3Tensor
    vector: tuple

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(self.vector))

    def feasibility_defect(self) -> float:
        iv = all_invariants(HarmonicParts(self.deviator, self.vector))
        return max(abs(iv["I2"] - 1.0), abs(iv["J2"] - 1.0))


def objective(p: FeasiblePoint, feas_tol: float = 1e-3) -> float:
    """2*I2*J2 - 3*J4 at a feasible point, evaluated through the invariants.

    feas_tol bounds the accepted deviation of I2 and J2 from 1; the default
    is loose enough for points specified to 4 significant digits.
    """
    iv = all_invariants(HarmonicParts(p.deviator, p.vector))
    defect = max(abs(iv["I2"] - 1.0), abs(iv["J2"] - 1.0))
    if defect > feas_tol:
        raise ValueError(f"infeasible point (defect {defect:.3e} > {feas_tol:.1e})")
    return 2.0 * iv["I2"] * iv["J2"] - 3.0 * iv["J4"]


def inner_solve_u(d: Traceless3Tensor, tol: float = 1e-6):
    """Optimal unit u for a unit-norm deviator, and the reduced objective.

    J4 = u^T M(D) u, so the best u is the top eigenvector of M(D) and the
    objective value is 2 - 3 * lambda_max(M(D)).
    """
    x = coords_from_deviator(d)
    norm2 = sum(c * c for c in x)
    if abs(norm2 - 1.0) > tol:
        raise ValueError(f"deviator norm^2 = {norm2:.6f}, expected 1")
    t = expand(d)
    flat = [t[i][j][k] for i in range(3) for j in range(3) for k in range(3)]
    eigenvalues, eigenvectors = symmetric_eigh3(_contraction_matrix(flat))
    return tuple(eigenvectors[-1]), 2.0 - 3.0 * eigenvalues[-1]


def _reduced_value(x):
    flat = [0.0] * 27
    for c, e in zip(x, _BASIS):
        for i in range(27):
            flat[i] += c * e[i]
    eigenvalues, _ = symmetric_eigh3(_contraction_matrix(flat))
    return 2.0 - 3.0 * eigenvalues[-1]


def _reduced_value_grad(x):
    """Value, sphere-projected gradient, and top eigen gap at unit coords x."""
    flat = [0.0] * 27
    for c, e in zip(x, _BASIS):
        for i in range(27):
            flat[i] += c * e[i]
    eigenvalues, eigenvectors = symmetric_eigh3(_contraction_matrix(flat))
    lam = eigenvalues[-1]
    gap = eigenvalues[-1] - eigenvalues[-2]
    w = eigenvectors[-1]
    # d(lambda_max)/dD_ijk = 2 (sum_l D_ijl w_l) w_k
    g27 = [0.0] * 27
    for i in range(3):
        for j in range(3):
            base = 9 * i + 3 * j
            s = flat[base] * w[0] + flat[base + 1] * w[1] + flat[base + 2] * w[2]
            g27[base] = 2.0 * s * w[0]
            g27[base + 1] = 2.0 * s * w[1]
            g27[base + 2] = 2.0 * s * w[2]
    grad = [-3.0 * sum(gi * ei for gi, ei in zip(g27, e)) for e in _BASIS]
    radial = sum(gi * xi for gi, xi in zip(grad, x))
    grad = [gi - radial * xi for gi, xi in zip(grad, x)]
    return 2.0 - 3.0 * lam, grad, gap


def _normalize(x):
    n = math.sqrt(sum(v * v for v in x))
    return [v / n for v in x]


def _descend(x, iters, rng):
    """Projected gradient descent on the unit sphere with Armijo backtracking."""
    for _ in range(iters):
        f, grad, gap = _reduced_value_grad(x)
        grad_norm = math.sqrt(sum(g * g for g in grad))
        if grad_norm <= GRAD_TOL:
            break
        if gap < EIGEN_GAP_TOL:
            # nonsmooth near an eigenvalue crossing: restart from a nudge
            x = _normalize([xi + 1e-6 * rng.gauss(0.0, 1.0) for xi in x])
            continue
        step = ARMIJO_INIT
        moved = False
        while step > 1e-16:
            candidate = _normalize([xi - step * gi for xi, gi in zip(x, grad)])
            if _reduced_value(candidate) <= f - ARMIJO_SLOPE * step * grad_norm ** 2:
                x = candidate
                moved = True
                break
            step *= ARMIJO_SHRINK
        if not moved:
            break  # no descent direction at working precision
    f, grad, _ = _reduced_value_grad(x)
    grad_norm = math.sqrt(sum(g * g for g in grad))
    return x, f, grad_norm


@dataclass(frozen=True)
class MinimizeResult:
    point: FeasiblePoint
    value: float
    grad_norm: float
    start_index: int


def minimize(seed: int, starts: int, iters: int) -> MinimizeResult:
    """Multi-start projected gradient descent; deterministic in the seed."""
    if starts < 1 or iters < 1:
        raise ValueError("starts and iters must be >= 1")
    best = None
    for s in range(starts):
        rng = random.Random(f"{seed}:{s}")
        x0 = _normalize([rng.gauss(0.0, 1.0) for _ in range(7)])
        x, f, grad_norm = _descend(x0, iters, rng)
        if best is None or f < best[1]:
            best = (x, f, grad_norm, s)
    x, f, grad_norm, s = best
    d = deviator_from_coords(x)
    u, _ = inner_solve_u(d)
    return MinimizeResult(FeasiblePoint(d, u), f, grad_norm, s)


def refine_from(d: Traceless3Tensor, iters: int, seed: int = 0) -> MinimizeResult:
    """Run the descent from a given deviator (renormalized to the sphere)."""
    x = _normalize(coords_from_deviator(d))
    x, f, grad_norm = _descend(x, iters, random.Random(f"refine:{seed}"))
    dev = deviator_from_coords(x)
    u, _ = inner_solve_u(dev)
    return MinimizeResult(FeasiblePoint(dev, u), f, grad_norm, -1)


def sample_feasible_values(seed: int, count: int, chunk: int = 100_000) -> np.ndarray:
    """Objective values at seeded random unit-norm (D, u) pairs, vectorized.

    Draws Gaussian deviator coordinates and vectors, normalizes both to the
    unit sphere (this is the homogeneity normalization of arbitrary pairs),
    and evaluates 2 - 3 u^T M(D) u.
    """
    rng = np.random.default_rng(seed)
    basis = np.array(_BASIS)  # (7, 27)
    out = np.empty(count)
    done = 0
    while done < count:
        n = min(chunk, count - done)
        x = rng.standard_normal((n, 7))
        x /= np.linalg.norm(x, axis=1, keepdims=True)
        flat = (x @ basis).reshape(n, 9, 3)
        m = np.einsum("nak,nal->nkl", flat, flat)
        u = rng.standard_normal((n, 3))
        u /= np.linalg.norm(u, axis=1, keepdims=True)
        j4 = np.einsum("nk,nkl,nl->n", u, m, u)
        out[done:done + n] = 2.0 - 3.0 * j4
        done += n
    return out
