"""Fubini-Study geometry on P^k and seeded random-stream plumbing.

Points of P^k are unit vectors in C^(k+1) (numpy arrays, last axis of
length k+1).  The chordal distance d(x, y) = ||x ^ y|| / (||x|| ||y||) is
scale-free and bounded by 1.  Random streams are Philox counter-based
generators keyed by (seed, tag) so that results never depend on chunking
or worker count.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Optional, Tuple

import numpy as np


def make_rng(seed: int, *tags) -> np.random.Generator:
    """Counter-based generator for (seed, tags); stable across platforms."""
    digest = hashlib.sha256(repr((int(seed),) + tags).encode()).digest()
    key = int.from_bytes(digest[:16], "little")
    return np.random.Generator(np.random.Philox(key=key))


def normalize(Z: np.ndarray) -> np.ndarray:
    """Scale rows to unit norm (last axis)."""
    Z = np.asarray(Z, dtype=complex)
    norms = np.linalg.norm(Z, axis=-1, keepdims=True)
    return Z / norms


def norms(Z: np.ndarray) -> np.ndarray:
    return np.linalg.norm(np.asarray(Z), axis=-1)


def fs_distance(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Chordal Fubini-Study distance, broadcasting over leading axes."""
    X = np.asarray(X, dtype=complex)
    Y = np.asarray(Y, dtype=complex)
    nx = np.linalg.norm(X, axis=-1)
    ny = np.linalg.norm(Y, axis=-1)
    inner = np.abs(np.sum(X * np.conj(Y), axis=-1))
    cos2 = np.clip((inner / (nx * ny)) ** 2, 0.0, 1.0)
    return np.sqrt(1.0 - cos2)


def fs_distance_to_set(X: np.ndarray, witnesses: np.ndarray) -> np.ndarray:
    """Min FS distance from each row of X to a finite witness set."""
    X = np.atleast_2d(np.asarray(X, dtype=complex))
    W = np.atleast_2d(np.asarray(witnesses, dtype=complex))
    d = fs_distance(X[:, None, :], W[None, :, :])
    return d.min(axis=1)


def fs_uniform(k: int, M: int, rng: np.random.Generator) -> np.ndarray:
    """M points uniform for the Fubini-Study volume on P^k.

    Normalized standard complex Gaussians in C^(k+1) project to the FS
    volume; this is the unitary-invariant measure.
    """
    re = rng.standard_normal((M, k + 1))
    im = rng.standard_normal((M, k + 1))
    return normalize(re + 1j * im)


def orthonormal_complement(Z: np.ndarray) -> np.ndarray:
    """Orthonormal basis of Z-perp for unit rows Z: shape (..., k+1, k).

    Columns 1..k of the Householder reflection sending e_0 to a phase
    multiple of Z form the basis; fully vectorized and deterministic.
    """
    Z = np.asarray(Z, dtype=complex)
    squeeze = Z.ndim == 1
    if squeeze:
        Z = Z[None, :]
    n = Z.shape[-1]
    z0 = Z[..., 0]
    phase = np.where(np.abs(z0) > 0, z0 / np.where(np.abs(z0) > 0, np.abs(z0), 1.0), 1.0)
    v = Z.copy()
    v[..., 0] += phase
    vn2 = np.sum(np.abs(v) ** 2, axis=-1)
    # H = I - 2 v v^H / |v|^2 ; H e_0 = -phase * Z, so columns 1.. span Z-perp
    H = np.broadcast_to(np.eye(n, dtype=complex), Z.shape[:-1] + (n, n)).copy()
    H -= 2.0 * v[..., :, None] * np.conj(v[..., None, :]) / vn2[..., None, None]
    B = H[..., :, 1:]
    return B[0] if squeeze else B


def chart_index(Z: np.ndarray) -> np.ndarray:
    """Standard affine chart assignment: index of the largest |coordinate|."""
    return np.argmax(np.abs(np.asarray(Z)), axis=-1)


def chart_coords(Z: np.ndarray, chart: np.ndarray) -> np.ndarray:
    """Affine coordinates in the given chart: the k ratios z_j / z_chart."""
    Z = np.atleast_2d(np.asarray(Z, dtype=complex))
    chart = np.atleast_1d(chart)
    M, n = Z.shape
    denom = Z[np.arange(M), chart]
    W = Z / denom[:, None]
    mask = np.ones((M, n), dtype=bool)
    mask[np.arange(M), chart] = False
    return W[mask].reshape(M, n - 1)


def differential_frames(J: np.ndarray, Z: np.ndarray, FZ: np.ndarray
                        ) -> Tuple[np.ndarray, np.ndarray]:
    """Projective differential in orthonormal frames, batched.

    J: (..., k+1, k+1) Jacobian of the lift at Z (unit rows);
    FZ: (..., k+1) value of the lift.  Returns (D, fz_norm) where
    D = P_{F^_perp} . J . incl_{Z_perp} / |F(Z)| has shape (..., k, k).
    The radial directions drop out exactly (Euler identity), so D is the
    derivative of the induced map of P^k in unitary frames.
    """
    Z = np.asarray(Z, dtype=complex)
    FZ = np.asarray(FZ, dtype=complex)
    fz_norm = np.linalg.norm(FZ, axis=-1)
    safe = np.where(fz_norm > 0, fz_norm, 1.0)
    Fhat = FZ / safe[..., None]
    Bin = orthonormal_complement(Z)          # (..., k+1, k)
    Bout = orthonormal_complement(Fhat)      # (..., k+1, k)
    D = np.swapaxes(np.conj(Bout), -1, -2) @ J @ Bin
    D = D / safe[..., None, None]
    return D, fz_norm


def hermitian_eye(shape_like: np.ndarray, k: int) -> np.ndarray:
    return np.broadcast_to(np.eye(k, dtype=complex), shape_like.shape[:-2] + (k, k)).copy()


def elementary_symmetric(values: np.ndarray, q: int) -> np.ndarray:
    """e_q over the last axis, evaluated by the stable recurrence.

    Computed via the Newton-Girard-free direct product expansion:
    prod(1 + t v_i) coefficients, vectorized over leading axes.
    """
    values = np.asarray(values)
    k = values.shape[-1]
    if q < 0 or q > k:
        raise ValueError(f"e_{q} undefined for {k} values")
    coeffs = np.zeros(values.shape[:-1] + (k + 1,), dtype=values.dtype)
    coeffs[..., 0] = 1.0
    for i in range(k):
        v = values[..., i]
        coeffs[..., 1:i + 2] = coeffs[..., 1:i + 2] + v[..., None] * coeffs[..., 0:i + 1]
    return coeffs[..., q]
