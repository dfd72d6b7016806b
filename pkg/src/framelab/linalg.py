"""Hermitian linear algebra on small dense matrices.

The eigensolver is a cyclic complex Jacobi iteration written here on
purpose rather than delegated to LAPACK, so that eigenvalue order,
eigenvector phases, and convergence behaviour are identical on every
platform and fully under our control.  Everything runs through one
complex code path; outputs whose imaginary parts are below tolerance
are demoted to real arrays.

Conventions
-----------
* Eigenvalues are returned in ascending order.
* Each eigenvector column is rotated so that its first entry of
  magnitude above 1e-12 is real and positive.
* ``tol=None`` means use :data:`DEFAULT_TOL`.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import (
    DimMismatchError,
    InputError,
    NoConvergenceError,
    NotHermitianError,
    NotSquareError,
    SingularOrIndefiniteError,
)
from .rng import SplitMix64

DEFAULT_TOL = 1e-10

_MAX_SWEEPS = 100


class HermitianEig(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def resolve_tol(tol: float | None) -> float:
    """Replace ``None`` with the package default tolerance."""
    if tol is None:
        return DEFAULT_TOL
    tol = float(tol)
    if not (tol > 0.0) or not math.isfinite(tol):
        raise InputError("tolerance must be a positive finite number")
    return tol


def demote_if_real(a: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Return a real view of ``a`` when every imaginary part is tiny."""
    if not np.iscomplexobj(a):
        return a
    if a.size == 0 or float(np.max(np.abs(a.imag))) <= tol:
        return np.ascontiguousarray(a.real)
    return a


def _as_matrix(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m)
    if a.dtype.kind not in "fiucb":
        raise InputError(f"{name} must be numeric")
    a = a.astype(np.complex128, copy=False)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquareError(f"{name} must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise InputError(f"{name} contains non-finite entries")
    return a


def _check_hermitian(a: np.ndarray, tol: float, name: str = "matrix") -> None:
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    dev = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if dev > tol * max(1.0, scale):
        raise NotHermitianError(
            f"{name} deviates from Hermitian by {dev:.3e} "
            f"(allowed {tol * max(1.0, scale):.3e})"
        )


def _offdiag_norm(a: np.ndarray) -> float:
    # Computed directly on the off-diagonal part. Subtracting squared
    # norms instead cancels catastrophically and stalls convergence.
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _jacobi(a: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic complex Jacobi sweeps on a Hermitian matrix.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol`` times the Frobenius norm of the input, after which one
    extra polishing sweep runs to push rotations to roundoff.  Raises
    after 100 sweeps without convergence.
    """
    d = a.shape[0]
    work = a.copy()
    vecs = np.eye(d, dtype=np.complex128)
    if d == 1:
        return work, vecs

    fro = float(np.sqrt(np.sum(np.abs(work) ** 2)))
    if fro == 0.0:
        return work, vecs
    thresh = tol * fro

    polish = False
    for _ in range(_MAX_SWEEPS):
        off = _offdiag_norm(work)
        if off <= thresh:
            if polish or off <= 1e-14 * fro:
                return work, vecs
            polish = True

        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = work[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    # nothing to rotate; also keeps tau finite below
                    continue
                phi = math.atan2(apq.imag, apq.real)
                tau = (work[q, q].real - work[p, p].real) / (2.0 * mag)
                if abs(tau) > 1e150:
                    # asymptotic form; tau * tau would overflow
                    t = 0.5 / tau
                elif tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                eiphi = complex(math.cos(phi), math.sin(phi))

                row_p = c * work[p, :] - s * eiphi * work[q, :]
                row_q = s * work[p, :] + c * eiphi * work[q, :]
                work[p, :] = row_p
                work[q, :] = row_q

                col_p = c * work[:, p] - s * eiphi.conjugate() * work[:, q]
                col_q = s * work[:, p] + c * eiphi.conjugate() * work[:, q]
                work[:, p] = col_p
                work[:, q] = col_q

                vcol_p = c * vecs[:, p] - s * eiphi.conjugate() * vecs[:, q]
                vcol_q = s * vecs[:, p] + c * eiphi.conjugate() * vecs[:, q]
                vecs[:, p] = vcol_p
                vecs[:, q] = vcol_q

    if _offdiag_norm(work) <= thresh:
        return work, vecs
    raise NoConvergenceError(
        f"eigensolver did not converge within {_MAX_SWEEPS} sweeps"
    )


def _fix_phases(vecs: np.ndarray) -> np.ndarray:
    d = vecs.shape[0]
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        idx = 0
        for i in range(d):
            if abs(col[i]) > 1e-12:
                idx = i
                break
        else:
            idx = int(np.argmax(np.abs(col)))
        pivot = col[idx]
        mag = abs(pivot)
        if mag > 0.0:
            vecs[:, j] = col * (pivot.conjugate() / mag)
            # Scrub the tiny imaginary residue the rotation leaves behind.
            vecs[idx, j] = complex(abs(vecs[idx, j].real), 0.0)
    return vecs


def hermitian_eig(m, tol: float | None = None) -> HermitianEig:
    """Full eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m : array_like
        Square matrix, Hermitian within ``tol`` relative to its largest
        entry.  The strictly Hermitian part ``(M + M*)/2`` is what gets
        diagonalized.
    tol : float, optional
        Tolerance for the Hermitian check and for convergence.

    Returns
    -------
    HermitianEig
        ``eigenvalues`` ascending (real float array) and
        ``eigenvectors`` with matching orthonormal columns.  For a real
        symmetric input the eigenvector matrix is demoted to real.

    Raises
    ------
    NotSquareError
        If ``m`` is not square.
    NotHermitianError
        If ``m`` is too far from Hermitian.
    NoConvergenceError
        If the sweep cap is reached, which for sane input it is not.
    """
    tol = resolve_tol(tol)
    a = _as_matrix(m)
    _check_hermitian(a, tol)
    herm = (a + a.conj().T) / 2.0

    diag, vecs = _jacobi(herm, tol)
    values = np.ascontiguousarray(np.diag(diag).real)

    order = np.argsort(values, kind="stable")
    values = values[order]
    vecs = vecs[:, order]
    vecs = _fix_phases(vecs)
    return HermitianEig(values, demote_if_real(vecs, tol))


def psd_inv_sqrt(m, tol: float | None = None) -> np.ndarray:
    """Inverse square root of a positive definite Hermitian matrix.

    Eigenvalues below ``tol`` make the problem ill-posed and raise
    :class:`SingularOrIndefiniteError`.  The result is re-symmetrized
    so it is Hermitian to roundoff, and demoted to real when the input
    was real.
    """
    tol = resolve_tol(tol)
    values, vecs = hermitian_eig(m, tol)
    if float(values[0]) < tol:
        raise SingularOrIndefiniteError(
            f"smallest eigenvalue {values[0]:.3e} is below the cutoff {tol:.3e}"
        )
    vc = vecs.astype(np.complex128, copy=False)
    root = (vc * (values ** -0.5)) @ vc.conj().T
    root = (root + root.conj().T) / 2.0
    return demote_if_real(root, tol)


def trace(m) -> float | complex:
    """Trace of a square matrix, demoted to float when it is real."""
    a = _as_matrix(m)
    t = complex(np.trace(a))
    if abs(t.imag) <= DEFAULT_TOL * max(1.0, abs(t.real)):
        return t.real
    return t


def outer(x, y) -> np.ndarray:
    """Rank-one matrix with entries ``x[i] * conj(y[j])``."""
    xv = np.asarray(x)
    yv = np.asarray(y)
    if xv.ndim != 1 or yv.ndim != 1:
        raise DimMismatchError("outer() expects two vectors")
    if xv.shape[0] != yv.shape[0]:
        raise DimMismatchError(
            f"vector lengths differ: {xv.shape[0]} vs {yv.shape[0]}"
        )
    return np.outer(xv, np.conj(yv))


def random_hermitian(d: int, seed: int = 0, field: str = "C") -> np.ndarray:
    """Random Hermitian matrix (G + G*) / 2 from a Gaussian G."""
    d = int(d)
    if d < 1:
        raise InputError("dimension must be at least 1")
    rng = SplitMix64(seed)
    if field == "C":
        g = rng.complex_gaussians((d, d))
    else:
        g = rng.gaussians((d, d))
    return (g + g.conj().T) / 2.0
