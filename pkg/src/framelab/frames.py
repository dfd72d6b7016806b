"""Finite frames for R^d and C^d.

A frame is stored as an (N, d) array whose rows are the vectors, plus
a field tag "R" or "C".  Real frames keep a float64 array with zero
imaginary part by construction; complex frames keep complex128.  The
frame operator of row matrix X is X^T conj(X) acting on column
vectors, its extreme eigenvalues are the optimal frame bounds, and a
frame is Parseval exactly when that operator is the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .errors import (
    BadCardinalityError,
    BadSelectorError,
    BasisNotOrthonormalError,
    InputError,
    NotAFrameError,
    NotParsevalError,
    NotUnitNormError,
    TooFewVectorsError,
)
from .linalg import DEFAULT_TOL, resolve_tol
from .rng import SplitMix64

_FIELDS = ("R", "C")


@dataclass(frozen=True, eq=False)
class Frame:
    """An ordered finite set of vectors in R^d or C^d.

    ``vectors`` has one vector per row.  The constructor normalizes the
    dtype to match ``field`` and rejects complex data tagged as real.
    """

    vectors: np.ndarray
    field: str = "C"

    def __post_init__(self):
        if self.field not in _FIELDS:
            raise InputError(f"field must be 'R' or 'C', got {self.field!r}")
        a = np.asarray(self.vectors)
        if a.ndim != 2:
            raise InputError(f"vectors must be a 2-d array, got ndim {a.ndim}")
        if a.shape[0] < 1 or a.shape[1] < 1:
            raise InputError(f"empty frame of shape {a.shape}")
        if a.dtype.kind not in "fiucb":
            raise InputError("vectors must be numeric")
        if self.field == "R":
            if np.iscomplexobj(a):
                if a.size and float(np.max(np.abs(a.imag))) != 0.0:
                    raise InputError("real frame has nonzero imaginary parts")
                a = a.real
            a = np.ascontiguousarray(a, dtype=np.float64)
        else:
            a = np.ascontiguousarray(a, dtype=np.complex128)
        if not np.all(np.isfinite(a.real)) or (
            np.iscomplexobj(a) and not np.all(np.isfinite(a.imag))
        ):
            raise InputError("frame contains non-finite entries")
        object.__setattr__(self, "vectors", a)

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    def __len__(self) -> int:
        return int(self.vectors.shape[0])

    def norms(self) -> np.ndarray:
        """Euclidean norm of each vector, in row order."""
        return np.sqrt(np.sum(np.abs(self.vectors) ** 2, axis=1))


@dataclass(frozen=True)
class FrameReport:
    """Summary of the standard frame diagnostics for one frame."""

    num_vectors: int
    dim: int
    field: str
    lower_bound: float
    upper_bound: float
    is_tight: bool
    is_parseval: bool
    is_unit_norm: bool
    is_equiangular: bool
    common_angle: float | None
    coherence: float | None
    welch_bound: float | None
    frame_potential: float
    extra: dict = dc_field(default_factory=dict)


def frame_operator(f: Frame) -> np.ndarray:
    """The positive operator summing the rank-one projections of f."""
    x = f.vectors
    return x.T @ x.conj()


def frame_bounds(f: Frame, tol: float | None = None) -> tuple[float, float]:
    """Optimal frame bounds (A, B).

    These are the extreme eigenvalues of the frame operator.  A is
    positive exactly when the vectors span; A == B means tight.
    """
    values, _ = linalg.hermitian_eig(frame_operator(f), tol)
    return float(values[0]), float(values[-1])


def is_parseval(f: Frame, tol: float | None = None) -> bool:
    """True when the frame operator is the identity within tol."""
    tol = resolve_tol(tol)
    s = frame_operator(f)
    dev = float(np.max(np.abs(s - np.eye(f.dim))))
    return dev <= tol


def canonical_parseval(f: Frame, tol: float | None = None) -> Frame:
    """Canonical Parseval frame obtained through the inverse square
    root of the frame operator.

    Each vector is hit with S^(-1/2), which preserves span and keeps
    every norm at most 1.  Raises :class:`NotAFrameError` when the
    vectors do not span, detected by an eigenvalue of S below tol.
    """
    tol = resolve_tol(tol)
    s = frame_operator(f)
    values, vecs = linalg.hermitian_eig(s, tol)
    if float(values[0]) < tol:
        raise NotAFrameError(
            f"vectors do not span: smallest frame-operator eigenvalue "
            f"is {values[0]:.3e}"
        )
    vc = vecs.astype(np.complex128, copy=False)
    root = (vc * (values ** -0.5)) @ vc.conj().T
    root = (root + root.conj().T) / 2.0
    if f.field == "R":
        root = root.real
    out = f.vectors @ root.T
    return Frame(out, f.field)


def coherence(f: Frame, tol: float | None = None) -> float:
    """Largest pairwise inner-product magnitude of a unit-norm frame."""
    tol = resolve_tol(tol)
    n = len(f)
    if n < 2:
        raise TooFewVectorsError("coherence needs at least two vectors")
    norms = f.norms()
    worst = float(np.max(np.abs(norms - 1.0)))
    if worst > tol:
        raise NotUnitNormError(
            f"vector norms deviate from 1 by up to {worst:.3e}"
        )
    gram = f.vectors @ f.vectors.conj().T
    mags = np.abs(gram)
    np.fill_diagonal(mags, 0.0)
    return float(np.max(mags))


def welch_bound(n: int, d: int) -> float:
    """Lower bound sqrt((N - d) / (d (N - 1))) on unit-norm coherence."""
    n = int(n)
    d = int(d)
    if d < 1 or n < d:
        raise BadCardinalityError(f"need N >= d >= 1, got N={n}, d={d}")
    if n == d:
        return 0.0
    return math.sqrt((n - d) / (d * (n - 1.0)))


def is_equiangular(
    f: Frame, tol: float | None = None
) -> tuple[bool, float | None]:
    """Whether all pairwise inner-product magnitudes agree.

    Returns ``(True, angle)`` with the common magnitude, otherwise
    ``(False, None)``.  Norms are not checked here; combine with
    :func:`coherence` when an equiangular tight frame is the question.
    """
    tol = resolve_tol(tol)
    n = len(f)
    if n < 2:
        raise TooFewVectorsError("equiangularity needs at least two vectors")
    gram = f.vectors @ f.vectors.conj().T
    mags = np.abs(gram)
    idx = np.triu_indices(n, k=1)
    offdiag = mags[idx]
    spread = float(np.max(offdiag) - np.min(offdiag))
    if spread <= tol:
        return True, float(np.mean(offdiag))
    return False, None


def frame_potential(f: Frame) -> float:
    """Sum of squared magnitudes of all N^2 pairwise inner products."""
    gram = f.vectors @ f.vectors.conj().T
    return float(np.sum(np.abs(gram) ** 2))


def project_frame(f: Frame, basis, tol: float | None = None) -> Frame:
    """Coordinates of a Parseval frame in an orthonormal basis of a
    subspace, which is again a Parseval frame of the smaller space.

    ``basis`` holds the subspace basis as rows (m, d).  Raises when
    the basis is not orthonormal or the input frame is not Parseval.
    """
    tol = resolve_tol(tol)
    b = np.asarray(basis)
    if b.ndim == 1:
        b = b.reshape(1, -1)
    if b.ndim != 2 or b.shape[1] != f.dim:
        raise InputError(
            f"basis shape {b.shape} does not match frame dimension {f.dim}"
        )
    b = b.astype(np.complex128, copy=False)
    gram = b @ b.conj().T
    dev = float(np.max(np.abs(gram - np.eye(b.shape[0]))))
    if dev > tol:
        raise BasisNotOrthonormalError(
            f"basis Gram matrix deviates from identity by {dev:.3e}"
        )
    if not is_parseval(f, tol):
        raise NotParsevalError("projection preserves tightness only for "
                               "Parseval frames")
    coords = f.vectors @ b.conj().T
    out_field = f.field
    if out_field == "R" and np.iscomplexobj(b) and float(np.max(np.abs(b.imag))) > 0.0:
        out_field = "C"
    if out_field == "R":
        coords = coords.real
    return Frame(coords, out_field)


def analyze_frame(f: Frame, tol: float | None = None) -> FrameReport:
    """Run the standard diagnostics and bundle them in a report."""
    tol = resolve_tol(tol)
    lower, upper = frame_bounds(f, tol)
    tight = abs(upper - lower) <= tol * max(1.0, abs(upper))
    parseval = is_parseval(f, tol)
    norms = f.norms()
    unit = bool(float(np.max(np.abs(norms - 1.0))) <= tol)
    n, d = len(f), f.dim

    if n >= 2:
        equi, angle = is_equiangular(f, tol)
    else:
        equi, angle = True, None
    coh = coherence(f, tol) if (unit and n >= 2) else None
    welch = welch_bound(n, d) if n >= d else None

    return FrameReport(
        num_vectors=n,
        dim=d,
        field=f.field,
        lower_bound=lower,
        upper_bound=upper,
        is_tight=tight,
        is_parseval=parseval,
        is_unit_norm=unit,
        is_equiangular=equi,
        common_angle=angle,
        coherence=coh,
        welch_bound=welch,
        frame_potential=frame_potential(f),
    )


# ---------------------------------------------------------------------------
# constructors


def standard_onb(d: int, field: str = "R") -> Frame:
    """The coordinate basis of R^d or C^d as a frame."""
    d = int(d)
    if d < 1:
        raise BadCardinalityError("dimension must be at least 1")
    return Frame(np.eye(d), field)


def random_onb(d: int, seed: int = 0, field: str = "C") -> Frame:
    """Haar-ish random orthonormal basis via Gram-Schmidt on Gaussians.

    Deterministic in ``seed``.  Resamples any vector that falls too
    close to the span of the earlier ones, which for continuous
    Gaussians essentially never happens.
    """
    d = int(d)
    if d < 1:
        raise BadCardinalityError("dimension must be at least 1")
    rng = SplitMix64(seed)
    rows = np.zeros((d, d), dtype=np.complex128 if field == "C" else np.float64)
    for i in range(d):
        while True:
            if field == "C":
                v = rng.complex_gaussians(d)
            else:
                v = rng.gaussians(d)
            for j in range(i):
                v = v - np.vdot(rows[j], v) * rows[j]
            norm = float(np.sqrt(np.sum(np.abs(v) ** 2)))
            if norm > 1e-8:
                rows[i] = v / norm
                break
    return Frame(rows, field)


def simplex_etf(d: int) -> Frame:
    """The d+1 vertex directions of a regular simplex in R^d.

    Built by projecting the coordinate basis of R^(d+1) onto the
    hyperplane orthogonal to the all-ones vector, renormalizing, and
    expressing the result in an orthonormal basis of that hyperplane.
    Equiangular, unit norm, and tight with constant (d+1)/d, with
    coherence exactly at the Welch bound.
    """
    d = int(d)
    if d < 1:
        raise BadCardinalityError("dimension must be at least 1")
    n = d + 1
    ones = np.ones(n) / math.sqrt(n)
    # Orthonormal basis of the hyperplane, found by Gram-Schmidt on the
    # coordinate basis against the all-ones direction.
    basis = []
    for k in range(n):
        v = np.zeros(n)
        v[k] = 1.0
        v -= np.dot(ones, v) * ones
        for b in basis:
            v -= np.dot(b, v) * b
        norm = float(np.sqrt(np.dot(v, v)))
        if norm > 1e-12:
            basis.append(v / norm)
        if len(basis) == d:
            break
    bmat = np.array(basis)

    rows = np.zeros((n, d))
    for k in range(n):
        e = np.zeros(n)
        e[k] = 1.0
        p = e - np.dot(ones, e) * ones
        p /= float(np.sqrt(np.dot(p, p)))
        rows[k] = bmat @ p
    return Frame(rows, "R")


def harmonic_frame(
    d: int, n: int, selector: tuple[int, ...] | None = None
) -> Frame:
    """Rows of the n-point DFT matrix restricted to selected columns.

    Vector m (0-based) has entries exp(2 pi i m s_k / n) / sqrt(n) for
    the strictly increasing selector (s_1, ..., s_d) drawn from 1..n.
    The default selector is (1, ..., d).  Always a Parseval frame with
    all norms sqrt(d / n).
    """
    d = int(d)
    n = int(n)
    if d < 1 or n < d:
        raise BadCardinalityError(f"need N >= d >= 1, got N={n}, d={d}")
    if selector is None:
        selector = tuple(range(1, d + 1))
    sel = tuple(int(s) for s in selector)
    if len(sel) != d:
        raise BadSelectorError(
            f"selector has {len(sel)} entries for dimension {d}"
        )
    prev = 0
    for s in sel:
        if s <= prev:
            raise BadSelectorError("selector must be strictly increasing")
        prev = s
    if sel[0] < 1 or sel[-1] > n:
        raise BadSelectorError(f"selector entries must lie in 1..{n}")

    m = np.arange(n).reshape(-1, 1)
    s = np.array(sel).reshape(1, -1)
    rows = np.exp(2j * math.pi * m * s / n) / math.sqrt(n)
    return Frame(rows, "C")


def random_parseval(
    d: int, n: int, seed: int = 0, field: str = "C"
) -> Frame:
    """Canonical Parseval frame of n i.i.d. Gaussian vectors in
    dimension d.  Deterministic in ``seed``."""
    d = int(d)
    n = int(n)
    if d < 1 or n < d:
        raise BadCardinalityError(f"need N >= d >= 1, got N={n}, d={d}")
    rng = SplitMix64(seed)
    if field == "C":
        raw = rng.complex_gaussians((n, d))
    else:
        raw = rng.gaussians((n, d))
    return canonical_parseval(Frame(raw, field))


def with_zeros(f: Frame, k: int) -> Frame:
    """The same frame with k zero vectors appended.

    Appending zeros changes neither the frame operator nor any sum of
    rank-one projections, which is what makes padded orthonormal bases
    useful as Parseval specimens with more vectors than dimensions.
    """
    k = int(k)
    if k < 0:
        raise BadCardinalityError("cannot append a negative number of zeros")
    if k == 0:
        return Frame(f.vectors.copy(), f.field)
    pad = np.zeros((k, f.dim), dtype=f.vectors.dtype)
    return Frame(np.vstack([f.vectors, pad]), f.field)
