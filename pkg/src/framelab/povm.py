"""Positive operator-valued measures and their frame correspondence.

Every Parseval frame yields a POVM by taking the rank-one projection
of each vector, or coarser effects by summing projections over a
partition of the index set.  Conversely any POVM factors through a
Parseval frame by eigendecomposing each effect and keeping the scaled
eigenvectors with nonnegligible eigenvalues.  The probability rule
p_j = trace(rho E_j) then turns density matrices into probability
vectors, and :func:`check_generalized_measure` probes whether an
arbitrary effect functional behaves like such a rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from . import linalg
from .errors import (
    BadFamilySizeError,
    BadPartitionError,
    DimMismatchError,
    InputError,
    NotPovmError,
    NotParsevalError,
)
from .frames import Frame, is_parseval, random_parseval
from .linalg import resolve_tol
from .rng import SplitMix64


@dataclass(frozen=True, eq=False)
class Povm:
    """A finite POVM on C^d.

    Parameters
    ----------
    effects : np.ndarray
        Shape (k, d, d), one Hermitian positive effect per leading
        index, summing to the identity.
    partition : list of list of int, optional
        When the POVM came from grouping a frame, the 0-based index
        groups, in effect order.  ``None`` for ungrouped POVMs.

    Notes
    -----
    Shape constraints are enforced here; the numeric POVM axioms are
    checked by :func:`check_povm`, which the converters and loaders
    call.  Keeping the numeric check explicit lets internal
    constructions that are valid by construction skip the cost.
    """

    effects: np.ndarray
    partition: list[list[int]] | None = None

    def __post_init__(self):
        a = np.asarray(self.effects)
        if a.ndim != 3 or a.shape[1] != a.shape[2]:
            raise InputError(
                f"effects must have shape (k, d, d), got {a.shape}"
            )
        if a.shape[0] < 1:
            raise InputError("a POVM needs at least one effect")
        a = np.ascontiguousarray(a, dtype=np.complex128)
        if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
            raise InputError("effects contain non-finite entries")
        object.__setattr__(self, "effects", a)
        if self.partition is not None:
            part = [[int(i) for i in group] for group in self.partition]
            if len(part) != a.shape[0]:
                raise InputError(
                    "partition length does not match the number of effects"
                )
            object.__setattr__(self, "partition", part)

    @property
    def dim(self) -> int:
        return int(self.effects.shape[1])

    def __len__(self) -> int:
        return int(self.effects.shape[0])


class FrameFromPovm(NamedTuple):
    frame: Frame
    partition: list[list[int]]
    dropped: int


@dataclass(frozen=True)
class MeasureCheckReport:
    """Outcome of probing a functional against the probability axioms."""

    trials: int
    n_family: int
    seed: int
    identity_deviation: float
    range_min: float
    range_max: float
    additivity_deviation: float
    passed: bool
    witness: Povm | None


def is_effect(e, tol: float | None = None) -> bool:
    """True when ``e`` is Hermitian with spectrum inside [0, 1]."""
    tol = resolve_tol(tol)
    a = np.asarray(e, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if float(np.max(np.abs(a - a.conj().T))) > tol * max(1.0, scale):
        return False
    values, _ = linalg.hermitian_eig((a + a.conj().T) / 2.0, tol)
    return bool(values[0] >= -tol and values[-1] <= 1.0 + tol)


def check_povm(p: Povm, tol: float | None = None) -> None:
    """Raise :class:`NotPovmError` unless ``p`` satisfies the axioms.

    Checks that every effect is Hermitian with spectrum in [0, 1]
    within tol, and that the effects sum to the identity within tol.
    """
    tol = resolve_tol(tol)
    for j in range(len(p)):
        if not is_effect(p.effects[j], tol):
            raise NotPovmError(f"effect {j} is not a valid effect")
    total = np.sum(p.effects, axis=0)
    dev = float(np.max(np.abs(total - np.eye(p.dim))))
    if dev > tol:
        raise NotPovmError(
            f"effects sum to identity only within {dev:.3e} (allowed {tol:.3e})"
        )


def povm_from_frame(f: Frame, tol: float | None = None) -> Povm:
    """One rank-one effect per frame vector of a Parseval frame.

    Effect j is the outer product of vector j with itself, so the sum
    over j reproduces the frame operator, which is the identity.
    """
    tol = resolve_tol(tol)
    if not is_parseval(f, tol):
        raise NotParsevalError("rank-one effects sum to the identity only "
                               "for Parseval frames")
    x = f.vectors.astype(np.complex128, copy=False)
    effects = x[:, :, None] * x.conj()[:, None, :]
    return Povm(np.ascontiguousarray(effects), partition=None)


def povm_from_frame_grouped(
    f: Frame, partition: Sequence[Sequence[int]], tol: float | None = None
) -> Povm:
    """Effects obtained by summing rank-one projections over groups.

    ``partition`` must split the 0-based index range of the frame into
    disjoint groups covering every index; empty groups are allowed and
    produce zero effects.
    """
    tol = resolve_tol(tol)
    n = len(f)
    groups = [[int(i) for i in g] for g in partition]
    seen: set[int] = set()
    for g in groups:
        for i in g:
            if i < 0 or i >= n:
                raise BadPartitionError(f"index {i} outside 0..{n - 1}")
            if i in seen:
                raise BadPartitionError(f"index {i} appears twice")
            seen.add(i)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise BadPartitionError(f"indices not covered: {missing}")
    if not is_parseval(f, tol):
        raise NotParsevalError("grouped effects sum to the identity only "
                               "for Parseval frames")

    x = f.vectors.astype(np.complex128, copy=False)
    d = f.dim
    effects = np.zeros((len(groups), d, d), dtype=np.complex128)
    for j, g in enumerate(groups):
        for i in g:
            effects[j] += np.outer(x[i], x[i].conj())
    return Povm(effects, partition=groups)


def frame_from_povm(
    p: Povm, tol: float | None = None, pad_zeros: bool = False
) -> FrameFromPovm:
    """Factor a POVM through a Parseval frame.

    Each effect is eigendecomposed and contributes one vector
    sqrt(lambda) v per eigenpair, in ascending eigenvalue order.
    Eigenvalues below tol contribute nothing; with ``pad_zeros`` they
    contribute explicit zero vectors instead, so every effect yields
    exactly d vectors.  Either way ``dropped`` counts them.

    Returns the frame, the partition mapping each effect to the
    0-based rows it produced, and the dropped count.  The frame is
    Parseval up to the accuracy of the input POVM.
    """
    tol = resolve_tol(tol)
    check_povm(p, tol)
    d = p.dim
    rows: list[np.ndarray] = []
    partition: list[list[int]] = []
    dropped = 0
    for j in range(len(p)):
        values, vecs = linalg.hermitian_eig(p.effects[j], tol)
        vecs = vecs.astype(np.complex128, copy=False)
        group: list[int] = []
        for i in range(d):
            lam = float(values[i])
            if lam < tol:
                dropped += 1
                if not pad_zeros:
                    continue
                vec = np.zeros(d, dtype=np.complex128)
            else:
                vec = np.sqrt(lam) * vecs[:, i]
            group.append(len(rows))
            rows.append(vec)
        partition.append(group)

    mat = np.array(rows, dtype=np.complex128)
    if mat.size and float(np.max(np.abs(mat.imag))) <= tol:
        frame = Frame(mat.real, "R")
    else:
        frame = Frame(mat, "C")
    return FrameFromPovm(frame, partition, dropped)


def born_probabilities(rho, p: Povm, tol: float | None = None) -> np.ndarray:
    """Outcome distribution trace(rho E_j) of a state under a POVM.

    Parameters
    ----------
    rho : array_like
        Density matrix (Hermitian, unit trace, positive).  Only the
        dimension is validated here; garbage in, garbage out.
    p : Povm
        The measurement.

    Returns
    -------
    np.ndarray
        Real probabilities in effect order.  The imaginary residue of
        each trace must vanish at the 1e-9 level, which it does for
        any remotely Hermitian input.
    """
    tol = resolve_tol(tol)
    r = np.asarray(rho, dtype=np.complex128)
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise DimMismatchError(f"state must be square, got shape {r.shape}")
    if r.shape[0] != p.dim:
        raise DimMismatchError(
            f"state dimension {r.shape[0]} does not match POVM dimension {p.dim}"
        )
    probs = np.empty(len(p), dtype=np.float64)
    for j in range(len(p)):
        t = complex(np.trace(r @ p.effects[j]))
        if abs(t.imag) > 1e-9 * max(1.0, abs(t.real)):
            raise InputError(
                f"probability {j} has imaginary residue {t.imag:.3e}; "
                "state or effects are far from Hermitian"
            )
        probs[j] = t.real
    return probs


def random_density(d: int, seed: int = 0, field: str = "C") -> np.ndarray:
    """Random density matrix G G* / trace(G G*) from a Gaussian G."""
    d = int(d)
    if d < 1:
        raise InputError("dimension must be at least 1")
    rng = SplitMix64(seed)
    if field == "C":
        g = rng.complex_gaussians((d, d))
    else:
        g = rng.gaussians((d, d)).astype(np.complex128)
    rho = g @ g.conj().T
    return rho / float(np.trace(rho).real)


def _random_povm(rng: SplitMix64, d: int, k: int, field: str) -> Povm:
    # Group a random Parseval frame into k effects, empty groups allowed.
    n = max(d, k) + rng.below(d + 2)
    f = random_parseval(d, n, seed=rng.u64(), field=field)
    groups: list[list[int]] = [[] for _ in range(k)]
    for i in range(n):
        groups[rng.below(k)].append(i)
    return povm_from_frame_grouped(f, groups)


def check_generalized_measure(
    v: Callable[[np.ndarray], float],
    d: int,
    n_family: int,
    trials: int = 50,
    seed: int = 0,
    tol: float | None = None,
    field: str = "C",
) -> MeasureCheckReport:
    """Probe a functional on effects against the probability axioms.

    Samples ``trials`` random POVMs with at least ``n_family`` effects
    each (grouped from random Parseval frames, so zero effects and
    high-rank effects both occur) and records how far ``v`` strays
    from: v(identity) = 1, values inside [0, 1], and values summing
    to 1 across each POVM.

    ``n_family`` below d + 2 raises :class:`BadFamilySizeError`, since
    smaller families are too coarse for additivity over them to pin
    the functional down.
    """
    tol = resolve_tol(tol)
    d = int(d)
    n_family = int(n_family)
    trials = int(trials)
    if d < 1:
        raise InputError("dimension must be at least 1")
    if n_family < d + 2:
        raise BadFamilySizeError(
            f"family size {n_family} is below d + 2 = {d + 2}"
        )
    if trials < 1:
        raise InputError("need at least one trial")

    rng = SplitMix64(seed)
    ident_dev = abs(float(v(np.eye(d, dtype=np.complex128))) - 1.0)
    lo = float("inf")
    hi = float("-inf")
    add_dev = 0.0
    witness: Povm | None = None

    for _ in range(trials):
        k = n_family + rng.below(3)
        p = _random_povm(rng, d, k, field)
        total = 0.0
        family_bad = False
        for j in range(len(p)):
            val = float(v(p.effects[j]))
            total += val
            lo = min(lo, val)
            hi = max(hi, val)
            if val < -tol or val > 1.0 + tol:
                family_bad = True
        dev = abs(total - 1.0)
        if dev > add_dev:
            add_dev = dev
            if dev > tol:
                witness = p
        if family_bad and witness is None:
            witness = p

    passed = (
        ident_dev <= tol
        and lo >= -tol
        and hi <= 1.0 + tol
        and add_dev <= tol
    )
    return MeasureCheckReport(
        trials=trials,
        n_family=n_family,
        seed=seed,
        identity_deviation=ident_dev,
        range_min=lo,
        range_max=hi,
        additivity_deviation=add_dev,
        passed=passed,
        witness=None if passed else witness,
    )
