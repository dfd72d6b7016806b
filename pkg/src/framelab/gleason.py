"""Frame functions on the unit sphere and ball, and their verifiers.

A function g is an orthonormal-basis frame function of weight W when
the sum of g over every orthonormal basis equals W, and a degree-N
Parseval frame function when the sum over every N-vector Parseval
frame equals W.  Quadratic forms x -> <A x, x> are the tame examples,
with W = trace(A).  This module builds those, builds the classical
pathological examples in dimension 2 and in dimension 1 that are
frame functions without being quadratic, and provides randomized
verifiers, a quadratic-form fitter, scaling checks, and the
degree-ladder experiment that separates the degrees.

Functions defined on the sphere extend to the closed ball by
g(r u) = r^2 g(u), which is the convention used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import linalg
from .errors import (
    BadAlphasError,
    BadCardinalityError,
    BadEpsilonError,
    BadNError,
    BadWeightError,
    InputError,
    NotHermitianError,
    NotSquareError,
    OutOfBallError,
)
from .frames import (
    Frame,
    harmonic_frame,
    random_onb,
    random_parseval,
    standard_onb,
    with_zeros,
)
from .linalg import DEFAULT_TOL, resolve_tol
from .rng import SplitMix64

_BALL_SLACK = 1e-6
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class GleasonFn:
    """A function on the closed unit ball of R^dim or C^dim.

    ``kind`` names the construction, ``bound`` is an upper bound on
    |g| over the ball, and ``params`` records construction inputs for
    reporting.  Instances are callables.
    """

    dim: int
    field: str
    kind: str
    bound: float
    fn: Callable[[np.ndarray], complex]
    params: dict = dc_field(default_factory=dict)

    def __call__(self, x) -> float | complex:
        v = np.asarray(x)
        if v.ndim != 1 or v.shape[0] != self.dim:
            raise InputError(
                f"expected a vector of length {self.dim}, got shape {v.shape}"
            )
        if self.field == "R":
            if np.iscomplexobj(v):
                if v.size and float(np.max(np.abs(v.imag))) > 0.0:
                    raise InputError(
                        "real-field function evaluated at a complex vector"
                    )
                v = v.real
            v = v.astype(np.float64, copy=False)
        else:
            v = v.astype(np.complex128, copy=False)
        nsq = float(np.sum(np.abs(v) ** 2))
        if nsq > (1.0 + _BALL_SLACK) ** 2:
            raise OutOfBallError(
                f"argument norm {math.sqrt(nsq):.6f} leaves the unit ball"
            )
        out = self.fn(v)
        if isinstance(out, complex) and out.imag == 0.0:
            return out.real
        return out


@dataclass(frozen=True)
class VerificationReport:
    """Result of summing a function over sampled frames."""

    kind: str
    dim: int
    field: str
    n: int | None
    trials: int
    seed: int
    tol: float
    mean_weight: float | complex
    max_deviation: float
    passed: bool
    witness_low: tuple[Frame, float | complex]
    witness_high: tuple[Frame, float | complex]


@dataclass(frozen=True)
class FitResult:
    """Best quadratic-form explanation of a function."""

    operator: np.ndarray
    weight: float | complex
    residual: float
    verdict: str
    samples: int
    seed: int


@dataclass(frozen=True)
class ScalingReport:
    """Result of the |alpha|^2 homogeneity spot check."""

    samples: int
    seed: int
    max_deviation: float
    passed: bool
    witness: dict | None


@dataclass(frozen=True)
class LadderReport:
    """Mean weights of one function across a range of frame sizes."""

    kind: str
    dim: int
    degrees: list[int]
    weights: list[float]
    passed: list[bool]
    g_at_zero: float
    increments: list[float]
    increments_ok: bool
    trials: int
    seed: int
    tol: float


def _demote_scalar(z: complex) -> float | complex:
    if abs(z.imag) <= 1e-12 * max(1.0, abs(z.real)):
        return z.real
    return z


# ---------------------------------------------------------------------------
# constructions


def quadratic_gleason(a, const: float = 0.0) -> GleasonFn:
    """The form x -> <A x, x> + const for Hermitian A.

    Its sum over any N-vector Parseval frame is trace(A) + N * const,
    so with const = 0 it is a frame function of every degree at once.
    A real A must be symmetric; a complex A must be Hermitian.
    """
    mat = np.asarray(a)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise NotSquareError(f"operator must be square, got shape {mat.shape}")
    const = float(const)
    scale = float(np.max(np.abs(mat))) if mat.size else 0.0
    dev = float(np.max(np.abs(mat - mat.conj().T)))
    if dev > 1e-12 * max(1.0, scale):
        raise NotHermitianError(
            f"operator deviates from Hermitian by {dev:.3e}"
        )
    if np.iscomplexobj(mat) and float(np.max(np.abs(mat.imag))) > 0.0:
        field = "C"
        mat = mat.astype(np.complex128)
    else:
        field = "R"
        mat = mat.real.astype(np.float64)
    fro = float(np.sqrt(np.sum(np.abs(mat) ** 2)))

    def fn(x: np.ndarray) -> complex:
        return complex(np.vdot(x, mat @ x)) + const

    return GleasonFn(
        dim=int(mat.shape[0]),
        field=field,
        kind="quadratic",
        bound=fro + abs(const),
        fn=fn,
        params={"operator": mat, "const": const},
    )


def expnorm_gleason(dim: int, field: str = "C") -> GleasonFn:
    """g(x) = exp(|x|^2) - 1.

    Constant on the sphere, so its sum over any orthonormal basis is
    dim * (e - 1).  Over Parseval frames with more vectors than the
    dimension the sums genuinely depend on the frame, which is what
    separates basis frame functions from higher-degree ones.
    """
    dim = int(dim)
    if dim < 1:
        raise InputError("dimension must be at least 1")

    def fn(x: np.ndarray) -> complex:
        return complex(math.expm1(float(np.sum(np.abs(x) ** 2))))

    return GleasonFn(
        dim=dim,
        field=field,
        kind="expnorm",
        bound=math.e - 1.0,
        fn=fn,
        params={},
    )


def cos_counterexample(n: int) -> GleasonFn:
    """g(cos t, sin t) = 1 + cos(n t) on the circle, extended by r^2.

    For n = 2 mod 4 the two basis directions t and t + pi/2 contribute
    cos terms that cancel, so every orthonormal basis sums to 2.  Only
    |n| = 2 gives a quadratic form (1 + cos 2t = 2 cos^2 t); larger
    |n| are weight-2 basis frame functions that no operator explains.
    """
    n = int(n)
    if n % 4 != 2:
        raise BadNError(f"index must be 2 mod 4, got {n}")

    def fn(x: np.ndarray) -> complex:
        rsq = float(x[0] * x[0] + x[1] * x[1])
        if rsq == 0.0:
            return 0.0 + 0.0j
        theta = math.atan2(float(x[1]), float(x[0]))
        return complex(rsq * (1.0 + math.cos(n * theta)))

    return GleasonFn(
        dim=2, field="R", kind="cos2d", bound=2.0, fn=fn, params={"n": n}
    )


def _is_rational_angle(theta: float) -> bool:
    # "Rational" means theta is a rational multiple of pi.  In floats
    # that property is undecidable, so the working definition is:
    # within 1e-12 of a fraction with denominator at most 64.  Exact
    # for the angles any test or caller can actually construct.
    t = theta / math.pi
    approx = Fraction(t).limit_denominator(64)
    return abs(t - float(approx)) <= 1e-12


def _rational_branch(theta: float) -> float:
    theta = theta % _TWO_PI
    if theta >= math.pi:
        theta -= math.pi
    if theta < math.pi / 2.0:
        return 1.0 if _is_rational_angle(theta) else 0.0
    return 1.0 - (1.0 if _is_rational_angle(theta - math.pi / 2.0) else 0.0)


def rational_indicator_counterexample() -> GleasonFn:
    """A 0/1-valued weight-1 basis frame function on the circle.

    On the first quadrant the value is the indicator of the angle
    being a rational multiple of pi; the second quadrant carries the
    complement, and the pattern repeats with period pi.  Perpendicular
    directions then always contribute 1 + 0 or 0 + 1, so every
    orthonormal basis sums to exactly 1, yet the function is nowhere
    close to any quadratic form.  Extended to the ball by r^2.
    """

    def fn(x: np.ndarray) -> complex:
        rsq = float(x[0] * x[0] + x[1] * x[1])
        if rsq == 0.0:
            return 0.0 + 0.0j
        theta = math.atan2(float(x[1]), float(x[0]))
        return complex(rsq * _rational_branch(theta))

    return GleasonFn(
        dim=2,
        field="R",
        kind="rational_indicator",
        bound=1.0,
        fn=fn,
        params={},
    )


def periodic_extension_gleason(
    f: Callable[[float], float], weight: float, f_sup: float
) -> GleasonFn:
    """Weight-``weight`` basis frame function from a pi/2-periodic seed.

    ``f`` must be nonnegative, bounded by ``f_sup``, and pi/2-periodic.
    The circle function equals f on the first and third quadrants and
    weight - f(theta - pi/2) on the other two, so perpendicular pairs
    always sum to the declared weight.  Requires weight >= f_sup so the
    function stays nonnegative.  Extended to the ball by r^2.
    """
    weight = float(weight)
    f_sup = float(f_sup)
    if weight < f_sup:
        raise BadWeightError(
            f"weight {weight} is below the seed supremum {f_sup}"
        )

    def fn(x: np.ndarray) -> complex:
        rsq = float(x[0] * x[0] + x[1] * x[1])
        if rsq == 0.0:
            return 0.0 + 0.0j
        theta = math.atan2(float(x[1]), float(x[0])) % _TWO_PI
        quadrant = int(theta // (math.pi / 2.0)) % 4
        if quadrant in (0, 2):
            value = float(f(theta))
        else:
            value = weight - float(f(theta - math.pi / 2.0))
        return complex(rsq * value)

    return GleasonFn(
        dim=2,
        field="R",
        kind="periodic_extension",
        bound=max(weight, f_sup),
        fn=fn,
        params={"weight": weight, "f_sup": f_sup},
    )


def epsilon_1d_counterexample(eps: float) -> GleasonFn:
    """A degree-2 frame function on the unit interval that is not the
    squared norm, for 0 < eps < 1/3.

    With t = |x|^2 the value is t except at the two points t = eps and
    t = 1 - eps, which swap to 1 - eps and eps.  Any two numbers
    summing to 1 keep summing to 1 after the swap, so every 2-vector
    Parseval frame of the line still sums to 1.  Three-vector frames
    hitting the swapped points break it, which pins the degree at 2.
    """
    eps = float(eps)
    if not (0.0 < eps < 1.0 / 3.0):
        raise BadEpsilonError(f"epsilon must be in (0, 1/3), got {eps}")

    def fn(x: np.ndarray) -> complex:
        t = float(np.sum(np.abs(x) ** 2))
        if abs(t - eps) <= 1e-12:
            return complex(1.0 - eps)
        if abs(t - (1.0 - eps)) <= 1e-12:
            return complex(eps)
        return complex(t)

    return GleasonFn(
        dim=1,
        field="R",
        kind="epsilon1d",
        bound=1.0,
        fn=fn,
        params={"eps": eps},
    )


def gleason_from_effect_measure(
    v: Callable[[np.ndarray], float],
    dim: int,
    field: str = "C",
    bound: float = 1.0,
) -> GleasonFn:
    """Restrict an effect functional to rank-one effects.

    g(x) = v(outer(x, x)).  When v satisfies the probability axioms
    over all POVMs of some size N, the restriction is a degree-N
    Parseval frame function with weight v(identity) = 1.
    """
    dim = int(dim)
    if dim < 1:
        raise InputError("dimension must be at least 1")

    def fn(x: np.ndarray) -> complex:
        xc = x.astype(np.complex128, copy=False)
        return complex(v(np.outer(xc, xc.conj())))

    return GleasonFn(
        dim=dim,
        field=field,
        kind="effect_measure",
        bound=float(bound),
        fn=fn,
        params={},
    )


def custom_gleason(
    fn: Callable[[np.ndarray], complex],
    dim: int,
    field: str = "C",
    bound: float = math.inf,
    params: dict | None = None,
) -> GleasonFn:
    """Wrap an arbitrary callable for use with the verifiers."""
    dim = int(dim)
    if dim < 1:
        raise InputError("dimension must be at least 1")
    if field not in ("R", "C"):
        raise InputError(f"field must be 'R' or 'C', got {field!r}")
    return GleasonFn(
        dim=dim,
        field=field,
        kind="custom",
        bound=float(bound),
        fn=lambda x: complex(fn(x)),
        params=dict(params or {}),
    )


# ---------------------------------------------------------------------------
# verifiers


def _sum_over_frame(g: GleasonFn, f: Frame) -> complex:
    total = 0.0 + 0.0j
    for row in f.vectors:
        total += complex(g(row))
    return total


def _verdict_from_sums(
    g: GleasonFn,
    frames: list[Frame],
    sums: list[complex],
    n: int | None,
    seed: int,
    tol: float,
) -> VerificationReport:
    arr = np.asarray(sums, dtype=np.complex128)
    re = arr.real
    im = arr.imag
    deviation = math.hypot(
        float(re.max() - re.min()), float(im.max() - im.min())
    )
    lo = int(np.argmin(re))
    hi = int(np.argmax(re))
    return VerificationReport(
        kind=g.kind,
        dim=g.dim,
        field=g.field,
        n=n,
        trials=len(frames),
        seed=seed,
        tol=tol,
        mean_weight=_demote_scalar(complex(arr.mean())),
        max_deviation=deviation,
        passed=deviation <= tol,
        witness_low=(frames[lo], _demote_scalar(complex(arr[lo]))),
        witness_high=(frames[hi], _demote_scalar(complex(arr[hi]))),
    )


def verify_onb_gleason(
    g: GleasonFn, trials: int = 100, seed: int = 0, tol: float | None = None
) -> VerificationReport:
    """Sum g over random orthonormal bases and measure the spread.

    In dimension 2 over the reals the bases are uniform rotations of
    the coordinate basis, which sweeps the whole space of real bases
    up to signs; otherwise bases come from Gram-Schmidt on Gaussian
    vectors.  Passing means the spread of sums stays within tol.
    """
    tol = resolve_tol(tol)
    trials = int(trials)
    if trials < 1:
        raise InputError("need at least one trial")
    rng = SplitMix64(seed)
    frames: list[Frame] = []
    sums: list[complex] = []
    for _ in range(trials):
        if g.dim == 2 and g.field == "R":
            theta = _TWO_PI * rng.uniform()
            c, s = math.cos(theta), math.sin(theta)
            f = Frame(np.array([[c, s], [-s, c]]), "R")
        else:
            f = random_onb(g.dim, seed=rng.u64(), field=g.field)
        frames.append(f)
        sums.append(_sum_over_frame(g, f))
    return _verdict_from_sums(g, frames, sums, None, seed, tol)


def _parseval_specimens(dim: int, n: int, field: str, rng: SplitMix64) -> list[Frame]:
    specimens = [with_zeros(standard_onb(dim, field), n - dim)]
    big = random_onb(n, seed=rng.u64(), field=field)
    specimens.append(Frame(big.vectors[:, :dim], field))
    if field == "C":
        specimens.append(harmonic_frame(dim, n))
    return specimens


def verify_parseval_gleason(
    g: GleasonFn,
    n: int,
    trials: int = 100,
    seed: int = 0,
    tol: float | None = None,
) -> VerificationReport:
    """Sum g over n-vector Parseval frames and measure the spread.

    The sample always leads with structured frames that randomized
    sampling would essentially never find: a zero-padded orthonormal
    basis, the first-coordinates projection of a random orthonormal
    basis of the big space, and (over C) a harmonic frame.  The rest
    are canonical Parseval frames of Gaussian vectors.
    """
    tol = resolve_tol(tol)
    n = int(n)
    trials = int(trials)
    if n < g.dim:
        raise BadCardinalityError(
            f"frame size {n} is below the dimension {g.dim}"
        )
    if trials < 1:
        raise InputError("need at least one trial")
    rng = SplitMix64(seed)
    frames = _parseval_specimens(g.dim, n, g.field, rng)[:trials]
    while len(frames) < trials:
        frames.append(random_parseval(g.dim, n, seed=rng.u64(), field=g.field))
    sums = [_sum_over_frame(g, f) for f in frames]
    return _verdict_from_sums(g, frames, sums, n, seed, tol)


def fit_quadratic(
    g: GleasonFn,
    tol: float | None = None,
    samples: int = 500,
    seed: int = 0,
) -> FitResult:
    """Recover the unique quadratic form matching g on probe vectors,
    then measure how well it explains g on random ball points.

    The operator is fixed by polarization: diagonal entries from the
    basis directions, off-diagonal entries from (e_j + e_k)/sqrt(2)
    and, over C, (e_j + i e_k)/sqrt(2).  The residual is the largest
    |g(x) - <A x, x>| over ``samples`` seeded points, alternating
    sphere and interior.  Verdict thresholds: at most 1e-9 is
    "quadratic", above 1e-6 is "not_quadratic", between the two is
    "indeterminate".
    """
    tol = resolve_tol(tol)
    samples = int(samples)
    if samples < 1:
        raise InputError("need at least one sample point")
    d = g.dim
    complex_field = g.field == "C"
    dtype = np.complex128 if complex_field else np.float64
    a = np.zeros((d, d), dtype=np.complex128)

    basis = np.eye(d, dtype=dtype)
    for k in range(d):
        a[k, k] = complex(g(basis[k]))
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    for j in range(d):
        for k in range(j + 1, d):
            plus = (basis[j] + basis[k]) * inv_sqrt2
            s = 2.0 * complex(g(plus)) - a[j, j] - a[k, k]
            if complex_field:
                mixed = (basis[j] + 1j * basis[k]) * inv_sqrt2
                dterm = (2.0 * complex(g(mixed)) - a[j, j] - a[k, k]) / 1j
                a[j, k] = (s + dterm) / 2.0
                a[k, j] = (s - dterm) / 2.0
            else:
                a[j, k] = s / 2.0
                a[k, j] = s / 2.0

    operator = linalg.demote_if_real(a, 1e-12)

    rng = SplitMix64(seed)
    residual = 0.0
    for i in range(samples):
        while True:
            direction = (
                rng.complex_gaussians(d) if complex_field else rng.gaussians(d)
            )
            norm = float(np.sqrt(np.sum(np.abs(direction) ** 2)))
            if norm > 1e-8:
                break
        direction /= norm
        r = 1.0 if i % 2 == 0 else rng.uniform() ** (1.0 / d)
        x = r * direction
        predicted = complex(np.vdot(x, a @ x))
        residual = max(residual, abs(complex(g(x)) - predicted))

    if residual <= 1e-9:
        verdict = "quadratic"
    elif residual <= 1e-6:
        verdict = "indeterminate"
    else:
        verdict = "not_quadratic"
    return FitResult(
        operator=operator,
        weight=_demote_scalar(complex(np.trace(a))),
        residual=residual,
        verdict=verdict,
        samples=samples,
        seed=seed,
    )


def homogeneity_check(
    g: GleasonFn,
    samples: int = 200,
    seed: int = 0,
    tol: float | None = None,
) -> ScalingReport:
    """Spot-check g(alpha x) = |alpha|^2 g(x) on random scalings.

    Points are sampled in the ball and scalars inside the unit disc
    (interval over R), so the scaled point stays in the domain.
    """
    tol = resolve_tol(tol)
    samples = int(samples)
    if samples < 1:
        raise InputError("need at least one sample")
    rng = SplitMix64(seed)
    d = g.dim
    worst = 0.0
    witness: dict | None = None
    for _ in range(samples):
        while True:
            direction = (
                rng.complex_gaussians(d)
                if g.field == "C"
                else rng.gaussians(d)
            )
            norm = float(np.sqrt(np.sum(np.abs(direction) ** 2)))
            if norm > 1e-8:
                break
        x = (rng.uniform() ** (1.0 / d)) * direction / norm
        if g.field == "C":
            phase = _TWO_PI * rng.uniform()
            alpha = math.sqrt(rng.uniform()) * complex(
                math.cos(phase), math.sin(phase)
            )
        else:
            alpha = 2.0 * rng.uniform() - 1.0
        lhs = complex(g(alpha * x))
        rhs = abs(alpha) ** 2 * complex(g(x))
        dev = abs(lhs - rhs)
        if dev > worst:
            worst = dev
            witness = {"x": x, "alpha": alpha, "lhs": lhs, "rhs": rhs}
    passed = worst <= tol
    return ScalingReport(
        samples=samples,
        seed=seed,
        max_deviation=worst,
        passed=passed,
        witness=None if passed else witness,
    )


def partition_scaling_check(
    g: GleasonFn, x, alphas: Sequence[complex], tol: float | None = None
) -> bool:
    """Check sum_i g(alpha_i x) = g(x) for |alpha|^2 summing to 1."""
    tol = resolve_tol(tol)
    coeffs = [complex(al) for al in alphas]
    if not coeffs:
        raise BadAlphasError("need at least one coefficient")
    if g.field == "R" and any(al.imag != 0.0 for al in coeffs):
        raise BadAlphasError("real-field function needs real coefficients")
    total = sum(abs(al) ** 2 for al in coeffs)
    if abs(total - 1.0) > tol:
        raise BadAlphasError(
            f"squared magnitudes sum to {total}, expected 1"
        )
    xv = np.asarray(x)
    base = complex(g(xv))
    acc = 0.0 + 0.0j
    for al in coeffs:
        scaled = al * xv if g.field == "C" else al.real * xv
        acc += complex(g(scaled))
    return abs(acc - base) <= tol


def rational_scaling_check(
    g: GleasonFn, x, q, tol: float | None = None
) -> bool:
    """Check g(sqrt(q) x) = q g(x) for a nonnegative rational q."""
    tol = resolve_tol(tol)
    qf = float(q)
    if qf < 0.0:
        raise OutOfBallError("scaling factor must be nonnegative")
    xv = np.asarray(x)
    root = math.sqrt(qf)
    nsq = qf * float(np.sum(np.abs(xv) ** 2))
    if nsq > (1.0 + _BALL_SLACK) ** 2:
        raise OutOfBallError("scaled argument leaves the unit ball")
    lhs = complex(g(root * xv))
    rhs = qf * complex(g(xv))
    return abs(lhs - rhs) <= tol


def quadratic_zero_count_s1(a) -> int | float:
    """Number of zeros on the unit circle of the form x -> x^T A x for
    real symmetric 2x2 A, counting antipodes separately.

    Writing the restriction as m + R cos(2 theta - phi), the count is
    0, 2, 4, or infinity according to |m| > R, |m| = R != 0, |m| < R,
    or m = R = 0.  Returns ``math.inf`` for the identically-zero form.
    """
    mat = np.asarray(a, dtype=np.float64)
    if mat.shape != (2, 2):
        raise NotSquareError(f"need a 2x2 matrix, got shape {mat.shape}")
    if abs(mat[0, 1] - mat[1, 0]) > 1e-12 * max(1.0, float(np.max(np.abs(mat)))):
        raise NotHermitianError("matrix must be symmetric")
    mean = (mat[0, 0] + mat[1, 1]) / 2.0
    amp = math.hypot((mat[0, 0] - mat[1, 1]) / 2.0, (mat[0, 1] + mat[1, 0]) / 2.0)
    if mean == 0.0 and amp == 0.0:
        return math.inf
    if abs(mean) > amp:
        return 0
    if abs(mean) < amp:
        return 4
    return 2


def degree_ladder_experiment(
    g: GleasonFn,
    n0: int,
    n1: int,
    trials: int = 50,
    seed: int = 0,
    tol: float | None = None,
) -> LadderReport:
    """Mean frame sums of g for each frame size N in n0..n1.

    For a frame function of every degree at once whose value at zero
    is c, consecutive weights differ by exactly c, because a degree-N
    frame function extends to degree N + 1 by absorbing one zero
    vector.  ``increments_ok`` records whether the measured weight
    increments match g(0) within tol.  Requires n0 >= dim + 2.
    """
    tol = resolve_tol(tol)
    n0 = int(n0)
    n1 = int(n1)
    if n0 < g.dim + 2:
        raise BadCardinalityError(
            f"ladder starts at dim + 2 = {g.dim + 2}, got {n0}"
        )
    if n1 < n0:
        raise BadCardinalityError(f"empty ladder: {n0}..{n1}")
    rng = SplitMix64(seed)
    zero = np.zeros(g.dim, dtype=np.float64 if g.field == "R" else np.complex128)
    g0 = complex(g(zero)).real

    degrees: list[int] = []
    weights: list[float] = []
    passed: list[bool] = []
    for n in range(n0, n1 + 1):
        report = verify_parseval_gleason(
            g, n, trials=trials, seed=rng.u64(), tol=tol
        )
        degrees.append(n)
        weights.append(complex(report.mean_weight).real)
        passed.append(report.passed)
    increments = [weights[i + 1] - weights[i] for i in range(len(weights) - 1)]
    increments_ok = all(abs(inc - g0) <= tol for inc in increments)
    return LadderReport(
        kind=g.kind,
        dim=g.dim,
        degrees=degrees,
        weights=weights,
        passed=passed,
        g_at_zero=g0,
        increments=increments,
        increments_ok=increments_ok,
        trials=trials,
        seed=seed,
        tol=tol,
    )
