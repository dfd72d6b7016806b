"""Constant-amplitude zero-autocorrelation sequences and their frames.

A length-d sequence u is CA when every entry has modulus 1 and ZAC
when every nontrivial cyclic autocorrelation (1/d) sum_k u(m+k)
conj(u(k)) vanishes.  The discrete periodic ambiguity function

    A(u)(m, n) = (1/d) sum_k u(m+k) conj(u(k)) exp(-2 pi i k n / d)

refines the autocorrelation by a frequency index; its column n = 0 is
the autocorrelation itself and A(u)(0, 0) = 1 for any CA sequence.
Index arithmetic is mod d throughout.

Two constructions are provided.  One is defined through the Legendre
symbol of the prime length and has uniformly small off-origin
ambiguity, with explicit bounds depending on the residue class of the
prime mod 4.  The other applies a quadratic phase to odd lengths and
serves as an easy reference CAZAC.  Translating and modulating any
unimodular sequence through all d^2 combinations and dividing by
sqrt(d) produces a tight unit-norm Gabor frame whose coherence equals
the off-origin ambiguity peak.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadCardinalityError,
    InputError,
    NotPrimeError,
    NotUnimodularError,
    TooSmallError,
)
from .frames import Frame
from .linalg import resolve_tol

_KAHAN_CUTOFF = 64


@dataclass(frozen=True, eq=False)
class AmbiguityTable:
    """Full d x d ambiguity table of a sequence.

    Rows are time shifts m, columns are frequency shifts n.
    """

    values: np.ndarray

    @property
    def length(self) -> int:
        return int(self.values.shape[0])

    def magnitudes(self) -> np.ndarray:
        return np.abs(self.values)

    def peak_off_origin(self) -> float:
        """Largest magnitude away from the (0, 0) corner."""
        mags = self.magnitudes().copy()
        mags[0, 0] = 0.0
        return float(np.max(mags))


@dataclass(frozen=True)
class CazacReport:
    length: int
    tol: float
    ca_deviation: float
    zac_peak: float
    ca_ok: bool
    zac_ok: bool
    ok: bool


def _as_sequence(u) -> np.ndarray:
    a = np.asarray(u)
    if a.ndim != 1 or a.shape[0] < 1:
        raise InputError(f"sequence must be a nonempty vector, got shape {a.shape}")
    if a.dtype.kind not in "fiucb":
        raise InputError("sequence must be numeric")
    a = a.astype(np.complex128, copy=False)
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise InputError("sequence contains non-finite entries")
    return a


def ambiguity(u) -> AmbiguityTable:
    """Discrete periodic ambiguity table of a sequence.

    Small lengths use plain matrix summation.  Above length 64 the sum
    over k runs with Kahan compensation, one rank-one term per k, so
    the table stays accurate when thousands of unit-size terms cancel
    to something near zero.
    """
    a = _as_sequence(u)
    d = a.shape[0]
    ks = np.arange(d)
    # lag matrix: row m holds u(m+k) conj(u(k)) as k varies
    lags = np.empty((d, d), dtype=np.complex128)
    for m in range(d):
        lags[m] = np.roll(a, -m) * a.conj()
    phases = np.exp(-2j * math.pi * np.outer(ks, ks) / d)

    if d <= _KAHAN_CUTOFF:
        table = lags @ phases / d
        return AmbiguityTable(table)

    acc = np.zeros((d, d), dtype=np.complex128)
    comp = np.zeros((d, d), dtype=np.complex128)
    for k in range(d):
        term = np.outer(lags[:, k], phases[k, :])
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
    return AmbiguityTable(acc / d)


def is_cazac(u, tol: float | None = None) -> CazacReport:
    """Check the constant-amplitude and zero-autocorrelation axioms.

    ``ca_deviation`` is the largest deviation of an entry modulus from
    1 and ``zac_peak`` the largest nontrivial autocorrelation
    magnitude; both must stay within tol for ``ok``.
    """
    tol = resolve_tol(tol)
    a = _as_sequence(u)
    d = a.shape[0]
    ca_dev = float(np.max(np.abs(np.abs(a) - 1.0)))
    zac_peak = 0.0
    for m in range(1, d):
        corr = complex(np.sum(np.roll(a, -m) * a.conj())) / d
        zac_peak = max(zac_peak, abs(corr))
    ca_ok = ca_dev <= tol
    zac_ok = zac_peak <= tol
    return CazacReport(
        length=d,
        tol=tol,
        ca_deviation=ca_dev,
        zac_peak=zac_peak,
        ca_ok=ca_ok,
        zac_ok=zac_ok,
        ok=ca_ok and zac_ok,
    )


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def legendre_symbol(k: int, p: int) -> int:
    """Quadratic residue symbol of k mod an odd prime p, in {-1, 0, 1}."""
    r = pow(int(k) % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else int(r)


def bjorck(p: int) -> np.ndarray:
    """Unimodular CAZAC of prime length p at least 5.

    Entries are unit complex numbers whose phase at index k depends on
    the quadratic residue class of k mod p.  For p = 1 mod 4 the phase
    is the Legendre symbol times arccos(1 / (1 + sqrt(p))); for
    p = 3 mod 4 it is arccos((1 - p) / (1 + p)) on non-residues and 0
    elsewhere.  The off-origin ambiguity of the result is uniformly
    small, on the order of 1 / sqrt(p).
    """
    p = int(p)
    if not _is_prime(p):
        raise NotPrimeError(f"length {p} is not prime")
    if p < 5:
        raise TooSmallError(f"length must be at least 5, got {p}")

    theta = np.zeros(p, dtype=np.float64)
    if p % 4 == 1:
        angle = math.acos(1.0 / (1.0 + math.sqrt(p)))
        for k in range(p):
            theta[k] = legendre_symbol(k, p) * angle
    else:
        angle = math.acos((1.0 - p) / (1.0 + p))
        for k in range(1, p):
            if legendre_symbol(k, p) == -1:
                theta[k] = angle
    return np.exp(1j * theta)


def quadratic_phase(d: int) -> np.ndarray:
    """The odd-length CAZAC u(k) = exp(i pi k (k + 1) / d)."""
    d = int(d)
    if d < 1:
        raise BadCardinalityError("length must be at least 1")
    if d % 2 == 0:
        raise BadCardinalityError(f"length must be odd, got {d}")
    k = np.arange(d, dtype=np.float64)
    return np.exp(1j * math.pi * k * (k + 1.0) / d)


def bjorck_peak_bound(p: int) -> float:
    """Upper bound on the off-origin ambiguity peak of the prime-length
    Legendre-phase CAZAC: 2/sqrt(p) + 4/p when p = 1 mod 4, and
    2/sqrt(p) + 4/p^(3/2) when p = 3 mod 4.  Both are below 3/sqrt(p)
    once p > 16."""
    p = int(p)
    if not _is_prime(p):
        raise NotPrimeError(f"bound is defined for primes >= 5, got {p}")
    if p < 5:
        raise TooSmallError(f"bound is defined for primes >= 5, got {p}")
    if p % 4 == 1:
        return 2.0 / math.sqrt(p) + 4.0 / p
    return 2.0 / math.sqrt(p) + 4.0 / (p ** 1.5)


def gabor_frame(u, tol: float | None = None) -> Frame:
    """All d^2 translates-then-modulates of a unimodular sequence,
    scaled by 1/sqrt(d).

    Vector (m, n), stored at row m * d + n, has entries
    u(k - m) exp(2 pi i (k - m) n / d) / sqrt(d).  The result is a
    unit-norm tight frame with frame constant d, and its coherence
    equals the largest off-origin ambiguity magnitude of u.
    """
    tol = resolve_tol(tol)
    a = _as_sequence(u)
    d = a.shape[0]
    dev = float(np.max(np.abs(np.abs(a) - 1.0)))
    if dev > tol:
        raise NotUnimodularError(
            f"entry moduli deviate from 1 by up to {dev:.3e}"
        )
    root = math.sqrt(d)
    rows = np.empty((d * d, d), dtype=np.complex128)
    base_idx = np.arange(d)
    for m in range(d):
        shifted = (base_idx - m) % d
        translated = a[shifted]
        for n in range(d):
            phase = np.exp(2j * math.pi * shifted * n / d)
            rows[m * d + n] = translated * phase / root
    return Frame(rows, "C")
