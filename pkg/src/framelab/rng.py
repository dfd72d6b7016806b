"""Deterministic random number generation.

All randomized routines in the package draw from :class:`SplitMix64`
seeded with a caller-supplied integer, so identical seeds reproduce
identical results on every platform.  Gaussian variates come from the
Box-Muller transform applied to the raw 64-bit stream; complex
Gaussians are standard circular ones with unit total variance.
"""

from __future__ import annotations

import math

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_TWO_PI = 2.0 * math.pi


class SplitMix64:
    """64-bit SplitMix generator with Box-Muller Gaussian output.

    Parameters
    ----------
    seed : int
        Any integer; only the low 64 bits are kept.
    """

    __slots__ = ("state", "_spare")

    def __init__(self, seed: int):
        self.state = seed & _MASK
        self._spare: float | None = None

    def u64(self) -> int:
        """Next raw 64-bit word."""
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def uniform(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.u64() >> 11) * 2.0 ** -53

    def below(self, n: int) -> int:
        """Uniform integer in [0, n). Bias is negligible for small n."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.u64() % n

    def gaussian(self) -> float:
        """Standard normal variate.

        Box-Muller produces pairs; the second element is cached and
        returned on the next call so no bits are wasted.
        """
        if self._spare is not None:
            value = self._spare
            self._spare = None
            return value
        # Shift into (0, 1] so the log never sees zero.
        u1 = ((self.u64() >> 11) + 1) * 2.0 ** -53
        u2 = (self.u64() >> 11) * 2.0 ** -53
        radius = math.sqrt(-2.0 * math.log(u1))
        self._spare = radius * math.sin(_TWO_PI * u2)
        return radius * math.cos(_TWO_PI * u2)

    def gaussians(self, shape: int | tuple[int, ...]) -> np.ndarray:
        """Array of independent standard normals, filled in C order."""
        if isinstance(shape, int):
            shape = (shape,)
        flat = np.empty(int(np.prod(shape)), dtype=np.float64)
        for i in range(flat.size):
            flat[i] = self.gaussian()
        return flat.reshape(shape)

    def complex_gaussians(self, shape: int | tuple[int, ...]) -> np.ndarray:
        """Array of standard circular complex normals (unit variance)."""
        if isinstance(shape, int):
            shape = (shape,)
        flat = np.empty(int(np.prod(shape)), dtype=np.complex128)
        for i in range(flat.size):
            re = self.gaussian()
            im = self.gaussian()
            flat[i] = complex(re, im) / math.sqrt(2.0)
        return flat.reshape(shape)

    def spawn(self) -> "SplitMix64":
        """Child generator seeded from this one's stream."""
        return SplitMix64(self.u64())
