"""The one-parameter unitary group on Omega = A + [0,1], discretised.

Functions on Omega are stored as N branches of M midpoint samples.  The
translated function at a grid point x of [0,1) is obtained branch-wise:
apply B^floor(x+t) to the branch vector read at the fractional part of
x + t.  Floor and fractional part follow the flooring convention
(floor(-0.3) = -1, frac(-0.3) = 0.7) so the formula also holds for
negative t, and midpoint sampling keeps x + t away from the branch
boundaries where the integer part jumps.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor

import numpy as np

from .matrices import mat_adjoint, mat_mul, RootTable
from .spectra import IntSet, Spectrum
from .translations import local_translation_matrix


@dataclass
class SampledFunction:
    """N x M complex samples; values[j][k] ~ f(a_j + (k + 1/2)/M)."""

    a: IntSet
    resolution: int
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.resolution < 1:
            raise ValueError("resolution must be >= 1")
        if self.values.shape != (len(self.a), self.resolution):
            raise ValueError("values must have shape (|A|, resolution)")
        if not np.all(np.isfinite(self.values.view(float))):
            raise ValueError("samples must be finite")

    @property
    def norm_squared(self) -> float:
        """L2 norm squared on Omega: sample energy scaled by 1/M."""
        return float(np.sum(np.abs(self.values) ** 2) / self.resolution)

    def copy(self) -> "SampledFunction":
        return SampledFunction(self.a, self.resolution, self.values.copy())


@dataclass(frozen=True)
class TrajectoryFrame:
    t: float
    samples: SampledFunction

    @property
    def norm_squared(self) -> float:
        return self.samples.norm_squared


def indicator(a: IntSet, resolution: int, branch: int, sub=(0, 1)) -> SampledFunction:
    """Indicator of branch + sub, sub = [start, end) with endpoints on the grid."""
    if branch not in a:
        raise ValueError(f"branch {branch} is not an element of {a!r}")
    start, end = Fraction(sub[0]), Fraction(sub[1])
    if not (0 <= start <= end <= 1):
        raise ValueError("sub-interval must satisfy 0 <= start <= end <= 1")
    ks = start * resolution
    ke = end * resolution
    if ks.denominator != 1 or ke.denominator != 1:
        raise ValueError("sub-interval endpoints must lie on the sample grid")
    values = np.zeros((len(a), resolution), dtype=complex)
    j = a.elements.index(branch)
    values[j, int(ks) : int(ke)] = 1.0
    return SampledFunction(a, resolution, values)


def sample_exponential(a: IntSet, resolution: int, lam) -> SampledFunction:
    """e_lambda sampled on the midpoint grid of every branch."""
    lam = float(lam)
    mids = (np.arange(resolution) + 0.5) / resolution
    values = np.array(
        [np.exp(2j * np.pi * lam * (x + mids)) for x in a], dtype=complex
    )
    return SampledFunction(a, resolution, values)


@lru_cache(maxsize=128)
def _float_power_cache(a_elements: tuple[int, ...], gamma_elements: tuple[Fraction, ...]):
    """Per-pair provider of float mirrors of exact powers B^m."""
    a = IntSet(a_elements)
    gamma = Spectrum(gamma_elements)
    b = local_translation_matrix(a, gamma).matrix
    exact = {0: RootTable.identity(b.rows), 1: b, -1: mat_adjoint(b)}
    mirrors: dict[int, np.ndarray] = {}

    def get(m: int) -> np.ndarray:
        if m not in mirrors:
            if m not in exact:
                step = 1 if m > 0 else -1
                prev = m - step
                if prev not in exact:
                    get(prev)
                exact[m] = mat_mul(exact[prev], exact[step])
            mirrors[m] = exact[m].to_complex()
        return mirrors[m]

    return get


def _sample_map(resolution: int, t) -> list[tuple[int, int]]:
    """For each output index k: (m, k') with floor/frac of x_k + t.

    Exact for rational t; floats use the nearest-midpoint convention
    (a first-order-in-1/M approximation).
    """
    out = []
    if isinstance(t, (int, Fraction)):
        t = Fraction(t)
        for k in range(resolution):
            u = Fraction(2 * k + 1, 2 * resolution) + t
            m = floor(u)
            pos = (u - m) * resolution - Fraction(1, 2)
            kp = int(round(pos))  # exact when t is on the grid
            if kp >= resolution:
                kp -= resolution
                m += 1
            out.append((m, kp))
        return out
    for k in range(resolution):
        u = (k + 0.5) / resolution + t
        m = floor(u)
        kp = int(round((u - m) * resolution - 0.5))
        if kp < 0:
            kp += resolution
            m -= 1
        elif kp >= resolution:
            kp -= resolution
            m += 1
        out.append((m, kp))
    return out


def translate(f: SampledFunction, gamma: Spectrum, t) -> SampledFunction:
    """U(t) f on the sample grid via branch vectors and powers of B."""
    provider = _float_power_cache(f.a.elements, gamma.elements)
    mapping = _sample_map(f.resolution, t)
    out = np.empty_like(f.values)
    by_power: dict[int, list[tuple[int, int]]] = {}
    for k, (m, kp) in enumerate(mapping):
        by_power.setdefault(m, []).append((k, kp))
    for m, pairs in by_power.items():
        bm = provider(m)
        src = f.values[:, [kp for _, kp in pairs]]
        dst = bm @ src
        out[:, [k for k, _ in pairs]] = dst
    return SampledFunction(f.a, f.resolution, out)


def trajectory(f: SampledFunction, gamma: Spectrum, t_start, t_end, steps: int) -> list[TrajectoryFrame]:
    """Frames of U(t) f at ``steps`` uniformly spaced times, in time order."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if steps == 1:
        ts = [Fraction(t_start) if isinstance(t_start, (int, Fraction)) else t_start]
    else:
        rational = isinstance(t_start, (int, Fraction)) and isinstance(t_end, (int, Fraction))
        if rational:
            t0, t1 = Fraction(t_start), Fraction(t_end)
            ts = [t0 + (t1 - t0) * i / (steps - 1) for i in range(steps)]
        else:
            ts = list(np.linspace(float(t_start), float(t_end), steps))
    frames = []
    for t in ts:
        frames.append(TrajectoryFrame(float(t), translate(f, gamma, t)))
    return frames


def trajectory_to_csv(frames: list[TrajectoryFrame]) -> str:
    """RFC-4180 CSV, one row per sample per frame: t,branch,x,re,im,abs.

    ``x`` is the absolute coordinate a_j + (k + 1/2)/M, ready for plotting.
    """
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["t", "branch", "x", "re", "im", "abs"])
    for frame in frames:
        samples = frame.samples
        m = samples.resolution
        for j, branch in enumerate(samples.a):
            for k in range(m):
                v = samples.values[j, k]
                writer.writerow(
                    [
                        repr(float(frame.t)),
                        branch,
                        repr(branch + (k + 0.5) / m),
                        repr(float(v.real)),
                        repr(float(v.imag)),
                        repr(float(abs(v))),
                    ]
                )
    return buf.getvalue()


def trajectory_to_records(frames: list[TrajectoryFrame]) -> list[dict]:
    """JSON-ready rows with the same fields as the CSV export."""
    rows = []
    for frame in frames:
        samples = frame.samples
        m = samples.resolution
        for j, branch in enumerate(samples.a):
            for k in range(m):
                v = samples.values[j, k]
                rows.append(
                    {
                        "t": float(frame.t),
                        "branch": int(branch),
                        "x": float(branch + (k + 0.5) / m),
                        "re": float(v.real),
                        "im": float(v.imag),
                        "abs": float(abs(v)),
                    }
                )
    return rows
