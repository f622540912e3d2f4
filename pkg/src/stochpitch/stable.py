"""Symmetric alpha-stable primitives.

The noise driving the system is a symmetric stable process with
non-Gaussianity index ``alpha`` in (0, 2).  Everything the solver and the
Monte Carlo oracle need from the stable law lives here:

* the tail coefficient ``C_alpha`` of the jump measure,
* the jump measure density ``C_alpha * |y|**-(1+alpha)``,
* sampling of standard symmetric stable variates (Chambers-Mallows-Stuck),
* the ``dt**(1/alpha)`` scale of an increment over a time step.

``C_alpha`` is exactly the normalization constant of the one-dimensional
fractional Laplacian, so the jump integral of a field agrees with
``-(-Laplace)**(alpha/2)`` applied to it; the solver tests lean on that
identity.

Sampling follows Chambers, Mallows & Stuck, "A Method for Simulating
Stable Random Variables", JASA 71 (1976), restricted to the symmetric
case (skewness 0, shift 0), with the Cauchy closed form at ``alpha = 1``.
"""

from dataclasses import dataclass
from math import gamma, pi, sqrt

import numpy as np

__all__ = [
    "StableParams",
    "JumpMeasure",
    "c_alpha",
    "jump_density",
    "sample_standard_stable",
    "increment_scale",
    "cms_transform",
    "philox_generator",
]

#: Largest admissible 128-bit seed for the counter-based generator.
_MAX_SEED = 2**128 - 1


def _check_alpha(alpha):
    if not 0.0 < alpha < 2.0:
        raise ValueError(
            f"alpha must lie strictly inside (0, 2), got {alpha!r}; "
            "alpha = 2 is the Brownian case and is handled by the "
            "noise-kind switch, not by the stable law"
        )
    return float(alpha)


@dataclass(frozen=True)
class StableParams:
    """The four stable-law indices.

    Only the symmetric, centered sub-family is admitted: ``beta`` and
    ``mu`` must be zero everywhere in this toolkit.
    """

    alpha: float
    beta: float = 0.0
    sigma_scale: float = 1.0
    mu: float = 0.0

    def __post_init__(self):
        _check_alpha(self.alpha)
        if self.beta != 0.0:
            raise ValueError("only symmetric stable laws are supported (beta = 0)")
        if self.mu != 0.0:
            raise ValueError("only centered stable laws are supported (mu = 0)")
        if self.sigma_scale < 0.0:
            raise ValueError(f"sigma_scale must be nonnegative, got {self.sigma_scale!r}")


def c_alpha(alpha):
    """Tail coefficient of the stable jump measure.

    ``C_alpha = alpha * Gamma((1+alpha)/2) / (2**(1-alpha) * sqrt(pi)
    * Gamma(1 - alpha/2))``, continuous and positive on (0, 2).
    """
    a = _check_alpha(alpha)
    return a * gamma((1.0 + a) / 2.0) / (2.0 ** (1.0 - a) * sqrt(pi) * gamma(1.0 - a / 2.0))


def jump_density(y, alpha):
    """Density ``C_alpha * |y|**-(1+alpha)`` of the jump measure at ``y != 0``.

    Even in ``y`` and non-integrable at the origin, which is excluded.
    """
    a = _check_alpha(alpha)
    y_arr = np.asarray(y, dtype=float)
    if np.any(y_arr == 0.0):
        raise ValueError("jump density has a non-integrable singularity at y = 0")
    out = c_alpha(a) * np.abs(y_arr) ** (-(1.0 + a))
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class JumpMeasure:
    """Jump measure ``nu(dy) = c_alpha * |y|**-(1+alpha) dy`` of the stable law."""

    alpha: float
    c_alpha: float

    def __post_init__(self):
        _check_alpha(self.alpha)
        expected = c_alpha(self.alpha)
        if not np.isclose(self.c_alpha, expected, rtol=1e-12, atol=0.0):
            raise ValueError(
                f"c_alpha = {self.c_alpha!r} does not match the closed form "
                f"{expected!r} for alpha = {self.alpha!r}"
            )

    @classmethod
    def for_alpha(cls, alpha):
        return cls(alpha=float(alpha), c_alpha=c_alpha(alpha))

    def density(self, y):
        return jump_density(y, self.alpha)

    def tail_mass(self, radius):
        """Total measure of ``{|y| > radius}``: ``2 c_alpha r**-alpha / alpha``."""
        if radius <= 0.0:
            raise ValueError("tail radius must be positive")
        return 2.0 * self.c_alpha * radius ** (-self.alpha) / self.alpha


def philox_generator(seed, stream=0):
    """Counter-based generator for reproducible, order-independent streams.

    Distinct ``stream`` values (e.g. one per time step of a path ensemble)
    give statistically independent, individually reproducible streams for
    the same ``seed``.
    """
    seed = int(seed)
    if not 0 <= seed <= _MAX_SEED:
        raise ValueError("seed must be a nonnegative integer below 2**128")
    key = (seed + (int(stream) + 1) * 2**128) % (2**256)
    return np.random.Generator(np.random.Philox(key=key & (2**128 - 1), counter=int(stream)))


def cms_transform(alpha, uniform01, exponential1):
    """Map iid U(0,1) and Exp(1) draws to standard symmetric stable draws.

    The Chambers-Mallows-Stuck transform for ``S_alpha(1, 0, 0)``:

        X = sin(alpha U) / cos(U)**(1/alpha)
            * (cos((1 - alpha) U) / W)**((1 - alpha)/alpha)

    with ``U`` uniform on (-pi/2, pi/2) and ``W`` standard exponential.
    ``alpha = 1`` uses its closed-form branch ``X = tan(U)`` (Cauchy) to
    avoid the removable singularity of the general formula.
    """
    a = _check_alpha(alpha)
    u = (np.asarray(uniform01, dtype=float) - 0.5) * pi
    if a == 1.0:
        return np.tan(u)
    w = np.asarray(exponential1, dtype=float)
    return (
        np.sin(a * u)
        / np.cos(u) ** (1.0 / a)
        * (np.cos((1.0 - a) * u) / w) ** ((1.0 - a) / a)
    )


def sample_standard_stable(alpha, count, seed):
    """Draw ``count`` iid standard symmetric stable variates ``S_alpha(1,0,0)``.

    The stream is a function of ``(alpha, count, seed)`` alone: identical
    arguments give a bit-identical vector regardless of call interleaving.
    """
    _check_alpha(alpha)
    count = int(count)
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    gen = philox_generator(seed)
    u01 = gen.random(count)
    exp1 = gen.standard_exponential(count)
    return cms_transform(alpha, u01, exp1)


def increment_scale(alpha, dt):
    """Scale index of a stable increment over time ``dt``: ``dt**(1/alpha)``."""
    a = _check_alpha(alpha)
    if not dt > 0.0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    return float(dt) ** (1.0 / a)
