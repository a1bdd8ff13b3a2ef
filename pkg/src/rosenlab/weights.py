"""Null-coordinate weight functions and modulators.

Four weights w0..w3 of the argument q = r - t, growing like (1+|q|)^p for
q > 0 and flat or mildly decaying for q < 0, plus the exterior modulators
alpha, alpha2.  All are nondecreasing in q, so w' >= 0 serves as the good
(ghost-weight) flux multiplier in the energy estimates.

Parameter ordering: 0 < rho << sigma << mu << delta, encoded as
rho < sigma/4 < mu/16 < delta/64, together with sigma + rho < delta - 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

WEIGHT_IDS = ("w0", "w1", "w2", "w3")
MODULATORS = ("none", "alpha", "alpha2")


@dataclass(frozen=True)
class WeightSpec:
    delta: float = 0.8
    mu: float = 0.1
    sigma: float = 0.02
    rho: float = 0.004

    def __post_init__(self):
        d, m, s, r = self.delta, self.mu, self.sigma, self.rho
        if not (0 < r < s / 4 < m / 16 < d / 64):
            raise ValueError(f"weight parameters violate rho < sigma/4 < mu/16 < delta/64: "
                             f"(delta, mu, sigma, rho) = {(d, m, s, r)}")
        if not (s + r < d - 0.5):
            raise ValueError(f"need sigma + rho < delta - 1/2, got {s + r} vs {d - 0.5}")

    # -- weights --------------------------------------------------------------

    def w(self, wid: str, q) -> np.ndarray:
        q = np.asarray(q, dtype=float)
        p = 1.0 + np.abs(q)
        d, m = self.delta, self.mu
        pos = q > 0
        if wid == "w0":
            return np.where(pos, p ** (2 + 2 * d), 1.0 + p ** (-2 * m))
        if wid == "w1":
            return np.where(pos, p ** (2 + 2 * d), p ** (-0.5))
        if wid == "w2":
            return np.where(pos, p ** (2 + 2 * d), p ** (-1 - 2 * m))
        if wid == "w3":
            return np.where(pos, p ** (3 + 2 * d), 1.0 + p ** (-2 * m))
        raise KeyError(wid)

    def w_prime(self, wid: str, q) -> np.ndarray:
        """dw/dq (one-sided at q = 0; nonnegative everywhere)."""
        q = np.asarray(q, dtype=float)
        p = 1.0 + np.abs(q)
        d, m = self.delta, self.mu
        pos = q > 0
        if wid == "w0":
            return np.where(pos, (2 + 2 * d) * p ** (1 + 2 * d), 2 * m * p ** (-2 * m - 1))
        if wid == "w1":
            return np.where(pos, (2 + 2 * d) * p ** (1 + 2 * d), 0.5 * p ** (-1.5))
        if wid == "w2":
            return np.where(pos, (2 + 2 * d) * p ** (1 + 2 * d),
                            (1 + 2 * m) * p ** (-2 - 2 * m))
        if wid == "w3":
            return np.where(pos, (3 + 2 * d) * p ** (2 + 2 * d), 2 * m * p ** (-2 * m - 1))
        raise KeyError(wid)

    # -- modulators -----------------------------------------------------------

    def alpha(self, q) -> np.ndarray:
        q = np.asarray(q, dtype=float)
        return np.where(q > 0, (1.0 + np.abs(q)) ** (-self.sigma), 1.0)

    def alpha2(self, q) -> np.ndarray:
        q = np.asarray(q, dtype=float)
        return np.where(q > 0, (1.0 + np.abs(q)) ** (-2 * self.sigma), 1.0)

    def modulator(self, name: str, q) -> np.ndarray:
        if name == "none":
            return np.ones_like(np.asarray(q, dtype=float))
        if name == "alpha":
            return self.alpha(q)
        if name == "alpha2":
            return self.alpha2(q)
        raise KeyError(name)

    def hardy_v(self, alpha_exp: float, beta_exp: float, q) -> np.ndarray:
        """The Hardy weight: (1+|q|)^alpha for q<0, (1+|q|)^beta for q>0."""
        q = np.asarray(q, dtype=float)
        p = 1.0 + np.abs(q)
        return np.where(q > 0, p ** beta_exp, p ** alpha_exp)


def bracket_plus(base, exponent: float) -> np.ndarray:
    """A^{[a]+}: A^max(a,0) for a != 0, ln(A) for a == 0."""
    base = np.asarray(base, dtype=float)
    if exponent == 0.0:
        return np.log(base)
    return base ** max(exponent, 0.0)
