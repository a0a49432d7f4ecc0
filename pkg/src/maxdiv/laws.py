"""Max-infinitely divisible law families built on a tail exponent.

Every law here is defined through its d.f. as a transform of the
exponent value s = psi(x):

    base:       F(x) = exp(-s)
    g-mid:      F(x) = 1/(1+s)
    gamma-mid:  F(x) = (1+s)**-beta
    ggamma-mid: F(x) = 1/(1 + beta*log(1+s))

Each F**(1/n) stays a d.f. for every n, so all four kinds are
max-infinitely divisible.  The g-mid kind is the geometric(p)-max
attractor of the base kind; gamma-mid generalises it with a gamma
shape; ggamma-mid compounds the base kind with a log-transformed gamma
time and is closed under geometric maxima (shape beta -> beta/p).

Two samplers are provided: inverse transform from the quantile, and a
latent-time route X = inverse(psi, -log(U)/T) where T follows the
kind's mixing law (exp(1) for g-mid, gamma(beta) for gamma-mid, the
log-compounded gamma for ggamma-mid).  Both produce the same law; the
test-suite cross-checks them by two-sample KS.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .exponents import Exponent, Family, _as_array, _unwrap
from .rng import uniform_open

__all__ = [
    "LawKind",
    "MaxLaw",
    "base_law",
    "g_mid",
    "gamma_mid",
    "ggamma_mid",
    "quantile_neg_log",
    "sample_gamma",
    "sample_ggamma",
    "lt_ggamma",
    "law_to_dict",
    "law_from_dict",
]


class LawKind(str, Enum):
    BASE = "base"
    GMID = "g-mid"
    GAMMA_MID = "gamma-mid"
    GGAMMA_MID = "ggamma-mid"


@dataclass(frozen=True)
class MaxLaw:
    """A law kind plus its exponent; beta is ignored for base and g-mid."""

    kind: LawKind
    exponent: Exponent
    beta: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.kind, LawKind):
            object.__setattr__(self, "kind", LawKind(self.kind))
        if self.kind in (LawKind.BASE, LawKind.GMID):
            object.__setattr__(self, "beta", 1.0)
        if not (np.isfinite(self.beta) and self.beta > 0):
            raise ValueError(f"beta must be a finite positive number, got {self.beta}")

    # -- distribution function ------------------------------------------

    def neg_log_cdf(self, x):
        """-log F(x); computed with log1p so deep tails do not cancel."""
        s, scalar = _as_array(self.exponent.eval(x))
        if self.kind is LawKind.BASE:
            out = s
        elif self.kind is LawKind.GMID:
            out = np.log1p(s)
        elif self.kind is LawKind.GAMMA_MID:
            out = self.beta * np.log1p(s)
        else:
            out = np.log1p(self.beta * np.log1p(s))
        return _unwrap(out, scalar)

    def cdf(self, x):
        s, scalar = _as_array(self.exponent.eval(x))
        if self.kind is LawKind.BASE:
            out = np.exp(-s)
        elif self.kind is LawKind.GMID:
            out = 1.0 / (1.0 + s)
        elif self.kind is LawKind.GAMMA_MID:
            out = np.exp(-self.beta * np.log1p(s))
        else:
            out = 1.0 / (1.0 + self.beta * np.log1p(s))
        return _unwrap(out, scalar)

    def quantile(self, u):
        """Inverse d.f. on (0, 1); endpoints are rejected."""
        us, scalar = _as_array(u)
        if np.any(~np.isfinite(us)) or np.any(us <= 0.0) or np.any(us >= 1.0):
            raise ValueError("quantile requires u strictly inside (0, 1)")
        out = _quantile_w(self, -np.log(us))
        return _unwrap(out, scalar)

    def support(self):
        return self.exponent.support()

    # samplers take an explicit numpy Generator so that identical
    # (seed, stream) sources reproduce identical output

    def sample_inverse(self, rng: np.random.Generator, n: int) -> np.ndarray:
        _check_size(n)
        return _quantile_w(self, -np.log(uniform_open(rng, n)))

    def sample_latent(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Draw via the latent mixing time; not defined for the base kind.

        A mixing time that underflows to 0.0 stands for a genuinely
        positive sub-float value, so the draw is kept and collapses to
        the smallest representable point of the support, matching the
        inverse route's handling of unrepresentably extreme quantiles.
        """
        _check_size(n)
        if self.kind is LawKind.BASE:
            raise ValueError("base kind has no latent mixing time")
        if self.kind is LawKind.GMID:
            t = rng.standard_exponential(n)
        elif self.kind is LawKind.GAMMA_MID:
            t = rng.gamma(self.beta, 1.0, n)
        else:
            t = sample_ggamma(self.beta, rng, n)
        w = -np.log(uniform_open(rng, n))
        with np.errstate(over="ignore", divide="ignore"):
            out = self.exponent._inverse_raw(w / t)
        return _nudge_off_bottom(self.exponent, out)


def _check_size(n: int) -> None:
    if n < 1:
        raise ValueError(f"sample size must be >= 1, got {n}")


def _quantile_w(law: MaxLaw, w):
    """Quantile evaluated at u = exp(-w), w > 0, without forming u.

    Working in w keeps the transform stable when u is close to either
    endpoint.  Quantiles beyond float range are mapped to the closest
    representable point strictly above the support bottom, so samples
    never sit on the bottom itself and empirical d.f.s stay aligned
    with the law's d.f. at the smallest representable values.
    """
    w = np.asarray(w, dtype=float)
    with np.errstate(over="ignore"):
        if law.kind is LawKind.BASE:
            s = w
        elif law.kind is LawKind.GMID:
            s = np.expm1(w)
        elif law.kind is LawKind.GAMMA_MID:
            s = np.expm1(w / law.beta)
        else:
            s = np.expm1(np.expm1(w) / law.beta)
    return _nudge_off_bottom(law.exponent, law.exponent._inverse_raw(s))


def _nudge_off_bottom(exponent: Exponent, x):
    bottom = exponent.support().lower
    collapsed = x == bottom
    if not np.any(collapsed):
        return x
    return np.where(collapsed, exponent._min_inside(), x)


def quantile_neg_log(law: MaxLaw, w):
    """Public wrapper of the w-space quantile, for w = -log(u) > 0."""
    ws, scalar = _as_array(w)
    if np.any(~(ws > 0.0)):
        raise ValueError("quantile_neg_log requires w > 0")
    return _unwrap(_quantile_w(law, ws), scalar)


def _redraw_zeros(draw, out: np.ndarray) -> np.ndarray:
    # exact 0.0 only occurs by floating underflow; the target laws are
    # continuous and positive, so rejecting zeros is bias-free
    zero = out == 0.0
    while np.any(zero):
        out[zero] = draw(int(zero.sum()))
        zero = out == 0.0
    return out


def sample_gamma(shape: float, rng: np.random.Generator, size: int | None = None):
    """Unit-scale gamma variates, any shape > 0."""
    if not (np.isfinite(shape) and shape > 0):
        raise ValueError(f"gamma shape must be a finite positive number, got {shape}")
    _check_size(1 if size is None else size)
    return rng.gamma(shape, 1.0, size)


def sample_ggamma(beta: float, rng: np.random.Generator, size: int | None = None):
    """Gamma variate whose shape is beta times a unit exponential.

    The resulting positive law has Laplace transform
    1/(1 + beta*log(1+lam)).  Shape draws that underflow to an exact
    zero are redrawn (a zero-shape gamma is a point mass, not a member
    of the family).  Variate draws of exact 0.0 are kept: the law puts
    real mass below the smallest float (about 1/(1+744*beta)), so a
    zero is the nearest representable value of a genuinely positive
    draw, and rejecting it would bias every quantile of the law.
    Downstream transforms send such draws to the smallest representable
    point of the target support.
    """
    if not (np.isfinite(beta) and beta > 0):
        raise ValueError(f"beta must be a finite positive number, got {beta}")
    n = 1 if size is None else size
    _check_size(n)
    shape = beta * _redraw_zeros(rng.standard_exponential, rng.standard_exponential(n))
    while np.any(shape == 0.0):
        zero = shape == 0.0
        shape[zero] = beta * rng.standard_exponential(int(zero.sum()))
    t = rng.gamma(shape, 1.0, n)
    return float(t[0]) if size is None else t


def lt_ggamma(beta: float, lam):
    """Laplace transform of the law drawn by sample_ggamma."""
    if not (np.isfinite(beta) and beta > 0):
        raise ValueError(f"beta must be a finite positive number, got {beta}")
    ls, scalar = _as_array(lam)
    if np.any(ls < 0) or np.any(np.isnan(ls)):
        raise ValueError("Laplace argument must be >= 0")
    return _unwrap(1.0 / (1.0 + beta * np.log1p(ls)), scalar)


# -- constructors and JSON descriptors ----------------------------------


def base_law(exponent: Exponent) -> MaxLaw:
    return MaxLaw(LawKind.BASE, exponent)


def g_mid(exponent: Exponent) -> MaxLaw:
    return MaxLaw(LawKind.GMID, exponent)


def gamma_mid(beta: float, exponent: Exponent) -> MaxLaw:
    return MaxLaw(LawKind.GAMMA_MID, exponent, beta)


def ggamma_mid(beta: float, exponent: Exponent) -> MaxLaw:
    return MaxLaw(LawKind.GGAMMA_MID, exponent, beta)


def law_to_dict(law: MaxLaw) -> dict:
    return {
        "kind": law.kind.value,
        "family": law.exponent.family.value,
        "alpha": law.exponent.alpha,
        "beta": law.beta,
    }


def law_from_dict(obj: dict) -> MaxLaw:
    try:
        kind = LawKind(obj["kind"])
        family = Family(obj["family"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"not a valid law descriptor: {obj!r}") from exc
    exponent = Exponent(family, float(obj.get("alpha", 1.0)))
    return MaxLaw(kind, exponent, float(obj.get("beta", 1.0)))
