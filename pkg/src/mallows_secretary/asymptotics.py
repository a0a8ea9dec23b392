"""Limiting optimal cutoffs and success probabilities for the three bias regimes.

Regimes are parameterized by how the Mallows bias scales with n:

  weak      q_n = 1 - c/n          cutoff fraction b*(c), limit value 1/e
  moderate  q_n = 1 - c/n^alpha    observation window ~ n^alpha / c, limit 1/e
  strong    q fixed in (0, 1)      window is the integer step L(q), limit (1-q) q^(L-1) L

Also provides the large-n limit of E[inversions]/n^2 in the weak regime, an
explicit integral evaluated by adaptive quadrature.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from scipy.integrate import IntegrationWarning, quad

from .numeric import log1mexp

QUAD_TOL = 1e-10


@dataclass(frozen=True)
class RegimeSpec:
    """Which scaling regime, plus the parameters that regime needs."""

    kind: str
    c: float | None = None
    alpha: float | None = None
    q: float | None = None

    def __post_init__(self) -> None:
        if self.kind == "weak":
            if self.c is None or self.c <= 0:
                raise ValueError("weak regime needs c > 0")
            if self.alpha is not None or self.q is not None:
                raise ValueError("weak regime takes only c")
        elif self.kind == "moderate":
            if self.c is None or self.c <= 0:
                raise ValueError("moderate regime needs c > 0")
            if self.alpha is None or not 0.0 < self.alpha < 1.0:
                raise ValueError("moderate regime needs alpha in (0, 1)")
            if self.q is not None:
                raise ValueError("moderate regime takes only c and alpha")
        elif self.kind == "strong":
            if self.q is None or not 0.0 < self.q < 1.0:
                raise ValueError("strong regime needs q in (0, 1)")
            if self.c is not None or self.alpha is not None:
                raise ValueError("strong regime takes only q")
        else:
            raise ValueError(f"unknown regime kind {self.kind!r}")


def weak_threshold_fraction(c: float) -> float:
    """b*(c) = (1/c) log(1 + (e^c - 1)/e), the limiting rejected fraction.

    Tends to 1/e as c -> 0 and to 1 as c -> infinity; expm1/log1p keep both
    ends stable, with a rearranged branch once e^c would overflow.
    """
    if c <= 0:
        raise ValueError(f"c must be > 0, got {c}")
    if c > 500.0:
        # log(1 + (e^c-1)/e) = c + log1p((e-1) e^-c) - 1
        return 1.0 + (math.log1p((math.e - 1.0) * math.exp(-c)) - 1.0) / c
    return math.log1p(math.expm1(c) / math.e) / c


def weak_limit_objective(b: float, c: float) -> float:
    """Limiting success probability of cutoff ~ b*n in the weak regime.

        c e^{-c} (e^{bc} - 1) / (1 - e^{-c}) * (1 - b + (1/c) log((1-e^{-c})/(1-e^{-bc})))

    Equals 1/e at b = b*(c), which is its unique maximizer on (0, 1).
    """
    if not 0.0 < b < 1.0:
        raise ValueError(f"b must lie in (0, 1), got {b}")
    if c <= 0:
        raise ValueError(f"c must be > 0, got {c}")
    # e^{-c}(e^{bc}-1) written as a difference of exponentials so neither
    # factor overflows for large c
    prefactor = c * (math.exp(-(1.0 - b) * c) - math.exp(-c)) / -math.expm1(-c)
    bracket = 1.0 - b + (log1mexp(-c) - log1mexp(-b * c)) / c
    return prefactor * bracket


def moderate_window(n: int, alpha: float, c: float) -> float:
    """Optimal observation window -1/log(1 - c n^-alpha); asymptotically n^alpha/c."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if c <= 0:
        raise ValueError(f"c must be > 0, got {c}")
    x = c * n**-alpha
    if x >= 1.0:
        raise ValueError(f"need c*n^-alpha < 1, got {x} (n={n}, alpha={alpha}, c={c})")
    return -1.0 / math.log1p(-x)


def strong_window(q: float) -> int:
    """The integer L >= 1 with (L-1)/L < q <= L/(L+1), i.e. L = ceil(q/(1-q)).

    The upper boundary belongs to L.  Floating-point q sitting within an ulp
    of a boundary is classified by this exact arithmetic on the stored double:
    0.6666666666666666 (just below 2/3) gives L = 2, while 0.9 (whose double
    is just above 9/10) gives L = 10.
    """
    if not 0.0 < q < 1.0:
        raise ValueError(f"q must lie in (0, 1), got {q!r}")
    return max(1, math.ceil(q / (1.0 - q)))


def strong_limit_probability(q: float) -> float:
    """Limiting success probability (1-q) q^(L-1) L under fixed bias q.

    Equals 1-q for q <= 1/2, exceeds 1/e throughout (0, 1), and falls to 1/e
    as q -> 1.
    """
    L = strong_window(q)
    return (1.0 - q) * q ** (L - 1) * L


def inversion_limit_weak(c: float) -> float:
    """lim E[inversions]/n^2 under q_n = 1 - c/n:

        I(c) = (1/c^2) integral_0^{1-e^{-c}} (1/(1-x) + log(1-x)/x) dx,

    which decreases from 1/4 (c -> 0) to 0 (c -> infinity), computed by
    adaptive quadrature to absolute tolerance 1e-10 on I(c).

    Two routes cover the two failure modes.  For c <= 1 the integrand is
    bounded and smooth (its value at 0+ is the limit 0), so it is integrated
    directly; splitting would lose the result to cancellation, since the two
    terms integrate to nearly opposite values there.  For c > 1 the 1/(1-x)
    term grows like e^c near the upper endpoint, so it is integrated exactly
    (to c) and quadrature handles only the bounded log(1-x)/x part.
    """
    if c <= 0:
        raise ValueError(f"c must be > 0, got {c}")
    upper = -math.expm1(-c)
    budget = QUAD_TOL * c * c  # error on the integral that keeps I(c) within tolerance

    if c <= 1.0:

        def integrand(x: float) -> float:
            if x < 1e-12:
                return 0.0
            return 1.0 / (1.0 - x) + math.log1p(-x) / x

    else:

        def integrand(x: float) -> float:
            if x < 1e-12:
                return -1.0
            return math.log1p(-x) / x

    with warnings.catch_warnings():
        # quad warns when epsabs is below its attainable roundoff floor; the
        # budget check below enforces the tolerance that actually matters
        warnings.simplefilter("ignore", IntegrationWarning)
        value, abserr = quad(integrand, 0.0, upper, epsabs=0.25 * budget,
                             epsrel=1e-13, limit=300)
    result = value / (c * c) if c <= 1.0 else (c + value) / (c * c)

    if abserr > budget:
        raise ArithmeticError(
            f"quadrature for I({c}) did not meet tolerance: "
            f"reported error {abserr:.3e}, budget {budget:.3e}"
        )
    return result


def predict(spec: RegimeSpec, n: int) -> tuple[int, float]:
    """Asymptotically optimal cutoff for n arrivals, with the limiting probability.

    Real-valued cutoff predictions are rounded half-to-even; they are
    asymptotic, so any fixed rounding rule is admissible and this one is
    reproducible.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if spec.kind == "weak":
        return round(n * weak_threshold_fraction(spec.c)), 1.0 / math.e
    if spec.kind == "moderate":
        return n - round(moderate_window(n, spec.alpha, spec.c)), 1.0 / math.e
    window = strong_window(spec.q)
    if window > n:
        raise ValueError(f"strong-bias window L={window} needs n >= {window}, got n={n}")
    return n - window, strong_limit_probability(spec.q)
