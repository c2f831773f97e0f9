"""Closed-form spectral results for the hexagonal torus.

Everything here is evaluated from trigonometric formulas, never from a
generated graph, so these routines double as independent oracles for the
matrix routes.  Conventions:

* ``hex_eigenvalues(n, m)`` and ``hex_trace_pinv(n, m)`` take the
  structural parameters of the unit-length graph H(n, m).
* ``tau_hex_closed(n)``, ``tau_hex_analytic(n, m)`` and the bound helpers
  take the table header convention: argument n means the normalized graph
  H^N(n-1, n-1) (respectively H^N(n-1, m-1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import ParameterOutOfRange

#: exact rational values of the interior cosine double sum for small n
KNOWN_TRIG_SUM_RATIONALS: dict[int, Fraction] = {
    2: Fraction(1, 4),
    3: Fraction(10, 9),
    4: Fraction(11, 4),
    5: Fraction(58, 11),
    6: Fraction(1577, 180),
    7: Fraction(3812, 287),
    8: Fraction(529, 28),
    9: Fraction(419788, 16371),
    10: Fraction(813957, 24244),
}

#: published approximation constant for the limiting lattice integral; see
#: lattice_integral for why a grid quadrature cannot actually converge to it
LATTICE_INTEGRAL_REFERENCE = 5.4661


@dataclass(frozen=True)
class HexSpectrum:
    n: int
    m: int
    eigenvalues: np.ndarray  # sorted ascending, length 2(n+1)(m+1)


@dataclass(frozen=True)
class TrigSumValue:
    n: int
    value: float
    known_rational: Optional[Fraction]


def hex_eigenvalues(n: int, m: int) -> HexSpectrum:
    """Laplacian spectrum of unit-length H(n, m).

    lambda_{i,j,k} = 3 + (-1)^k sqrt(3 + 2cos(2 pi i/(n+1))
    + 2cos(2 pi j/(m+1)) + 2cos(2 pi i/(n+1) + 2 pi j/(m+1))),
    over 0 <= i <= n, 0 <= j <= m, k in {0, 1}.
    """
    if n < 0 or m < 0:
        raise ParameterOutOfRange(f"need n, m >= 0, got ({n}, {m})")
    N, M = n + 1, m + 1
    t1 = 2.0 * np.pi * np.arange(N)[:, None] / N
    t2 = 2.0 * np.pi * np.arange(M)[None, :] / M
    inner = 3.0 + 2.0 * np.cos(t1) + 2.0 * np.cos(t2) + 2.0 * np.cos(t1 + t2)
    # when 3 divides both n+1 and m+1 the radicand vanishes exactly (a
    # double eigenvalue 3); the floating-point residual ~1e-16 would turn
    # into a sqrt(eps)-sized eigenvalue error, so clamp it.  The smallest
    # genuine nonzero radicand scales like 1/max(n, m)^2, far above 1e-10.
    inner[np.abs(inner) < 1e-10] = 0.0
    root = np.sqrt(np.maximum(inner, 0.0))
    vals = np.concatenate([(3.0 + root).ravel(), (3.0 - root).ravel()])
    vals.sort()
    return HexSpectrum(n, m, vals)


def _pair_sum_denominators(n: int, m: int) -> np.ndarray:
    """3 - cos(2 pi i/(n+1)) - cos(2 pi j/(m+1)) - cos(sum), (0,0) removed."""
    N, M = n + 1, m + 1
    t1 = 2.0 * np.pi * np.arange(N)[:, None] / N
    t2 = 2.0 * np.pi * np.arange(M)[None, :] / M
    den = 3.0 - np.cos(t1) - np.cos(t2) - np.cos(t1 + t2)
    mask = np.ones((N, M), dtype=bool)
    mask[0, 0] = False
    return den[mask]


def hex_trace_pinv(n: int, m: int) -> float:
    """tr(L+) for unit-length H(n, m): 1/6 plus the reciprocal pair sums."""
    if n < 0 or m < 0:
        raise ParameterOutOfRange(f"need n, m >= 0, got ({n}, {m})")
    return 1.0 / 6.0 + math.fsum((3.0 / _pair_sum_denominators(n, m)).tolist())


def hex_trace_pinv_square(n: int) -> float:
    """tr(L+) for unit H(n, n) in the reduced form.

    The i=0 and j=0 rows collapse through the cosecant identity, leaving
    1/6 + n(n+2)/2 + 3 S(n+1) with S the interior trig sum.
    """
    if n < 0:
        raise ParameterOutOfRange(f"need n >= 0, got {n}")
    return 1.0 / 6.0 + n * (n + 2) / 2.0 + 3.0 * trig_sum(n + 1).value


def trig_sum(n: int) -> TrigSumValue:
    """Interior double sum  sum_{i,j=1}^{n-1} 1/(3 - c_i - c_j - c_{i+j}).

    c_x denotes cos(2 pi x / n).  Compensated summation; the known exact
    rationals are attached for 2 <= n <= 10.
    """
    if n < 2:
        raise ParameterOutOfRange(f"trig_sum needs n >= 2, got {n}")
    t = 2.0 * np.pi * np.arange(1, n) / n
    den = (
        3.0
        - np.cos(t)[:, None]
        - np.cos(t)[None, :]
        - np.cos(t[:, None] + t[None, :])
    )
    value = math.fsum((1.0 / den).ravel().tolist())
    return TrigSumValue(n, value, KNOWN_TRIG_SUM_RATIONALS.get(n))


def trig_sum_bounds(n: int) -> tuple[float, float]:
    """(n-1)^2/6  <=  trig_sum(n)  <=  (n+1)(n-1)^2/6."""
    return (n - 1) ** 2 / 6.0, (n + 1) * (n - 1) ** 2 / 6.0


def csc_cot_identities(n: int) -> tuple[float, float]:
    """Residuals of the finite cosecant and cotangent square sums.

    sum csc^2(pi j/n) = (n^2-1)/3  and  sum cot^2(pi j/n) = (n-1)(n-2)/3,
    both over j = 1..n-1.
    """
    if n < 2:
        raise ParameterOutOfRange(f"need n >= 2, got {n}")
    t = np.pi * np.arange(1, n) / n
    s = np.sin(t)
    csc2 = math.fsum((1.0 / s**2).tolist())
    cot2 = math.fsum(((np.cos(t) / s) ** 2).tolist())
    return csc2 - (n * n - 1) / 3.0, cot2 - (n - 1) * (n - 2) / 3.0


def tau_hex_closed(n: int) -> float:
    """tau(H^N(n-1, n-1)) in closed form.

    (n^4 + 11 n^2 - 5)/(108 n^4) + S(n)/(2 n^4) with S the interior trig
    sum.  Stated for n >= 3; n = 2 is accepted and simply evaluated.
    """
    if n < 2:
        raise ParameterOutOfRange(f"tau_hex_closed needs n >= 2, got {n}")
    S = trig_sum(n).value
    return (n**4 + 11.0 * n**2 - 5.0) / (108.0 * n**4) + S / (2.0 * n**4)


def tau_hex_analytic(n: int, m: int) -> float:
    """tau(H^N(n-1, m-1)) analytically, for rectangular tori too.

    The torus is vertex transitive, so the pseudo-inverse diagonal is
    constant and the second tau term is tr(L+)/v exactly.  The first term
    needs the endpoint resistance of each of the three bond classes, which
    follows from the two-sublattice Fourier block
    H(k) = [[3, -f(k)], [-conj f(k), 3]],  f(k) = 1 + e^(i k1) + e^(-i k2):
    the class whose bond carries phase t contributes
    (6 - 2 Re(conj(t) f)) / (9 - |f|^2) per mode.
    """
    if n < 2 or m < 2:
        raise ParameterOutOfRange(f"need n, m >= 2, got ({n}, {m})")
    cells = n * m
    k1 = 2.0 * np.pi * np.arange(n)[:, None] / n
    k2 = 2.0 * np.pi * np.arange(m)[None, :] / m
    f = 1.0 + np.exp(1j * (k1 + np.zeros_like(k2))) + np.exp(-1j * (k2 + np.zeros_like(k1)))
    af2 = np.abs(f) ** 2
    mask = np.ones((n, m), dtype=bool)
    mask[0, 0] = False
    denom = 9.0 - af2
    phases = [np.ones_like(f), np.exp(1j * k1 + 0j * k2), np.exp(-1j * k2 + 0j * k1)]
    # zero mode: H(0) has pseudo-inverse [[1,-1],[-1,1]]/12 and t(0) = 1,
    # contributing 1/3 to every class sum
    r_classes = []
    for t in phases:
        num = 6.0 - 2.0 * np.real(np.conj(t) * f)
        r = (math.fsum((num[mask] / denom[mask]).tolist()) + 1.0 / 3.0) / cells
        r_classes.append(r)
    trace_unit = 1.0 / 6.0 + math.fsum((6.0 / denom[mask]).tolist())
    v = 2 * cells
    first_unit = math.fsum(cells * (1.0 - r) ** 2 for r in r_classes) / 12.0
    tau_unit = first_unit + trace_unit / v
    return tau_unit / (3.0 * cells)


def tau_hex_bounds(n: int) -> tuple[float, float]:
    """Polynomial bounds enclosing tau(H^N(n-1, n-1))."""
    lower = (n**4 + 20.0 * n**2 - 18.0 * n + 4.0) / (108.0 * n**4)
    upper = (n**4 + 9.0 * n**3 + 2.0 * n**2 - 9.0 * n + 4.0) / (108.0 * n**4)
    return lower, upper


def kirchhoff_hex_bounds(n: int) -> tuple[float, float]:
    """Polynomial bounds enclosing Kf of unit-length H(n, n)."""
    lower = 2.0 * n * (n + 1) ** 2 * (2 * n + 3) / 3.0 + (n + 1) ** 2 / 3.0
    upper = n * (n + 1) ** 2 * (n + 2) * (n + 3) / 3.0 + (n + 1) ** 2 / 3.0
    return lower, upper


def lattice_integral(resolution: int = 512) -> float:
    """Midpoint-grid mean of 3/(3 - cos x - cos y - cos(x+y)) on [0,2pi]^2.

    The grid is offset half a cell so the zero of the denominator at the
    origin is never sampled.  Note that the zero is quadratic, so the
    integrand behaves like 1/(x^2 + xy + y^2) near the origin and the grid
    mean grows logarithmically in the resolution instead of converging;
    the published reference value 5.4661 is therefore not reachable by any
    resolution of this quadrature (see the acceptance suite).
    """
    if resolution < 64:
        raise ParameterOutOfRange(f"resolution must be >= 64, got {resolution}")
    x = (np.arange(resolution) + 0.5) * 2.0 * np.pi / resolution
    X, Y = np.meshgrid(x, x, indexing="ij")
    vals = 3.0 / (3.0 - np.cos(X) - np.cos(Y) - np.cos(X + Y))
    return float(vals.mean())


def tau_hex_approx(n: int) -> float:
    """Published large-n approximation of tau(H^N(n-1, n-1))."""
    if n < 2:
        raise ParameterOutOfRange(f"need n >= 2, got {n}")
    return (1.0 + 1.0 / n**2) ** 2 / 108.0 + LATTICE_INTEGRAL_REFERENCE / (
        6.0 * n**2
    )
