"""Toeplitz hyperdeterminants.

Two evaluation paths are kept apart.  :class:`ExactSymbol` carries finitely
many exact Fourier coefficients ``d(k)`` and everything computed from it is
exact.  :class:`ExpSymbol` describes ``f = exp(sum c(k) z^k)`` with float
``c(k)``; its ``d(k)`` are obtained by FFT and everything downstream is float.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

import numpy as np

from .exact import (
    LaurentPoly,
    ParameterError,
    canon,
    constant_term_of_product,
    is_scalar,
    normalization_constant,
    parse_rational,
    vandermonde_power,
)
from .hyper import AlternatingArray, HyperArray, hdet, hdet_numeric, hpf
from .jack import expand_in_jack_Q
from .partitions import enumerate_partitions, rectangle
from .symfunc import MONOMIAL, SymPoly


class NumericError(ArithmeticError):
    """A float computation did not reach its configured tolerance."""


# symbols ----------------------------------------------------------------------


@dataclass(frozen=True)
class ExactSymbol:
    """Finitely supported Laurent symbol ``f(z) = sum d(k) z^k``.

    Coefficients are usually rationals, but any ring element works; the
    symbolic tests use polynomial indeterminates as ``d(k)``.
    """

    coeffs: Mapping[int, object]

    def __post_init__(self):
        clean = {}
        for k, v in dict(self.coeffs).items():
            v = canon(v) if is_scalar(v) else v
            if not (is_scalar(v) and v == 0):
                clean[int(k)] = v
        object.__setattr__(self, "coeffs", clean)

    def d(self, k: int):
        return self.coeffs.get(k, 0)

    @property
    def support(self) -> tuple[int, int]:
        if not self.coeffs:
            return (0, 0)
        return (min(self.coeffs), max(self.coeffs))

    def times_power(self, j: int) -> "ExactSymbol":
        """The symbol ``z^j f(z)``."""
        return ExactSymbol({k + j: v for k, v in self.coeffs.items()})

    def to_laurent(self, var: int = 0, num_vars: int = 1) -> LaurentPoly:
        p = LaurentPoly.zero(num_vars)
        for k, v in self.coeffs.items():
            if not is_scalar(v):
                raise TypeError("only rational symbols have a Laurent-polynomial form")
            p = p + LaurentPoly.var(var, num_vars, k) * v
        return p

    def to_json(self) -> dict:
        from .hyper import element_to_json

        return {"kind": "laurent", "d": {str(k): element_to_json(v) for k, v in sorted(self.coeffs.items())}}


@dataclass(frozen=True)
class ExpSymbol:
    """``f(z) = exp(sum c(k) z^k)`` with finitely many float ``c(k)``."""

    c: Mapping[int, complex]

    def __post_init__(self):
        object.__setattr__(self, "c", {int(k): v for k, v in dict(self.c).items() if v != 0})

    @property
    def is_real(self) -> bool:
        return all(isinstance(v, (int, float)) or v.imag == 0 for v in self.c.values())

    def to_json(self) -> dict:
        return {"kind": "exp", "c": {str(k): _float_json(v) for k, v in sorted(self.c.items())}}


FourierSymbol = Union[ExactSymbol, ExpSymbol]


@dataclass(frozen=True)
class ToeplitzSpec:
    symbol: FourierSymbol
    n: int
    m: int
    shift: int = 0

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ParameterError("need n >= 1 and m >= 1")

    @property
    def window(self) -> int:
        """Largest ``|k|`` such that ``d(k)`` can enter the array."""
        return (self.n - 1) * self.m + abs(self.shift)


def _float_json(v):
    v = complex(v)
    return v.real if v.imag == 0 else {"re": v.real, "im": v.imag}


_KEY = re.compile(r"^\s*(?:[dc]\(\s*(-?\d+)\s*\)|(-?\d+))\s*=\s*(.+?)\s*$")


def _parse_number(raw: str) -> complex:
    try:
        return complex(float(parse_rational(raw)))
    except (ValueError, ZeroDivisionError):
        return complex(raw.replace(" ", ""))


def parse_symbol(text: str) -> FourierSymbol:
    """Parse ``laurent:0=1,d(-1)=1/2`` or ``exp:c(1)=0.5,-1=0.5``."""
    kind, _, body = text.partition(":")
    kind = kind.strip().lower()
    if kind not in ("laurent", "exp"):
        raise ValueError(f"symbol must start with 'laurent:' or 'exp:', got {text!r}")
    values = {}
    for item in filter(None, (s.strip() for s in body.split(","))):
        match = _KEY.match(item)
        if not match:
            raise ValueError(f"cannot parse symbol coefficient {item!r}")
        k = int(match.group(1) if match.group(1) is not None else match.group(2))
        if k in values:
            raise ValueError(f"coefficient {k} given twice")
        raw = match.group(3)
        values[k] = parse_rational(raw) if kind == "laurent" else _parse_number(raw)
    if kind == "laurent":
        return ExactSymbol(values)
    return ExpSymbol({k: (v.real if v.imag == 0 else v) for k, v in values.items()})


# exact path -------------------------------------------------------------------


def _index_sum(idx, m):
    return sum(idx[:m]) - sum(idx[m:])


def toeplitz_array(spec: ToeplitzSpec, d=None) -> HyperArray:
    """Array ``d(i_1+...+i_m - i_{m+1}-...-i_{2m} + shift)`` of order ``2m``, side ``n``.

    ``d`` defaults to the exact coefficients of the symbol; pass a mapping to
    use numerically obtained ones.
    """
    m, a = spec.m, spec.shift
    if d is None:
        if not isinstance(spec.symbol, ExactSymbol):
            raise TypeError("pass numeric Fourier coefficients for an exponential symbol")
        get = spec.symbol.d
    else:
        get = lambda k: d.get(k, 0)
    return HyperArray.from_function(2 * m, spec.n, lambda *idx: get(_index_sum(idx, m) + a))


def toeplitz_hdet(spec: ToeplitzSpec, method: str = "fixed", **fourier_options):
    """``D_{n;a}^{[2m]}(f)``: exact for Laurent symbols, float for exponential ones."""
    if isinstance(spec.symbol, ExactSymbol):
        return hdet(toeplitz_array(spec), method=method)
    coeffs = fourier_coeffs(spec.symbol, spec.window, **fourier_options).coeffs
    arr = toeplitz_array(spec, coeffs).to_numpy(complex if not spec.symbol.is_real else float)
    return hdet_numeric(arr)


def normalized_toeplitz_hdet(spec: ToeplitzSpec, **kwargs):
    """``D / D(1)`` where ``D(1) = (mn)!/(n!(m!)^n)``."""
    value = toeplitz_hdet(spec, **kwargs)
    norm = normalization_constant(spec.n, spec.m)
    if isinstance(spec.symbol, ExactSymbol):
        return canon(value * Fraction(1, norm)) if is_scalar(value) else value * Fraction(1, norm)
    return value / norm


def heine_szego_oracle(spec: ToeplitzSpec):
    """``(1/n!) CT( prod_j f(z_j) |V(z)|^{2m} )`` for a rational Laurent symbol."""
    if not isinstance(spec.symbol, ExactSymbol):
        raise ParameterError("the constant-term oracle needs an exact Laurent symbol")
    sym = spec.symbol.times_power(-spec.shift)
    n = spec.n
    prod = LaurentPoly.constant(1, n)
    for j in range(n):
        prod = prod * sym.to_laurent(j, n)
    ct = constant_term_of_product(prod, vandermonde_power(n, spec.m))
    return canon(Fraction(ct) / math.factorial(n))


def toeplitz_hpf_array(spec: ToeplitzSpec) -> AlternatingArray:
    """Side-``2n`` alternating array whose hyperpfaffian is the order-``2m`` Toeplitz hdet.

    Needs ``m`` even; with ``k = m/2`` the entries are
    ``prod_s (i_{2s} - i_{2s-1}) * d((2n+1)k - sum(i) + shift)``.
    """
    if spec.m % 2:
        raise ParameterError(f"order {2 * spec.m} is not divisible by 4")
    if not isinstance(spec.symbol, ExactSymbol):
        raise ParameterError("the hyperpfaffian form is evaluated on exact symbols")
    k, n, a = spec.m // 2, spec.n, spec.shift
    d = spec.symbol.d

    def entry(*idx):
        weight = 1
        for s in range(k):
            weight *= idx[2 * s + 1] - idx[2 * s]
        if weight == 0:
            return d(0) * 0
        return d((2 * n + 1) * k - sum(idx) + a) * weight

    return AlternatingArray.from_function(2 * k, 2 * n, entry)


def toeplitz_hpf_form(spec: ToeplitzSpec, method: str = "fixed"):
    return hpf(toeplitz_hpf_array(spec), method=method)


# Jack-coefficient path ----------------------------------------------------------


def symbol_generating_polynomial(symbol: ExactSymbol, n: int, R: int) -> SymPoly:
    """Degree-``nR`` part of ``prod_k x_k^R F_R(x_k)`` in ``n`` variables, monomial basis.

    ``F_R`` keeps the coefficients with ``k >= -R``.
    """
    a = lambda j: symbol.d(j - R)
    coeffs = {}
    for mu in enumerate_partitions(n * R, n):
        c = 1
        for part in mu.padded(n):
            c = c * a(part)
            if is_scalar(c) and c == 0:
                break
        if not (is_scalar(c) and c == 0):
            coeffs[mu] = c
    return SymPoly(n, MONOMIAL, coeffs)


def gamma_coefficient(symbol: ExactSymbol, n: int, m: int, R: int):
    """Coefficient of ``Q_{(R^n)}^{(1/m)}`` in the Jack expansion of the degree-``nR`` part."""
    lo, _ = symbol.support
    if R < max(0, -lo):
        raise ParameterError(f"R={R} drops coefficients below z^{-R}; need R >= {max(0, -lo)}")
    s = symbol_generating_polynomial(symbol, n, R)
    if s.is_zero():
        return 0
    expansion = expand_in_jack_Q(s, Fraction(1, m))
    return expansion.get(rectangle(R, n), 0)


def gamma_to_normalized(gamma, n: int, m: int, R: int):
    """``gamma * prod_{i<=n} prod_{j<=R} (im+j-1)/((i-1)m+j)``."""
    factor = Fraction(1)
    for i in range(1, n + 1):
        for j in range(1, R + 1):
            factor *= Fraction(i * m + j - 1, (i - 1) * m + j)
    return canon(gamma * factor)


def normalized_from_gamma(symbol: ExactSymbol, n: int, m: int, R: int | None = None):
    if R is None:
        R = max(0, -symbol.support[0])
    return gamma_to_normalized(gamma_coefficient(symbol, n, m, R), n, m, R)


# closed-form examples -----------------------------------------------------------


def power_minus_inverse_symbol(a: int) -> ExactSymbol:
    """``z^a - z^{-1}``."""
    if a < 1:
        raise ParameterError("a must be a positive integer")
    return ExactSymbol({a: 1, -1: -1})


def power_minus_inverse_closed_form(a: int, n: int, m: int):
    if n % (a + 1):
        return 0
    value = Fraction(1)
    for i in range(n // (a + 1), n):
        value *= Fraction(i * m + m, i * m + 1)
    return canon(value)


def geometric_symbol(s, n: int, m: int, R: int = 1) -> ExactSymbol:
    """``{s z (1 - s z)}^{-1} = sum_{k >= -1} s^k z^k`` cut at ``k <= (n-1)m + R``."""
    s = Fraction(s)
    if s == 0:
        raise ParameterError("s must be nonzero")
    return ExactSymbol({k: s**k for k in range(-1, (n - 1) * m + R + 1)})


def geometric_closed_form(n: int, m: int):
    value = Fraction((-1) ** (n - 1))
    for i in range(1, n):
        value *= Fraction(i * m - 1, i * m + 1)
    return canon(value)


def exponential_symbol(n: int, m: int, R: int = 1) -> ExactSymbol:
    """``z^{-1} e^z = sum_{k >= -1} z^k/(k+1)!`` cut at ``k <= (n-1)m + R``."""
    return ExactSymbol({k: Fraction(1, math.factorial(k + 1)) for k in range(-1, (n - 1) * m + R + 1)})


def exponential_closed_form(n: int, m: int):
    value = Fraction(1)
    for i in range(1, n):
        value /= i * m + 1
    return canon(value)


# float path -------------------------------------------------------------------


@dataclass
class FourierResult:
    coeffs: dict
    grid: int
    error: float
    atol: float


def _dft(symbol: ExpSymbol, window: int, grid: int, real: bool) -> dict:
    theta = 2 * np.pi * np.arange(grid) / grid
    log_f = np.zeros(grid, dtype=complex)
    for k, ck in symbol.c.items():
        log_f += ck * np.exp(1j * k * theta)
    coeffs = np.fft.fft(np.exp(log_f)) / grid
    out = {}
    for k in range(-window, window + 1):
        v = coeffs[k % grid]
        out[k] = float(v.real) if real else complex(v)
    return out


def fourier_coeffs(
    symbol: ExpSymbol, window: int, grid: int | None = None, atol: float = 1e-12
) -> FourierResult:
    """``d(k)`` for ``|k| <= window`` by sampling ``f`` on a uniform grid.

    The error estimate is the largest change under grid doubling; the grid is
    doubled at most twice before giving up.
    """
    if window < 0:
        raise ValueError("window must be non-negative")
    if grid is None:
        spread = max((abs(k) for k in symbol.c), default=0)
        grid = 64
        while grid < 4 * max(window, spread, 1):
            grid *= 2
    if grid & (grid - 1) or grid < 4 * window:
        raise ValueError(f"grid must be a power of two >= 4*window, got {grid}")
    real = symbol.is_real
    coarse = _dft(symbol, window, grid, real)
    for _ in range(2):
        grid *= 2
        fine = _dft(symbol, window, grid, real)
        error = max(abs(fine[k] - coarse[k]) for k in fine)
        if error <= atol:
            return FourierResult(fine, grid, error, atol)
        coarse = fine
    raise NumericError(f"Fourier coefficients changed by {error:.3e} > {atol:.1e} after doubling twice")


def szego_exponent(c: Mapping[int, complex], m: int) -> complex:
    """``(1/m) sum_{k >= 1} k c(k) c(-k)``."""
    total = sum(k * c[k] * c.get(-k, 0) for k in c if k > 0)
    return total / m


def szego_prediction(c: Mapping[int, complex], n: int, m: int):
    """``exp(c(0) n + (1/m) sum_{k>=1} k c(k) c(-k))``."""
    value = cmath.exp(c.get(0, 0) * n + szego_exponent(c, m))
    return value.real if value.imag == 0 else value


@dataclass
class SzegoRow:
    n: int
    normalized: float
    prediction: float
    log_gap: float


@dataclass
class SzegoTrend:
    m: int
    c: dict
    rows: list = field(default_factory=list)
    atol: float = 1e-12
    fourier_error: float = 0.0
    fourier_grid: int = 0

    @property
    def gaps(self) -> list:
        return [r.log_gap for r in self.rows]

    @property
    def nonincreasing(self) -> bool:
        """Each gap is at most the previous one, allowing ``atol`` of float noise."""
        g = self.gaps
        return all(b <= a + self.atol for a, b in zip(g, g[1:]))

    @property
    def decreasing(self) -> bool:
        g = self.gaps
        return all(b < a for a, b in zip(g, g[1:]))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "c": {str(k): _float_json(v) for k, v in sorted(self.c.items())},
            "atol": self.atol,
            "fourier_error": self.fourier_error,
            "fourier_grid": self.fourier_grid,
            "nonincreasing": self.nonincreasing,
            "rows": [
                {
                    "n": r.n,
                    "normalized": _float_json(r.normalized),
                    "prediction": _float_json(r.prediction),
                    "log_gap": r.log_gap,
                }
                for r in self.rows
            ],
        }


def szego_trend(c: Mapping[int, complex], m: int, ns, atol: float = 1e-12, fourier_atol: float = 1e-12) -> SzegoTrend:
    """``|log D^_n - log prediction_n|`` for each ``n`` in ``ns``.

    ``ns`` may also be an int, meaning ``1..ns``.
    """
    if isinstance(ns, int):
        ns = range(1, ns + 1)
    ns = list(ns)
    symbol = ExpSymbol(c)
    window = (max(ns) - 1) * m
    fourier = fourier_coeffs(symbol, window, atol=fourier_atol)
    report = SzegoTrend(m, dict(symbol.c), atol=atol, fourier_error=fourier.error, fourier_grid=fourier.grid)
    for n in ns:
        spec = ToeplitzSpec(symbol, n, m)
        dtype = float if symbol.is_real else complex
        arr = toeplitz_array(spec, fourier.coeffs).to_numpy(dtype)
        value = hdet_numeric(arr) / normalization_constant(n, m)
        pred = szego_prediction(symbol.c, n, m)
        gap = abs(cmath.log(complex(value)) - cmath.log(complex(pred)))
        report.rows.append(SzegoRow(n, value, pred, gap))
    return report


def zeta(s: float, terms: int = 20) -> float:
    """Riemann zeta for real ``s > 1``: direct sum plus an Euler-Maclaurin tail."""
    if s <= 1:
        raise ValueError("zeta is implemented for s > 1 only")
    N = terms
    head = sum(k**-s for k in range(1, N))
    tail = N ** (1 - s) / (s - 1) + 0.5 * N**-s
    # Bernoulli numbers B_2, B_4, ..., B_12
    bernoulli = [1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730]
    rising = s  # s (s+1) ... (s+2j-2)
    for j, b in enumerate(bernoulli, start=1):
        tail += b / math.factorial(2 * j) * rising * N ** (-s - 2 * j + 1)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return head + tail


def bessel_exponents(x: float) -> dict:
    """``f = e^{x(z - 1/z)}``."""
    return {1: x, -1: -x}


def bessel_limit(x: float, m: int) -> float:
    return math.exp(-x * x / m)


def binomial_exponents(t, s, w1, w2, terms: int) -> dict:
    """``f = (1+tz)^{w1} (1+s/z)^{w2}``, log expanded to ``|k| <= terms``."""
    c = {}
    for k in range(1, terms + 1):
        c[k] = w1 * (-1) ** (k + 1) * t**k / k
        c[-k] = w2 * (-1) ** (k + 1) * s**k / k
    return c


def binomial_limit(t, s, w1, w2, m: int):
    return (1 - s * t) ** (-w1 * w2 / m)


def zeta_exponents(x: float, terms: int) -> dict:
    """``c(k) = c(-k) = |k|^{-1-x}`` for ``1 <= |k| <= terms``."""
    c = {}
    for k in range(1, terms + 1):
        c[k] = c[-k] = k ** (-1 - x)
    return c


def zeta_limit(x: float, m: int) -> float:
    return math.exp(zeta(1 + 2 * x) / m)
