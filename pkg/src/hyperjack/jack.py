"""Jack P and Q polynomials at an exact rational parameter.

``P_lambda`` is built by Gram-Schmidt on the monomial basis, ordered by a
linear extension of dominance, against the alpha-deformed power-sum scalar
product.  Everything is computed in the power-sum basis (alphabet free) and
then specialized to ``N`` variables, so ``N`` may be smaller than the degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .exact import ParameterError, canon, constant_term_of_product, normalization_constant, vandermonde_power
from .partitions import Partition, conjugate, enumerate_partitions, z_lambda
from .symfunc import (
    MONOMIAL,
    POWERSUM,
    ShapeError,
    SymPoly,
    _powersum_expansion_of_m,
    convert,
    to_laurent,
)


class UnsupportedParameterError(ParameterError):
    """The requested parameter value has no exact Laurent-polynomial evaluation."""


@dataclass(frozen=True)
class JackParams:
    alpha: Fraction
    num_vars: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.num_vars < 1:
            raise ValueError("num_vars must be positive")


@dataclass(frozen=True)
class HookData:
    partition: Partition
    c: Fraction
    c_prime: Fraction


def hook_products(lam: Iterable[int], alpha) -> HookData:
    """``c_lambda(alpha)`` and ``c'_lambda(alpha)`` as products over the diagram's cells."""
    lam = Partition(lam)
    alpha = Fraction(alpha)
    conj = conjugate(lam)
    c = c_prime = Fraction(1)
    for i, j in lam.cells():
        arm, leg = lam[i - 1] - j, conj[j - 1] - i
        c *= alpha * arm + leg + 1
        c_prime *= alpha * (arm + 1) + leg
    return HookData(lam, canon(c), canon(c_prime))


def _inner(f: dict, g: dict, alpha: Fraction) -> Fraction:
    total = Fraction(0)
    for rho, a in f.items():
        b = g.get(rho)
        if b:
            total += a * b * z_lambda(rho) * alpha ** len(rho)
    return total


@lru_cache(maxsize=None)
def _jack_p_basis(d: int, alpha: Fraction) -> dict:
    """``{lambda: {rho: coeff}}``: every ``P_lambda``, ``|lambda| = d``, in power sums."""
    # increasing lexicographic order is a linear extension of dominance
    order = sorted(enumerate_partitions(d))
    m_in_p = _powersum_expansion_of_m(d)
    done: list[tuple[dict, Fraction]] = []
    basis = {}
    for lam in order:
        vec = dict(m_in_p[lam])
        for prev, norm in done:
            coef = _inner(vec, prev, alpha) / norm
            if coef:
                for rho, b in prev.items():
                    vec[rho] = vec.get(rho, 0) - coef * b
        vec = {rho: canon(c) for rho, c in vec.items() if c}
        done.append((vec, _inner(vec, vec, alpha)))
        basis[lam] = vec
    return basis


def jack_P_powersum(lam: Iterable[int], alpha, num_vars: int | None = None) -> SymPoly:
    """``P_lambda^{(alpha)}`` in the power-sum basis."""
    lam = Partition(lam)
    n = num_vars if num_vars is not None else max(lam.weight, 1)
    return SymPoly(n, POWERSUM, _jack_p_basis(lam.weight, Fraction(alpha))[lam])


def jack_P(lam: Iterable[int], params: JackParams) -> SymPoly:
    """``P_lambda^{(alpha)}(x_1..x_N)`` in the monomial basis, monic in ``m_lambda``."""
    lam = Partition(lam)
    if len(lam) > params.num_vars:
        raise ShapeError(f"{lam} has more than {params.num_vars} parts")
    return convert(jack_P_powersum(lam, params.alpha, params.num_vars), MONOMIAL)


def jack_Q(lam: Iterable[int], params: JackParams) -> SymPoly:
    """``Q_lambda = (c_lambda / c'_lambda) P_lambda``."""
    hook = hook_products(lam, params.alpha)
    return jack_P(lam, params) * (Fraction(hook.c) / hook.c_prime)


def jack_Q_powersum(lam: Iterable[int], alpha, num_vars: int | None = None) -> SymPoly:
    hook = hook_products(lam, alpha)
    return jack_P_powersum(lam, alpha, num_vars) * (Fraction(hook.c) / hook.c_prime)


def one_row_g(r: int, alpha, num_vars: int) -> SymPoly:
    """Coefficient of ``z^r`` in ``prod_i (1 - x_i z)^{-1/alpha}``, monomial basis.

    Each factor is a generalized binomial series whose ``z^k`` coefficient is
    ``x_i^k (1/alpha)_k / k!``; the coefficient of ``m_mu`` in the product is
    the product of those numbers over the parts of ``mu``.
    """
    if r < 0:
        return SymPoly.zero(num_vars)
    beta = 1 / Fraction(alpha)
    binom = [Fraction(1)]
    for k in range(1, r + 1):
        binom.append(binom[-1] * (beta + k - 1) / k)
    coeffs = {}
    for mu in enumerate_partitions(r, num_vars):
        c = Fraction(1)
        for part in mu:
            c *= binom[part]
        coeffs[mu] = c
    return SymPoly(num_vars, MONOMIAL, coeffs)


def second_scalar_product(f: SymPoly, g: SymPoly, n: int, m: int) -> Fraction:
    """Torus scalar product at ``alpha = 1/m``:

    ``(1/n!) CT( f(z) g(1/z) |V(z)|^{2m} )`` for symmetric polynomials in ``n`` variables.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise UnsupportedParameterError(
            f"2/alpha must be an even positive integer; got m={m!r}"
        )
    if f.num_vars != n or g.num_vars != n:
        raise ValueError("f and g must be polynomials in exactly n variables")
    integrand = to_laurent(f) * to_laurent(g).invert_vars()
    ct = constant_term_of_product(integrand, vandermonde_power(n, m))
    return canon(Fraction(ct) / math.factorial(n))


def second_orthogonality_value(lam: Iterable[int], n: int, alpha) -> Fraction:
    """Diagonal value of the torus scalar product ``<P_lambda, Q_lambda>'_{n,alpha}``.

    Only ``alpha = 1/m`` is supported, where the normalization is ``(mn)!/(n!(m!)^n)``.
    """
    lam = Partition(lam)
    alpha = Fraction(alpha)
    inv = 1 / alpha
    if inv.denominator != 1:
        raise UnsupportedParameterError("alpha must be 1/m for an integer m")
    value = Fraction(normalization_constant(n, int(inv)))
    for i, j in lam.cells():
        value *= (n + (j - 1) * alpha - i + 1) / (n + j * alpha - i)
    return canon(value)


def omega_alpha(f: SymPoly, alpha) -> SymPoly:
    """Algebra map ``p_r -> (-1)^{r-1} alpha p_r``; result in the power-sum basis."""
    alpha = Fraction(alpha)
    fp = convert(f, POWERSUM)
    out = {}
    for lam, c in fp.coeffs.items():
        sign = -1 if (lam.weight - len(lam)) % 2 else 1
        out[lam] = c * sign * alpha ** len(lam)
    return SymPoly(fp.num_vars, POWERSUM, out)


def expand_in_jack_Q(f: SymPoly, alpha) -> dict:
    """Coefficients of ``f`` (in ``N`` variables) on ``Q_lambda^{(alpha)}``, ``len(lambda) <= N``.

    Uses unitriangularity of ``P`` on monomials: peel off the largest
    monomial, subtract the matching ``P_lambda``, repeat.
    """
    n = f.num_vars
    rest = dict(convert(f, MONOMIAL).coeffs)
    out = {}
    while rest:
        lam = max(rest)  # lexicographically largest: never dominated by a remaining term
        a = rest[lam]
        p_lam = jack_P(lam, JackParams(alpha, n))
        for mu, c in p_lam.coeffs.items():
            rest[mu] = rest.get(mu, 0) - a * c
            if not rest[mu]:
                del rest[mu]
        hook = hook_products(lam, alpha)
        out[lam] = canon(a * Fraction(hook.c_prime) / hook.c)
    return out
