"""Symmetric polynomials in the monomial and power-sum bases.

A :class:`SymPoly` is a symmetric polynomial in ``num_vars`` variables stored
as a map ``Partition -> coefficient`` in one of two bases:

* ``"m"``: monomial symmetric polynomials ``m_lambda`` (only ``len(lambda) <= N``);
* ``"p"``: power-sum products ``p_lambda``.

Power-sum data is alphabet independent, so products of symmetric functions
are formed there (``p_lambda * p_mu = p_{lambda cup mu}``).  Conversion to the
monomial basis is always possible; conversion back requires the degree to be
at most ``num_vars``, the range in which monomial data determines the
symmetric function.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping

from .exact import LaurentPoly, canon, is_scalar, rational_from_json, rational_to_json
from .partitions import Partition, enumerate_partitions, scale, z_lambda

MONOMIAL = "m"
POWERSUM = "p"
_BASES = (MONOMIAL, POWERSUM)


class StabilityError(ValueError):
    """Monomial data in too few variables cannot determine power-sum data."""


class ShapeError(ValueError):
    """A partition has more parts than there are variables."""


class SymPoly:
    __slots__ = ("num_vars", "basis", "coeffs")

    def __init__(self, num_vars: int, basis: str, coeffs: Mapping | None = None):
        if basis not in _BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        self.num_vars = num_vars
        self.basis = basis
        clean: dict = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if basis == MONOMIAL and len(lam) > num_vars:
                if c:
                    raise ShapeError(f"m_{list(lam)} needs more than {num_vars} variables")
                continue
            clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {lam: canon(c) for lam, c in clean.items() if c}

    @classmethod
    def zero(cls, num_vars: int, basis: str = MONOMIAL) -> "SymPoly":
        return cls(num_vars, basis)

    @classmethod
    def one(cls, num_vars: int, basis: str = MONOMIAL) -> "SymPoly":
        return cls(num_vars, basis, {Partition(): 1})

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"SymPoly(N={self.num_vars}, 0)"
        terms = " + ".join(
            f"{c}*{self.basis}{list(lam)}" for lam, c in sorted(self.coeffs.items(), reverse=True)
        )
        return f"SymPoly(N={self.num_vars}, {terms})"

    def coefficient(self, lam: Iterable[int]):
        return self.coeffs.get(Partition(lam), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[int]:
        return {lam.weight for lam in self.coeffs}

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def homogeneous_component(self, d: int) -> "SymPoly":
        return SymPoly(self.num_vars, self.basis, {l: c for l, c in self.coeffs.items() if l.weight == d})

    # basis handling -------------------------------------------------------

    def to_basis(self, basis: str) -> "SymPoly":
        return convert(self, basis)

    def with_num_vars(self, num_vars: int) -> "SymPoly":
        """Same symmetric function over a different alphabet size.

        Monomials with too many parts are dropped (setting variables to zero).
        Enlarging a monomial-basis polynomial is only meaningful when it came
        from a stable computation, so that case goes through power sums.
        """
        if self.basis == POWERSUM:
            return SymPoly(num_vars, POWERSUM, self.coeffs)
        if num_vars <= self.num_vars:
            return SymPoly(
                num_vars, MONOMIAL, {l: c for l, c in self.coeffs.items() if len(l) <= num_vars}
            )
        return convert(convert(self, POWERSUM).with_num_vars(num_vars), MONOMIAL)

    # arithmetic -------------------------------------------------------------

    def _same_space(self, other: "SymPoly") -> "SymPoly":
        if other.num_vars != self.num_vars:
            raise ValueError(f"alphabet sizes differ: {self.num_vars} vs {other.num_vars}")
        return other if other.basis == self.basis else convert(other, self.basis)

    def __add__(self, other):
        if is_scalar(other):
            other = SymPoly(self.num_vars, self.basis, {Partition(): other})
        if not isinstance(other, SymPoly):
            return NotImplemented
        other = self._same_space(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPoly(self.num_vars, self.basis, out)

    __radd__ = __add__

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.num_vars, self.basis, {l: -c for l, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return SymPoly(self.num_vars, self.basis, {l: c * other for l, c in self.coeffs.items()})
        if not isinstance(other, SymPoly):
            return NotImplemented
        if other.num_vars != self.num_vars:
            raise ValueError(f"alphabet sizes differ: {self.num_vars} vs {other.num_vars}")
        if self.basis == POWERSUM and other.basis == POWERSUM:
            out: dict = {}
            for l1, c1 in self.coeffs.items():
                for l2, c2 in other.coeffs.items():
                    lam = Partition(sorted(l1 + l2, reverse=True))
                    out[lam] = out.get(lam, 0) + c1 * c2
            return SymPoly(self.num_vars, POWERSUM, out)
        if max(self.degree, other.degree) <= self.num_vars and self.degree + other.degree <= self.num_vars:
            prod = convert(self, POWERSUM) * convert(other, POWERSUM)
            return convert(prod, self.basis)
        # outside the stable range: multiply as explicit polynomials
        n = self.num_vars
        prod = to_laurent(self, n) * to_laurent(other, n)
        return from_laurent(prod, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SymPoly":
        out = SymPoly.one(self.num_vars, self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if is_scalar(other):
            other = SymPoly(self.num_vars, self.basis, {Partition(): other})
        if not isinstance(other, SymPoly):
            return NotImplemented
        if self.num_vars != other.num_vars:
            return False
        if self.basis == other.basis == POWERSUM and self.degree <= self.num_vars and other.degree <= self.num_vars:
            return self.coeffs == other.coeffs
        return convert(self, MONOMIAL).coeffs == convert(other, MONOMIAL).coeffs

    def __hash__(self) -> int:
        m = convert(self, MONOMIAL)
        return hash((m.num_vars, frozenset(m.coeffs.items())))

    # serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": self.num_vars,
            "basis": self.basis,
            "coeffs": [
                {"part": list(lam), **rational_to_json(self.coeffs[lam])}
                for lam in sorted(self.coeffs, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "SymPoly":
        coeffs: dict = {}
        for t in obj["coeffs"]:
            lam = Partition(t["part"])
            coeffs[lam] = coeffs.get(lam, 0) + rational_from_json(t)
        return cls(int(obj["vars"]), obj["basis"], coeffs)


# transition matrices ----------------------------------------------------------


@lru_cache(maxsize=None)
def _monomial_expansion_of_p(lam: Partition) -> dict:
    """Coefficients of ``m_mu`` in ``p_lambda`` (alphabet independent integers).

    The coefficient of ``x^mu`` counts the ways to send each part of lambda to
    a variable so that the parts landing on variable ``i`` sum to ``mu_i``.
    """
    out = {}
    for mu in enumerate_partitions(lam.weight):
        count = _count_distributions(tuple(lam), tuple(mu))
        if count:
            out[mu] = count
    return out


@lru_cache(maxsize=None)
def _count_distributions(parts: tuple, capacity: tuple) -> int:
    if not parts:
        return int(all(c == 0 for c in capacity))
    first, rest = parts[0], parts[1:]
    total = 0
    for i, cap in enumerate(capacity):
        if cap >= first:
            total += _count_distributions(rest, capacity[:i] + (cap - first,) + capacity[i + 1 :])
    return total


@lru_cache(maxsize=None)
def _powersum_expansion_of_m(d: int) -> dict:
    """Inverse transition: ``m_mu`` as a combination of ``p_lambda`` for all ``mu |- d``."""
    parts = enumerate_partitions(d)
    index = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    # rows: p_lambda in terms of m_mu; solve K^T-style system by Gauss-Jordan on [K | I]
    mat = [[Fraction(0)] * size + [Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for lam in parts:
        for mu, c in _monomial_expansion_of_p(lam).items():
            mat[index[lam]][index[mu]] = Fraction(c)
    # we need X with K X = I where K[lam][mu]; then m_mu = sum_lam X[mu][lam] p_lam
    # since p = K m  =>  m = K^{-1} p
    for col in range(size):
        pivot = next(r for r in range(col, size) if mat[r][col] != 0)
        mat[col], mat[pivot] = mat[pivot], mat[col]
        pv = mat[col][col]
        mat[col] = [x / pv for x in mat[col]]
        for r in range(size):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
    out = {}
    for mu in parts:
        row = mat[index[mu]][size:]
        out[mu] = {lam: canon(row[index[lam]]) for lam in parts if row[index[lam]] != 0}
    return out


def convert(f: SymPoly, target_basis: str) -> SymPoly:
    """Re-express ``f`` in ``target_basis`` ("m" or "p")."""
    if target_basis not in _BASES:
        raise ValueError(f"unknown basis {target_basis!r}")
    if f.basis == target_basis:
        return f
    n = f.num_vars
    out: dict = {}
    if target_basis == MONOMIAL:
        for lam, c in f.coeffs.items():
            for mu, k in _monomial_expansion_of_p(lam).items():
                if len(mu) <= n:
                    out[mu] = out.get(mu, 0) + c * k
        return SymPoly(n, MONOMIAL, out)
    if f.degree > n:
        raise StabilityError(
            f"degree {f.degree} exceeds {n} variables; power-sum coefficients are not determined"
        )
    for mu, c in f.coeffs.items():
        for lam, k in _powersum_expansion_of_m(mu.weight)[mu].items():
            out[lam] = out.get(lam, 0) + c * k
    return SymPoly(n, POWERSUM, out)


# constructors --------------------------------------------------------------


def monomial(lam: Iterable[int], num_vars: int) -> SymPoly:
    return SymPoly(num_vars, MONOMIAL, {Partition(lam): 1})


def power_sum(lam: Iterable[int], num_vars: int) -> SymPoly:
    """``p_lambda`` in the monomial basis of ``num_vars`` variables."""
    return convert(SymPoly(num_vars, POWERSUM, {Partition(lam): 1}), MONOMIAL)


def complete_h(k: int, num_vars: int) -> SymPoly:
    """Complete homogeneous ``h_k``; zero for ``k < 0``."""
    if k < 0:
        return SymPoly.zero(num_vars)
    return SymPoly(num_vars, MONOMIAL, {mu: 1 for mu in enumerate_partitions(k, num_vars)})


def elementary_e(k: int, num_vars: int) -> SymPoly:
    """Elementary ``e_k``; zero for ``k < 0`` and for ``k > num_vars``."""
    if k < 0 or k > num_vars:
        return SymPoly.zero(num_vars)
    return SymPoly(num_vars, MONOMIAL, {Partition((1,) * k): 1})


def stable_powersum(f_builder, k: int, num_vars: int) -> SymPoly:
    """Power-sum form of a degree-``k`` family member built in enough variables."""
    big = max(num_vars, k, 1)
    return convert(f_builder(k, big), POWERSUM).with_num_vars(num_vars)


def to_laurent(f: SymPoly, num_vars: int | None = None, offset: int = 0) -> LaurentPoly:
    """Expand ``f`` as an explicit polynomial in its ``N`` variables.

    The variables are placed at ``offset..offset+N-1`` of a ring with
    ``num_vars`` variables (default ``N``).
    """
    n = f.num_vars
    total = n if num_vars is None else num_vars
    m = convert(f, MONOMIAL)
    terms: dict = {}
    pre, post = (0,) * offset, (0,) * (total - offset - n)
    for lam, c in m.coeffs.items():
        for e in set(permutations(lam.padded(n))):
            terms[pre + e + post] = c
    return LaurentPoly(total, terms)


def from_laurent(p: LaurentPoly, num_vars: int | None = None, check: bool = False) -> SymPoly:
    """Read off monomial-basis coefficients of a symmetric polynomial."""
    n = p.num_vars if num_vars is None else num_vars
    out = {}
    for e, c in p.terms.items():
        if any(a < 0 for a in e):
            raise ValueError("not a polynomial")
        if all(a >= b for a, b in zip(e, e[1:])):
            out[Partition(e)] = c
    f = SymPoly(n, MONOMIAL, out)
    if check and to_laurent(f) != p:
        raise ValueError("polynomial is not symmetric")
    return f


# Schur polynomials -------------------------------------------------------------


def _bialternant(lam: Partition, n: int) -> SymPoly:
    exps = [a + n - 1 - i for i, a in enumerate(lam.padded(n))]
    terms = {}
    for perm in permutations(range(n)):
        e = [0] * n
        for i, p in enumerate(perm):
            e[p] = exps[i]
        terms[tuple(e)] = _perm_sign(perm)
    alt = LaurentPoly(n, terms)
    return from_laurent(alt.divide_by_vandermonde(range(n)), n)


def _perm_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def _jacobi_trudi(lam: Partition, n: int) -> SymPoly:
    k = len(lam)
    if k == 0:
        return SymPoly.one(n)
    big = max(n, lam.weight, 1)
    h = {}

    def entry(r):
        if r not in h:
            h[r] = convert(complete_h(r, max(big, r)), POWERSUM).with_num_vars(big)
        return h[r]

    total = SymPoly.zero(big, POWERSUM)
    for perm in permutations(range(k)):
        term = SymPoly.one(big, POWERSUM)
        for i, j in enumerate(perm):
            term = term * entry(lam[i] - i + j)
            if term.is_zero():
                break
        total = total + term * _perm_sign(perm)
    return convert(total, MONOMIAL).with_num_vars(n)


def schur(lam: Iterable[int], num_vars: int, method: str = "bialternant") -> SymPoly:
    """Schur polynomial ``s_lambda(x_1..x_N)`` in the monomial basis.

    ``method="bialternant"`` divides ``a_{lambda+delta}`` by the Vandermonde
    product exactly; ``method="jacobi_trudi"`` expands ``det(h_{lambda_i-i+j})``.
    """
    lam = Partition(lam)
    if len(lam) > num_vars:
        raise ShapeError(f"{lam} has more than {num_vars} parts")
    if method == "bialternant":
        return _bialternant(lam, num_vars)
    if method == "jacobi_trudi":
        return _jacobi_trudi(lam, num_vars)
    raise ValueError(f"unknown method {method!r}")


# scalar product and plethysm -----------------------------------------------------


def scalar_product_alpha(f: SymPoly, g: SymPoly, alpha) -> Fraction:
    """``<p_lambda, p_mu>_alpha = delta z_lambda alpha^{l(lambda)}``, extended bilinearly."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    fp, gp = convert(f, POWERSUM), convert(g, POWERSUM)
    total = Fraction(0)
    for lam, c in fp.coeffs.items():
        d = gp.coeffs.get(lam)
        if d:
            total += c * d * z_lambda(lam) * alpha ** len(lam)
    return canon(total)


def plethysm_power(lam: Iterable[int], k: int) -> Partition:
    """Index of ``p_lambda o p_k = p_{k lambda}``."""
    if k < 1:
        raise ValueError("k must be positive")
    return scale(lam, k)


def plethysm_with_power_sum(f: SymPoly, k: int) -> SymPoly:
    """``f o p_k`` for ``f`` given in (or convertible to) the power-sum basis."""
    fp = convert(f, POWERSUM)
    return SymPoly(fp.num_vars, POWERSUM, {plethysm_power(l, k): c for l, c in fp.coeffs.items()})
