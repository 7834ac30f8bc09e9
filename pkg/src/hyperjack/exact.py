"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction` (ints are accepted wherever a
rational is expected).  :class:`LaurentPoly` is a sparse multivariate Laurent
polynomial with rational coefficients; the normalized Haar integral of a
Laurent polynomial over the torus is its constant term, which is how every
torus integral in this package is evaluated.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from numbers import Rational as _RationalABC
from typing import Iterable, Iterator, Mapping

Rational = Fraction

# exponents are machine-width in spirit; anything beyond this is a bug upstream
MAX_EXPONENT = 2**31 - 1


class DimensionError(ValueError):
    """Operands live in polynomial rings with different numbers of variables."""


class ParameterError(ValueError):
    """A parameter lies outside the range an operation supports."""


class DivisionError(ArithmeticError):
    """An exact division left a nonzero remainder."""


def is_scalar(x) -> bool:
    return isinstance(x, _RationalABC)


def canon(c):
    """Return ``c`` as an int when integral, otherwise as a reduced Fraction."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal.  Floats are refused."""
    text = text.strip()
    if any(ch in text for ch in ".eE"):
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


def rational_to_json(c) -> dict:
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def rational_from_json(obj: Mapping) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def _check_exp(e: tuple) -> tuple:
    for a in e:
        if abs(a) > MAX_EXPONENT:
            raise OverflowError(f"exponent {a} out of range")
    return e


class LaurentPoly:
    """Sparse Laurent polynomial in ``num_vars`` variables over the rationals.

    ``terms`` maps exponent tuples (entries may be negative) to nonzero
    coefficients.  Instances are treated as immutable; every operation returns
    a new polynomial in canonical form, so ``==`` is structural equality.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple, object] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        self.num_vars = num_vars
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(a) for a in e)
                if len(e) != num_vars:
                    raise DimensionError(f"exponent {e} has length {len(e)}, expected {num_vars}")
                c = canon(c)
                if c:
                    clean[_check_exp(e)] = clean.get(e, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean

    @classmethod
    def _raw(cls, num_vars: int, terms: dict) -> "LaurentPoly":
        # trusted constructor: keys already valid tuples, zeros may be present
        p = cls.__new__(cls)
        p.num_vars = num_vars
        p.terms = {e: canon(c) for e, c in terms.items() if c}
        return p

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "LaurentPoly":
        return cls._raw(num_vars, {})

    @classmethod
    def constant(cls, c, num_vars: int) -> "LaurentPoly":
        return cls._raw(num_vars, {(0,) * num_vars: c})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff=1) -> "LaurentPoly":
        e = tuple(int(a) for a in exponents)
        return cls._raw(len(e), {_check_exp(e): coeff})

    @classmethod
    def var(cls, i: int, num_vars: int, power: int = 1) -> "LaurentPoly":
        """The variable ``z_i`` (0-based) raised to ``power``."""
        e = [0] * num_vars
        e[i] = power
        return cls._raw(num_vars, {tuple(e): 1})

    # basic protocol -----------------------------------------------------

    def __repr__(self) -> str:
        if not self.terms:
            return f"LaurentPoly({self.num_vars}, 0)"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"z{i + 1}" if a == 1 else f"z{i + 1}^{a}" for i, a in enumerate(e) if a
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return f"LaurentPoly({self.num_vars}, {' + '.join(parts)})"

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        if is_scalar(other):
            return self.terms == ({(0,) * self.num_vars: canon(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def coefficient(self, exponents: Iterable[int]):
        return self.terms.get(tuple(exponents), 0)

    def is_zero(self) -> bool:
        return not self.terms

    # ring operations ----------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.num_vars != self.num_vars:
                raise DimensionError(
                    f"cannot combine polynomials in {self.num_vars} and {other.num_vars} variables"
                )
            return other
        if is_scalar(other):
            return LaurentPoly.constant(other, self.num_vars)
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly._raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if is_scalar(other):
            if not other:
                return LaurentPoly.zero(self.num_vars)
            return LaurentPoly._raw(self.num_vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "LaurentPoly", max_degree: int | None = None) -> "LaurentPoly":
        """Product, optionally dropping every term of total degree > ``max_degree``."""
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        if max_degree is None:
            for e1, c1 in b.items():
                for e2, c2 in a.items():
                    e = tuple([x + y for x, y in zip(e1, e2)])
                    out[e] = get(e, 0) + c1 * c2
        else:
            a_deg = [(e, c, sum(e)) for e, c in a.items()]
            for e1, c1 in b.items():
                d1 = sum(e1)
                for e2, c2, d2 in a_deg:
                    if d1 + d2 > max_degree:
                        continue
                    e = tuple([x + y for x, y in zip(e1, e2)])
                    out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.num_vars, out)

    def __pow__(self, k: int) -> "LaurentPoly":
        return self.pow(k)

    def pow(self, k: int, max_degree: int | None = None) -> "LaurentPoly":
        if k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = LaurentPoly.constant(1, self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, max_degree)
            k >>= 1
            if k:
                base = base.mul(base, max_degree)
        return result

    # structural operations -----------------------------------------------

    def invert_vars(self) -> "LaurentPoly":
        """Substitute ``z_i -> 1/z_i`` for every variable."""
        return LaurentPoly._raw(
            self.num_vars, {tuple(-a for a in e): c for e, c in self.terms.items()}
        )

    def constant_term(self):
        return self.terms.get((0,) * self.num_vars, 0)

    def permute_vars(self, perm: Iterable[int]) -> "LaurentPoly":
        """Rename ``z_i -> z_{perm[i]}`` (0-based)."""
        perm = tuple(perm)
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.num_vars
            for i, a in enumerate(e):
                new[perm[i]] = a
            out[tuple(new)] = c
        return LaurentPoly._raw(self.num_vars, out)

    def embed(self, num_vars: int, offset: int) -> "LaurentPoly":
        """Place this polynomial's variables at ``offset..`` inside a larger ring."""
        if offset + self.num_vars > num_vars:
            raise DimensionError("embedding does not fit")
        pre = (0,) * offset
        post = (0,) * (num_vars - offset - self.num_vars)
        return LaurentPoly._raw(num_vars, {pre + e + post: c for e, c in self.terms.items()})

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def homogeneous_component(self, degree: int) -> "LaurentPoly":
        return LaurentPoly._raw(
            self.num_vars, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def truncate(self, max_degree: int) -> "LaurentPoly":
        return LaurentPoly._raw(
            self.num_vars, {e: c for e, c in self.terms.items() if sum(e) <= max_degree}
        )

    def divide_by_difference(self, i: int, j: int) -> "LaurentPoly":
        """Exact quotient by ``z_i - z_j`` via synthetic division in ``z_i``.

        Raises :class:`DivisionError` if the remainder is nonzero.
        """
        if i == j:
            raise ValueError("cannot divide by z_i - z_i")
        # group coefficients by the exponent of z_i
        by_power: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1 :]
            by_power.setdefault(k, {})[rest] = c
        if not by_power:
            return LaurentPoly.zero(self.num_vars)
        lo, hi = min(by_power), max(by_power)
        quotient: dict = {}
        carry: dict = {}  # q_k, starting from q_{hi-1} = c_hi
        for k in range(hi, lo - 1, -1):
            # q_{k-1} = c_k + z_j * q_k
            nxt = dict(by_power.get(k, {}))
            for e, c in carry.items():
                e2 = e[:j] + (e[j] + 1,) + e[j + 1 :]
                nxt[e2] = nxt.get(e2, 0) + c
            nxt = {e: c for e, c in nxt.items() if c}
            if k == lo:
                if nxt:
                    raise DivisionError(f"z{i + 1} - z{j + 1} does not divide the polynomial")
                break
            for e, c in nxt.items():
                quotient[e[:i] + (k - 1,) + e[i + 1 :]] = c
            carry = nxt
        return LaurentPoly._raw(self.num_vars, quotient)

    def divide_by_vandermonde(self, variables: Iterable[int]) -> "LaurentPoly":
        """Exact quotient by ``prod_{a<b} (z_a - z_b)`` over the listed variables."""
        p = self
        for a, b in combinations(list(variables), 2):
            p = p.divide_by_difference(a, b)
        return p

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": self.num_vars,
            "terms": [
                {"exp": list(e), **rational_to_json(self.terms[e])}
                for e in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        n = int(obj["vars"])
        terms: dict = {}
        for t in obj["terms"]:
            e = tuple(int(a) for a in t["exp"])
            terms[e] = terms.get(e, 0) + rational_from_json(t)
        return cls(n, terms)


def constant_term(p: LaurentPoly):
    return p.constant_term()


def invert_vars(p: LaurentPoly) -> LaurentPoly:
    return p.invert_vars()


def constant_term_of_product(a: LaurentPoly, b: LaurentPoly):
    """``CT(a*b)`` without forming the product."""
    if a.num_vars != b.num_vars:
        raise DimensionError("mismatched number of variables")
    if len(a.terms) > len(b.terms):
        a, b = b, a
    bt = b.terms
    total = 0
    for e, c in a.terms.items():
        d = bt.get(tuple(-x for x in e))
        if d:
            total += c * d
    return canon(total)


def vandermonde(n: int, offset: int = 0, num_vars: int | None = None) -> LaurentPoly:
    """``V = prod_{i<j} (z_i - z_j)`` over variables ``offset..offset+n-1``."""
    total = n + offset if num_vars is None else num_vars
    p = LaurentPoly.constant(1, total)
    for i, j in combinations(range(offset, offset + n), 2):
        p = p * (LaurentPoly.var(i, total) - LaurentPoly.var(j, total))
    return p


def vandermonde_power(n: int, m: int) -> LaurentPoly:
    """``|V(z_1..z_n)|^{2m}`` on the torus, i.e. ``prod_{i<j} (z_i-z_j)^m (1/z_i-1/z_j)^m``."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    # each pair contributes (2 - z_i/z_j - z_j/z_i)^m
    p = LaurentPoly.constant(1, n)
    for i, j in combinations(range(n), 2):
        e_ij = [0] * n
        e_ij[i], e_ij[j] = 1, -1
        e_ji = [-a for a in e_ij]
        factor = LaurentPoly._raw(n, {(0,) * n: 2, tuple(e_ij): -1, tuple(e_ji): -1})
        p = p * factor.pow(m)
    return p


def normalization_constant(n: int, m: int) -> int:
    """``(mn)! / (n! (m!)^n)``: the value of the normalized torus integral of ``|V|^{2m}``."""
    return math.factorial(m * n) // (math.factorial(n) * math.factorial(m) ** n)
