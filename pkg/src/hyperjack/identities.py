"""Verification suites: both sides of each summation and Jacobi-Trudi identity, compared exactly.

Finite-alphabet identities are expanded as explicit polynomials and the
Vandermonde denominators are removed by exact division.  Identities in
countably many variables live in a tensor product of power-sum algebras,
one factor per alphabet, which does not depend on alphabet size.
Whenever an infinite series is involved, one degree bound ``D`` truncates
every expansion and the sides are compared degree by degree up to ``D``.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .exact import DivisionError, LaurentPoly, ParameterError, canon, is_scalar, normalization_constant
from .hyper import AlternatingArray, HyperArray, hdet, hpf
from .jack import JackParams, jack_P, jack_Q, omega_alpha, one_row_g
from .partitions import Partition, enumerate_partitions, partitions_up_to, rectangle
from .symfunc import MONOMIAL, POWERSUM, SymPoly, complete_h, convert, elementary_e, schur, to_laurent


# reports --------------------------------------------------------------------------


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]


@dataclass
class VerificationReport:
    suite: str
    params: dict
    equal: bool
    degrees: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    lhs_digest: str = ""
    rhs_digest: str = ""
    difference: object = None
    error: str | None = None
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "equal": self.equal,
            "degrees": {str(k): v for k, v in sorted(self.degrees.items())},
            "checks": self.checks,
            "lhs_digest": self.lhs_digest,
            "rhs_digest": self.rhs_digest,
            "difference": self.difference,
            "error": self.error,
            "notes": self.notes,
        }


@dataclass(frozen=True)
class AlphabetSet:
    """``count`` alphabets of ``size`` variables each; ``size=None`` means countably many."""

    count: int
    size: int | None
    degree_bound: int | None = None

    def offset(self, i: int) -> int:
        if self.size is None:
            raise ValueError("infinite alphabets have no variable offsets")
        return i * self.size

    @property
    def num_vars(self) -> int:
        if self.size is None:
            raise ValueError("infinite alphabets have no variable count")
        return self.count * self.size

    def variables(self, i: int) -> range:
        return range(self.offset(i), self.offset(i) + self.size)


# rings used by the suites --------------------------------------------------------


class TruncatedPoly:
    """A :class:`LaurentPoly` whose products drop every term above a total degree."""

    __slots__ = ("poly", "bound")

    def __init__(self, poly: LaurentPoly, bound: int):
        self.poly = poly
        self.bound = bound

    def _lift(self, other):
        if isinstance(other, TruncatedPoly):
            return other.poly
        if is_scalar(other) or isinstance(other, LaurentPoly):
            return other
        raise TypeError(type(other).__name__)

    def __add__(self, other):
        return TruncatedPoly(self.poly + self._lift(other), self.bound)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPoly(-self.poly, self.bound)

    def __sub__(self, other):
        return TruncatedPoly(self.poly - self._lift(other), self.bound)

    def __rsub__(self, other):
        return TruncatedPoly(self._lift(other) - self.poly, self.bound)

    def __mul__(self, other):
        other = self._lift(other)
        if is_scalar(other):
            return TruncatedPoly(self.poly * other, self.bound)
        return TruncatedPoly(self.poly.mul(other, self.bound), self.bound)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.poly == self._lift(other)

    __hash__ = None


class TensorPowerSum:
    """Element of ``Sym^{(x1)} (x) ... (x) Sym^{(xk)}`` in the power-sum basis, truncated.

    Keys are tuples of partitions, one per alphabet; terms of total degree
    above ``bound`` are dropped on construction.
    """

    __slots__ = ("count", "bound", "coeffs")

    def __init__(self, count: int, bound: int, coeffs: Mapping | None = None):
        self.count = count
        self.bound = bound
        out = {}
        for key, c in (coeffs or {}).items():
            if c and sum(l.weight for l in key) <= bound:
                out[key] = out.get(key, 0) + c
        self.coeffs = {k: canon(c) for k, c in out.items() if c}

    @classmethod
    def constant(cls, c, count: int, bound: int):
        return cls(count, bound, {(Partition(),) * count: c})

    @classmethod
    def from_single(cls, f: SymPoly, slot: int, count: int, bound: int):
        fp = convert(f, POWERSUM)
        empty = (Partition(),) * count
        return cls(count, bound, {empty[:slot] + (lam,) + empty[slot + 1 :]: c for lam, c in fp.coeffs.items()})

    def _lift(self, other):
        if isinstance(other, TensorPowerSum):
            return other
        if is_scalar(other):
            return TensorPowerSum.constant(other, self.count, self.bound)
        raise TypeError(type(other).__name__)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TensorPowerSum(self.count, self.bound, out)

    __radd__ = __add__

    def __neg__(self):
        return TensorPowerSum(self.count, self.bound, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        bound = self.bound
        right = [(k, c, sum(l.weight for l in k)) for k, c in other.coeffs.items()]
        for k1, c1 in self.coeffs.items():
            d1 = sum(l.weight for l in k1)
            for k2, c2, d2 in right:
                if d1 + d2 > bound:
                    continue
                key = tuple(Partition(sorted(a + b, reverse=True)) for a, b in zip(k1, k2))
                out[key] = out.get(key, 0) + c1 * c2
        return TensorPowerSum(self.count, bound, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def homogeneous_component(self, d: int) -> "TensorPowerSum":
        return TensorPowerSum(
            self.count, self.bound, {k: c for k, c in self.coeffs.items() if sum(l.weight for l in k) == d}
        )

    def to_json(self) -> dict:
        return {
            "alphabets": self.count,
            "bound": self.bound,
            "terms": [
                {"parts": [list(l) for l in k], "num": str(Fraction(c).numerator), "den": str(Fraction(c).denominator)}
                for k, c in sorted(self.coeffs.items())
            ],
        }


@lru_cache(maxsize=None)
def _h_powersum(r: int) -> SymPoly:
    return convert(complete_h(r, max(r, 1)), POWERSUM)


@lru_cache(maxsize=None)
def _schur_powersum(lam: Partition) -> SymPoly:
    return convert(schur(lam, max(lam.weight, 1)), POWERSUM)


def _h_in_slot(r: int, slot: int, count: int, bound: int):
    if r < 0:
        return TensorPowerSum(count, bound)
    return TensorPowerSum.from_single(_h_powersum(r), slot, count, bound)


# comparison helpers -------------------------------------------------------------


def _laurent_compare(suite, params, lhs: LaurentPoly, rhs: LaurentPoly, max_degree=None, checks=None):
    degrees = sorted(lhs.total_degrees() | rhs.total_degrees())
    if max_degree is not None:
        degrees = range(max_degree + 1)
        lhs, rhs = lhs.truncate(max_degree), rhs.truncate(max_degree)
    per = {d: lhs.homogeneous_component(d) == rhs.homogeneous_component(d) for d in degrees}
    equal = lhs == rhs and all(per.values())
    checks = dict(checks or {})
    return VerificationReport(
        suite,
        params,
        equal and all(checks.values()),
        degrees=per,
        checks=checks,
        lhs_digest=_digest(lhs.to_json()),
        rhs_digest=_digest(rhs.to_json()),
        difference=None if equal else (lhs - rhs).to_json(),
    )


def _tensor_compare(suite, params, lhs: TensorPowerSum, rhs: TensorPowerSum, max_degree: int):
    per = {d: lhs.homogeneous_component(d) == rhs.homogeneous_component(d) for d in range(max_degree + 1)}
    equal = lhs == rhs and all(per.values())
    return VerificationReport(
        suite,
        params,
        equal,
        degrees=per,
        lhs_digest=_digest(lhs.to_json()),
        rhs_digest=_digest(rhs.to_json()),
        difference=None if equal else (lhs - rhs).to_json(),
    )


def _division_failure(suite, params, exc):
    return VerificationReport(suite, params, False, checks={"divisible": False}, error=str(exc))


def _schur_product_laurent(lam: Partition, alphabets: AlphabetSet) -> LaurentPoly:
    total = alphabets.num_vars
    out = LaurentPoly.constant(1, total)
    s = schur(lam, alphabets.size)
    for i in range(alphabets.count):
        out = out * to_laurent(s, total, alphabets.offset(i))
    return out


def _divide_vandermondes(p: LaurentPoly, alphabets: AlphabetSet) -> LaurentPoly:
    for i in range(alphabets.count):
        p = p.divide_by_vandermonde(alphabets.variables(i))
    return p


def _vandermonde_degree(alphabets: AlphabetSet) -> int:
    return alphabets.count * alphabets.size * (alphabets.size - 1) // 2


def _var(alphabets: AlphabetSet, alphabet: int, index: int, power: int = 1) -> LaurentPoly:
    """``(x_index^{(alphabet)})^power`` with 0-based alphabet and 1-based index."""
    return LaurentPoly.var(alphabets.offset(alphabet) + index - 1, alphabets.num_vars, power)


# finite-alphabet suites --------------------------------------------------------------


def verify_thm31(m: int, n: int, N: int) -> VerificationReport:
    """Schur products over ``l(lambda) <= n, lambda_1 <= N`` against a geometric-sum hdet."""
    params = {"m": m, "n": n, "N": N}
    abc = AlphabetSet(2 * m, n)
    lhs = LaurentPoly.zero(abc.num_vars)
    for d in range(n * N + 1):
        for lam in enumerate_partitions(d, n, N):
            lhs = lhs + _schur_product_laurent(lam, abc)

    def entry(*idx):
        x = LaurentPoly.constant(1, abc.num_vars)
        for s, i in enumerate(idx):
            x = x * _var(abc, s, i)
        return sum((x.pow(k) for k in range(n + N)), LaurentPoly.zero(abc.num_vars))

    numerator = hdet(HyperArray.from_function(2 * m, n, entry))
    try:
        rhs = _divide_vandermondes(numerator, abc)
    except DivisionError as exc:
        return _division_failure("thm31", params, exc)
    return _laurent_compare("thm31", params, lhs, rhs, checks={"divisible": True})


def verify_cor32(m: int, n: int, D: int) -> VerificationReport:
    """Infinite Cauchy-type sum against ``hdet(1/(1 - x...x))``, truncated at degree ``D``."""
    params = {"m": m, "n": n, "D": D}
    abc = AlphabetSet(2 * m, n, D)
    bound = D + _vandermonde_degree(abc)
    lhs = LaurentPoly.zero(abc.num_vars)
    for lam in partitions_up_to(D // (2 * m), n):
        lhs = lhs + _schur_product_laurent(lam, abc)

    def entry(*idx):
        x = LaurentPoly.constant(1, abc.num_vars)
        for s, i in enumerate(idx):
            x = x * _var(abc, s, i)
        series = sum((x.pow(k) for k in range(bound // (2 * m) + 1)), LaurentPoly.zero(abc.num_vars))
        return TruncatedPoly(series, bound)

    numerator = hdet(HyperArray.from_function(2 * m, n, entry)).poly.truncate(bound)
    try:
        rhs = _divide_vandermondes(numerator, abc)
    except DivisionError as exc:
        return _division_failure("cor32", params, exc)
    return _laurent_compare("cor32", params, lhs, rhs, max_degree=D, checks={"divisible": True})


def verify_thm33(m: int, n: int, D: int) -> VerificationReport:
    """Odd products of Schur polynomials in ``2n`` variables against a hyperpfaffian."""
    if m % 2 == 0:
        raise ParameterError("this identity needs odd m")
    params = {"m": m, "n": n, "D": D}
    abc = AlphabetSet(m, 2 * n, D)
    bound = D + _vandermonde_degree(abc)
    lhs = LaurentPoly.zero(abc.num_vars)
    for lam in partitions_up_to(D // m, 2 * n):
        lhs = lhs + _schur_product_laurent(lam, abc)

    zero = LaurentPoly.zero(abc.num_vars)

    def entry(*idx):
        total = zero
        # each summand has degree m(2l + p + 1)
        for l in range(bound // (2 * m) + 1):
            for p in range(bound // m - 2 * l):
                term = LaurentPoly.constant(1, abc.num_vars)
                for s in range(m):
                    a, b = idx[2 * s], idx[2 * s + 1]
                    term = term * (_var(abc, s, a, l) * _var(abc, s, b, l)) * (
                        _var(abc, s, a, p + 1) - _var(abc, s, b, p + 1)
                    )
                total = total + term
        return TruncatedPoly(total, bound)

    numerator = hpf(AlternatingArray.from_function(2 * m, 2 * n, entry)).poly.truncate(bound)
    try:
        rhs = _divide_vandermondes(numerator, abc)
    except DivisionError as exc:
        return _division_failure("thm33", params, exc)
    return _laurent_compare("thm33", params, lhs, rhs, max_degree=D, checks={"divisible": True})


# countable-alphabet suites ----------------------------------------------------------


def _schur_sum_tensor(count: int, max_length: int, D: int) -> TensorPowerSum:
    total = TensorPowerSum(count, D)
    for lam in partitions_up_to(D // count, max_length):
        term = TensorPowerSum.constant(1, count, D)
        for s in range(count):
            term = term * TensorPowerSum.from_single(_schur_powersum(lam), s, count, D)
        total = total + term
    return total


def verify_gessel(m: int, n: int, D: int) -> VerificationReport:
    """``sum_{l(lambda)<=n} prod_{i<=2m} s_lambda(x^{(i)}) = hdet(sum_k prod_s h_{k-i_s}(x^{(s)}))``."""
    params = {"m": m, "n": n, "D": D}
    count = 2 * m
    lhs = _schur_sum_tensor(count, n, D)

    def entry(*idx):
        total = TensorPowerSum(count, D)
        # degree of the k-th summand is 2m k - sum(idx)
        for k in range(max(idx), (D + sum(idx)) // count + 1):
            term = TensorPowerSum.constant(1, count, D)
            for s, i in enumerate(idx):
                term = term * _h_in_slot(k - i, s, count, D)
            total = total + term
        return total

    rhs = hdet(HyperArray.from_function(count, n, entry))
    return _tensor_compare("gessel", params, lhs, rhs, D)


def verify_stembridge(m: int, n: int, D: int) -> VerificationReport:
    """Odd-``m`` sum over ``l(lambda) <= 2n`` against a hyperpfaffian of ``2x2`` h-determinants.

    Turning each ``2n x 2n`` minor of h's into Jacobi-Trudi form reverses its
    rows, a sign ``(-1)^n`` per minor; with ``m`` odd minors the hyperpfaffian
    equals ``(-1)^n`` times the Schur sum.  The sign is applied explicitly and
    recorded in the report notes.
    """
    if m % 2 == 0:
        raise ParameterError("this identity needs odd m")
    params = {"m": m, "n": n, "D": D}
    lhs = _schur_sum_tensor(m, 2 * n, D)

    def entry(*idx):
        total = TensorPowerSum(m, D)
        # summand (k, l) has degree m(k + 2l + 1) - sum(idx)
        top = D + sum(idx)
        for l in range(top // (2 * m) + 1):
            for k in range(top // m - 2 * l):
                term = TensorPowerSum.constant(1, m, D)
                for s in range(m):
                    a, b = idx[2 * s], idx[2 * s + 1]
                    minor = _h_in_slot(k + l + 1 - a, s, m, D) * _h_in_slot(l - b, s, m, D) - _h_in_slot(
                        l - a, s, m, D
                    ) * _h_in_slot(k + l + 1 - b, s, m, D)
                    term = term * minor
                total = total + term
        return total

    sign = (-1) ** n
    rhs = hpf(AlternatingArray.from_function(2 * m, 2 * n, entry)) * sign
    report = _tensor_compare("stembridge", params, lhs, rhs, D)
    report.notes["rhs_sign"] = sign
    return report


# Jacobi-Trudi type formulas for Jack functions --------------------------------------


def _one_row_entries(kind: str, alpha, num_vars: int) -> Callable[[int], SymPoly]:
    cache: dict = {}

    def get(r: int) -> SymPoly:
        if r not in cache:
            if r < 0:
                cache[r] = SymPoly.zero(num_vars, POWERSUM)
            else:
                big = max(num_vars, r, 1)
                f = one_row_g(r, alpha, big) if kind == "g" else elementary_e(r, big)
                cache[r] = convert(f, POWERSUM).with_num_vars(num_vars)
        return cache[r]

    return get


def jack_hdet_form(kind: str, m: int, n: int, L: int, num_vars: int):
    """``n!(m!)^n/(mn)! * hdet(u_{L + i_1+...+i_m - i_{m+1}-...-i_{2m}})`` with ``u = g^{(1/m)}`` or ``e``.

    Returns the power-sum polynomial and the set of indices ``r`` used.
    """
    get = _one_row_entries(kind, Fraction(1, m), num_vars)
    used = set()

    def entry(*idx):
        r = L + sum(idx[:m]) - sum(idx[m:])
        used.add(r)
        return get(r)

    value = hdet(HyperArray.from_function(2 * m, n, entry))
    return value * Fraction(1, normalization_constant(n, m)), used


def jack_hpf_form(kind: str, m: int, n: int, L: int, num_vars: int):
    """``n!((2m)!)^n/(2mn)! * hpf(prod_s (i_{2s}-i_{2s-1}) u_{L+m(2n+1)-sum i})`` on side ``2n``.

    ``u = g^{(1/(2m))}`` or ``e``.
    """
    get = _one_row_entries(kind, Fraction(1, 2 * m), num_vars)
    zero = SymPoly.zero(num_vars, POWERSUM)

    def entry(*idx):
        weight = 1
        for s in range(m):
            weight *= idx[2 * s + 1] - idx[2 * s]
        if weight == 0:
            return zero
        return get(L + m * (2 * n + 1) - sum(idx)) * weight

    value = hpf(AlternatingArray.from_function(2 * m, 2 * n, entry))
    return value * Fraction(1, normalization_constant(n, 2 * m))


def _sym_report(suite, params, lhs: SymPoly, rhs: SymPoly, checks: dict):
    lm, rm = convert(lhs, MONOMIAL), convert(rhs, MONOMIAL)
    equal = lm == rm
    return VerificationReport(
        suite,
        params,
        equal and all(checks.values()),
        degrees={},
        checks={"equal": equal, **checks},
        lhs_digest=_digest(lm.to_json()),
        rhs_digest=_digest(rm.to_json()),
        difference=None if equal else (lm - rm).to_json(),
    )


def _check_stable(n: int, L: int, N: int | None) -> int:
    N = n * L if N is None else N
    if N < n * L:
        raise ParameterError(f"need N >= nL = {n * L} variables, got {N}")
    return N


def verify_main_jack(m: int, n: int, L: int, N: int | None = None) -> VerificationReport:
    """``Q_{(L^n)}^{(1/m)}`` against its hyperdeterminant of one-row functions."""
    N = _check_stable(n, L, N)
    params = {"m": m, "n": n, "L": L, "N": N}
    lam = rectangle(L, n)
    lhs = jack_Q(lam, JackParams(Fraction(1, m), N))
    rhs, used = jack_hdet_form("g", m, n, L, N)
    checks = {"membership": all(abs(r - L) <= m * (n - 1) for r in used)}
    if m == 1:
        jt = schur(lam, N, "jacobi_trudi")
        checks["schur_three_way"] = jt == schur(lam, N, "bialternant") and jt == convert(rhs, MONOMIAL)
    return _sym_report("main", params, lhs, rhs, checks)


def verify_dual_jack(m: int, n: int, L: int, N: int | None = None) -> VerificationReport:
    """``P_{(n^L)}^{(m)}`` against its hyperdeterminant of elementary functions."""
    N = _check_stable(n, L, N)
    params = {"m": m, "n": n, "L": L, "N": N}
    lam = rectangle(n, L)
    lhs = jack_P(lam, JackParams(m, N))
    rhs, used = jack_hdet_form("e", m, n, L, N)
    checks = {"membership": all(abs(r - L) <= m * (n - 1) for r in used)}
    # omega_m sends P^{(m)}_{(n^L)} to Q^{(1/m)}_{(L^n)} and e_r to g_r^{(1/m)}
    main_rhs, _ = jack_hdet_form("g", m, n, L, N)
    checks["omega_link"] = omega_alpha(rhs, m) == main_rhs and omega_alpha(lhs, m) == jack_Q(
        rectangle(L, n), JackParams(Fraction(1, m), N)
    )
    if m == 1:
        jt = schur(lam, N, "jacobi_trudi")
        checks["schur_three_way"] = jt == schur(lam, N, "bialternant") and jt == convert(rhs, MONOMIAL)
    return _sym_report("dual", params, lhs, rhs, checks)


def verify_cor52(m: int, n: int, L: int, N: int | None = None) -> VerificationReport:
    """Hyperpfaffian forms of ``Q_{(L^n)}^{(1/(2m))}`` and ``P_{(n^L)}^{(2m)}``."""
    N = _check_stable(n, L, N)
    params = {"m": m, "n": n, "L": L, "N": N}
    q_pf = jack_hpf_form("g", m, n, L, N)
    p_pf = jack_hpf_form("e", m, n, L, N)
    q_det, _ = jack_hdet_form("g", 2 * m, n, L, N)
    p_det, _ = jack_hdet_form("e", 2 * m, n, L, N)
    p_jack = jack_P(rectangle(n, L), JackParams(2 * m, N))
    checks = {
        "q_hpf_equals_hdet": q_pf == q_det,
        "p_hpf_equals_hdet": p_pf == p_det,
        "p_hpf_equals_jack": convert(p_pf, MONOMIAL) == p_jack,
    }
    lhs = jack_Q(rectangle(L, n), JackParams(Fraction(1, 2 * m), N))
    return _sym_report("cor52", params, lhs, q_pf, checks)


# grids and runners ----------------------------------------------------------------------

SUITES = {
    "thm31": (verify_thm31, ("m", "n", "N")),
    "cor32": (verify_cor32, ("m", "n", "D")),
    "thm33": (verify_thm33, ("m", "n", "D")),
    "gessel": (verify_gessel, ("m", "n", "D")),
    "stembridge": (verify_stembridge, ("m", "n", "D")),
    "main": (verify_main_jack, ("m", "n", "L", "N")),
    "dual": (verify_dual_jack, ("m", "n", "L", "N")),
    "cor52": (verify_cor52, ("m", "n", "L", "N")),
}

# parameters with defaults; the Jack suites pick their alphabet size themselves
OPTIONAL = {"main": {"N"}, "dual": {"N"}, "cor52": {"N"}}

_JACK_GRID = [dict(m=m, n=n, L=L) for m in (1, 2) for n in (1, 2) for L in (1, 2)] + [dict(m=2, n=3, L=1)]

DEFAULT_GRID = {
    "thm31": [dict(m=1, n=1, N=2), dict(m=1, n=2, N=1), dict(m=1, n=2, N=2), dict(m=2, n=1, N=2), dict(m=2, n=2, N=1)],
    "cor32": [dict(m=1, n=1, D=5), dict(m=1, n=2, D=4), dict(m=1, n=2, D=5), dict(m=2, n=1, D=4), dict(m=2, n=2, D=5)],
    "thm33": [dict(m=1, n=1, D=4), dict(m=1, n=2, D=3), dict(m=1, n=2, D=5), dict(m=3, n=1, D=3)],
    "gessel": [dict(m=1, n=1, D=5), dict(m=1, n=2, D=4), dict(m=1, n=2, D=5), dict(m=2, n=1, D=3), dict(m=2, n=2, D=5)],
    "stembridge": [dict(m=1, n=1, D=4), dict(m=1, n=2, D=4), dict(m=1, n=2, D=5), dict(m=3, n=1, D=3)],
    "main": _JACK_GRID,
    "dual": _JACK_GRID,
    "cor52": [dict(m=1, n=n, L=L) for n in (1, 2) for L in (1, 2)],
}


def run_one(suite: str, params: Mapping) -> VerificationReport:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    fn, names = SUITES[suite]
    unknown = set(params) - set(names)
    if unknown:
        raise ParameterError(f"unknown parameters for {suite}: {sorted(unknown)}")
    missing = set(names) - set(params) - OPTIONAL.get(suite, set())
    if missing:
        raise ParameterError(f"missing parameters for {suite}: {sorted(missing)}")
    return fn(**{k: int(v) for k, v in params.items()})


def _run_job(job):
    return run_one(*job)


def run_suite(suite: str, grid=None, threads: int = 1) -> list[VerificationReport]:
    """Run ``suite`` (or ``"all"``) over ``grid``; report order follows the grid, never the schedule."""
    names = list(SUITES) if suite == "all" else [suite]
    jobs = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        for params in grid if grid is not None else DEFAULT_GRID[name]:
            jobs.append((name, dict(params)))
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_run_job, jobs))
    return [_run_job(j) for j in jobs]


def run_all(threads: int = 1) -> list[VerificationReport]:
    return run_suite("all", threads=threads)
