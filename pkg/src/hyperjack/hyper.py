"""Hyperdeterminants, hyper-permanents and hyperpfaffians over exact rings.

Evaluators are duck-typed: entries may be ints, Fractions, floats,
:class:`~hyperjack.exact.LaurentPoly` or :class:`~hyperjack.symfunc.SymPoly`,
anything closed under ``+``, ``-``, ``*`` and comparable with ``==``.

Index tuples are 1-based throughout this module, matching the usual
``A(i_1, ..., i_{2m})`` notation with ``1 <= i_k <= n``.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Callable, Sequence

import numpy as np

from .exact import LaurentPoly, ParameterError, canon, is_scalar, rational_from_json, rational_to_json
from .symfunc import SymPoly

HDET_METHODS = ("naive", "fixed", "collapse")


class ValidationError(ValueError):
    """An array does not have the symmetry its type promises."""


# permutations ---------------------------------------------------------------


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple:
    return tuple((p, perm_sign(p)) for p in permutations(range(n)))


@lru_cache(maxsize=None)
def perfect_matchings(size: int) -> tuple:
    """Canonical pairings of ``0..size-1`` as flat sequences ``(a1, b1, a2, b2, ...)``.

    Pairs are ascending and listed by increasing first element; each comes
    with the sign of the permutation it spells out.
    """

    def rec(rest):
        if not rest:
            yield ()
            return
        a = rest[0]
        for k in range(1, len(rest)):
            b = rest[k]
            remaining = rest[1:k] + rest[k + 1 :]
            for tail in rec(remaining):
                yield (a, b) + tail

    return tuple((m, perm_sign(m)) for m in rec(tuple(range(size))))


@lru_cache(maxsize=None)
def pair_ascending_permutations(size: int) -> tuple:
    """``E_{2n}``: permutations with ``sigma(2i-1) < sigma(2i)``, with signs."""
    n = size // 2
    out = []
    for match, sign in perfect_matchings(size):
        pairs = [match[2 * i : 2 * i + 2] for i in range(n)]
        # reordering whole pairs is an even permutation
        for order in permutations(range(n)):
            out.append((tuple(x for k in order for x in pairs[k]), sign))
    return tuple(out)


# arrays -----------------------------------------------------------------------


class HyperArray:
    """Dense array of order ``order`` and side ``side``, stored row-major."""

    def __init__(self, order: int, side: int, entries: Sequence):
        if order < 1 or side < 1:
            raise ValueError("order and side must be positive")
        entries = tuple(entries)
        if len(entries) != side**order:
            raise ValueError(f"expected {side ** order} entries, got {len(entries)}")
        self.order = order
        self.side = side
        self.entries = entries
        self.strides = tuple(side ** (order - 1 - s) for s in range(order))

    @classmethod
    def from_function(cls, order: int, side: int, fn: Callable, **kwargs):
        """Build from ``fn(i_1, ..., i_order)`` with 1-based indices."""
        rng = range(1, side + 1)
        return cls(order, side, [fn(*idx) for idx in product(rng, repeat=order)], **kwargs)

    @classmethod
    def from_numpy(cls, arr, **kwargs):
        arr = np.asarray(arr, dtype=object)
        if len(set(arr.shape)) != 1:
            raise ValueError("all sides must be equal")
        return cls(arr.ndim, arr.shape[0], list(arr.reshape(-1)), **kwargs)

    def _offset(self, idx: Sequence[int]) -> int:
        if len(idx) != self.order:
            raise IndexError(f"expected {self.order} indices")
        off = 0
        for i, st in zip(idx, self.strides):
            if not 1 <= i <= self.side:
                raise IndexError(f"index {i} outside 1..{self.side}")
            off += (i - 1) * st
        return off

    def __getitem__(self, idx):
        if not isinstance(idx, tuple):
            idx = (idx,)
        return self.entries[self._offset(idx)]

    def indices(self):
        return product(range(1, self.side + 1), repeat=self.order)

    def map(self, fn: Callable) -> "HyperArray":
        return HyperArray(self.order, self.side, [fn(x) for x in self.entries])

    def to_numpy(self, dtype=object):
        return np.array(self.entries, dtype=dtype).reshape((self.side,) * self.order)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order}, side={self.side})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "side": self.side,
            "entries": [element_to_json(x) for x in self.entries],
        }

    @classmethod
    def from_json(cls, obj, **kwargs):
        entries = [element_from_json(x) for x in obj["entries"]]
        return cls(int(obj["order"]), int(obj["side"]), entries, **kwargs)


def element_to_json(x):
    if isinstance(x, (LaurentPoly, SymPoly)):
        return x.to_json()
    if is_scalar(x):
        return rational_to_json(x)
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return x


def element_from_json(obj):
    if isinstance(obj, dict):
        if "terms" in obj:
            return LaurentPoly.from_json(obj)
        if "coeffs" in obj:
            return SymPoly.from_json(obj)
        if "num" in obj:
            return rational_from_json(obj)
        if "re" in obj:
            return complex(obj["re"], obj["im"])
    if isinstance(obj, str):
        return Fraction(obj)
    return obj


def _sampled_or_all(arr: HyperArray, exhaustive: bool, samples: int, seed: int):
    if exhaustive:
        return arr.indices()
    rng = random.Random(seed)
    return (
        tuple(rng.randint(1, arr.side) for _ in range(arr.order)) for _ in range(samples)
    )


class AlternatingArray(HyperArray):
    """Order ``2m``, side ``2n``; swapping slots ``2s-1`` and ``2s`` negates the entry."""

    def __init__(self, order, side, entries, validate: bool = True, seed: int = 0):
        super().__init__(order, side, entries)
        if order % 2 or side % 2:
            raise ValueError("alternating arrays need even order and even side")
        if validate:
            self.validate(seed=seed)

    def validate(self, samples: int = 1000, seed: int = 0) -> None:
        exhaustive = self.side <= 4
        for idx in _sampled_or_all(self, exhaustive, samples, seed):
            x = self[idx]
            for s in range(0, self.order, 2):
                sw = list(idx)
                sw[s], sw[s + 1] = sw[s + 1], sw[s]
                if self[tuple(sw)] != -x:
                    raise ValidationError(f"pair ({s + 1},{s + 2}) not alternating at {idx}")


class FullyAntisymmetricArray(HyperArray):
    """Order ``2m``, side ``2mn``; antisymmetric under every permutation of slots."""

    def __init__(self, order, side, entries, validate: bool = True, seed: int = 0):
        super().__init__(order, side, entries)
        if order % 2 or side % order:
            raise ValueError("side must be a multiple of the (even) order")
        if validate:
            self.validate(seed=seed)

    def validate(self, samples: int = 1000, seed: int = 0) -> None:
        exhaustive = self.side**self.order <= 50_000
        for idx in _sampled_or_all(self, exhaustive, samples, seed):
            x = self[idx]
            for s in range(self.order - 1):
                sw = list(idx)
                sw[s], sw[s + 1] = sw[s + 1], sw[s]
                if self[tuple(sw)] != -x:
                    raise ValidationError(f"slots {s + 1},{s + 2} not antisymmetric at {idx}")


# ring helpers ---------------------------------------------------------------


def _prod(items):
    it = iter(items)
    acc = next(it)
    for x in it:
        acc = acc * x
    return acc


def _signed(x, sign):
    return x if sign > 0 else -x


def _scale(x, factor: Fraction):
    if isinstance(x, (float, complex)):
        return x * float(factor)
    if is_scalar(x):
        return canon(x * factor)
    return x * factor


def det(matrix: Sequence[Sequence]):
    """Determinant of a square matrix over an exact ring.

    Exact scalars use fraction Gaussian elimination; other entries use the
    permutation expansion.
    """
    n = len(matrix)
    if n == 0:
        return 1
    if all(is_scalar(x) for row in matrix for x in row):
        a = [[Fraction(x) for x in row] for row in matrix]
        sign, out = 1, Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                return 0
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                sign = -sign
            out *= a[col][col]
            for r in range(col + 1, n):
                if a[r][col]:
                    f = a[r][col] / a[col][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        out *= sign
        return out.numerator if out.denominator == 1 else out
    total = None
    for p, s in signed_permutations(n):
        term = _signed(_prod(matrix[i][p[i]] for i in range(n)), s)
        total = term if total is None else total + term
    return total


def pfaffian(matrix: Sequence[Sequence]):
    """Classical pfaffian by expansion along the first row."""
    n = len(matrix)
    if n % 2:
        raise ValueError("pfaffian needs even size")
    if n == 0:
        return 1
    return _pf_rec(matrix, tuple(range(n)))


def _pf_rec(a, idx):
    if not idx:
        return 1
    first = idx[0]
    total = None
    for k in range(1, len(idx)):
        rest = idx[1:k] + idx[k + 1 :]
        term = a[first][idx[k]] * _pf_rec(a, rest)
        term = term if k % 2 == 1 else -term
        total = term if total is None else total + term
    return total


# hyperdeterminant -------------------------------------------------------------


def _walk(entries, strides_seq, offsets, table, combine, leaf):
    """Enumerate permutation tuples slot by slot, carrying per-row flat offsets."""
    acc = [None]

    def rec(level, offs, sign):
        if level == len(strides_seq):
            term = leaf(offs, sign)
            if term is not None:
                acc[0] = term if acc[0] is None else acc[0] + term
            return
        st = strides_seq[level]
        for perm, s in table:
            rec(level + 1, [o + perm[i] * st for i, o in enumerate(offs)], combine(sign, s))

    rec(0, offsets, 1)
    return acc[0]


def hdet(A: HyperArray, method: str = "fixed"):
    """Cayley's hyperdeterminant ``(1/n!) sum_{sigma in S_n^{2m}} sgn(sigma) prod_i A(sigma(i))``.

    ``method``:
      * ``"naive"``: the defining sum over all ``(n!)^{2m}`` tuples, divided by ``n!``;
      * ``"fixed"``: ``sigma_1 = id`` (relabelling rows absorbs the ``1/n!``);
      * ``"collapse"``: as ``"fixed"``, and the sum over the last slot is a determinant.
    """
    if A.order % 2:
        raise ValueError("hyperdeterminant needs even order")
    if method not in HDET_METHODS:
        raise ValueError(f"unknown method {method!r}")
    n, entries, strides = A.side, A.entries, A.strides
    table = signed_permutations(n)
    mul = lambda a, b: a * b

    def leaf(offs, sign):
        return _signed(_prod(entries[o] for o in offs), sign)

    if method == "naive":
        total = _walk(entries, strides, [0] * n, table, mul, leaf)
        return _scale(total, Fraction(1, math.factorial(n)))
    start = [i * strides[0] for i in range(n)]
    if method == "fixed":
        return _walk(entries, strides[1:], start, table, mul, leaf)

    last = strides[-1]

    def det_leaf(offs, sign):
        rows = [[entries[o + j * last] for j in range(n)] for o in offs]
        return _signed(det(rows), sign)

    if A.order == 2:
        return det_leaf(start, 1)
    return _walk(entries, strides[1:-1], start, table, mul, det_leaf)


def hdet_numeric(arr, chunk: int = 20_000) -> complex:
    """Hyperdeterminant of a float/complex ndarray.

    Fixes the first slot, enumerates the middle slots, and evaluates the last
    slot as batched ``numpy.linalg.det`` calls.
    """
    arr = np.asarray(arr)
    order, n = arr.ndim, arr.shape[0]
    if order % 2:
        raise ValueError("hyperdeterminant needs even order")
    if order == 2:
        return np.linalg.det(arr)
    table = signed_permutations(n)
    perms = np.array([p for p, _ in table], dtype=np.intp)
    signs = np.array([s for _, s in table], dtype=float)
    middle = order - 2
    rows = np.arange(n)
    total = 0.0
    count = len(table) ** middle
    for start in range(0, count, chunk):
        flat = np.arange(start, min(start + chunk, count))
        digits = []
        rem = flat
        for _ in range(middle):
            digits.append(rem % len(table))
            rem = rem // len(table)
        digits.reverse()
        index = [np.broadcast_to(rows, (len(flat), n))]
        sgn = np.ones(len(flat))
        for dg in digits:
            index.append(perms[dg])
            sgn = sgn * signs[dg]
        mats = arr[tuple(index)]  # shape (batch, n, n): row i, column = last slot
        total = total + np.sum(sgn * np.linalg.det(mats))
    return total


def hper(A: HyperArray):
    """Hyper-permanent ``(1/n!) sum_{sigma in S_n^m} prod_i A(sigma(i))`` (any order)."""
    n, entries, strides = A.side, A.entries, A.strides
    table = tuple((p, 1) for p, _ in signed_permutations(n))
    start = [i * strides[0] for i in range(n)]
    return _walk(
        entries, strides[1:], start, table, lambda a, b: 1, lambda offs, s: _prod(entries[o] for o in offs)
    )


# hyperpfaffians -----------------------------------------------------------------


def hpf(B: HyperArray, method: str = "fixed"):
    """Hyperpfaffian of an alternating array of order ``2m`` and side ``2n``.

    ``(1/n!) sum_{sigma_1..sigma_m in E_{2n}} sgn prod_i B(sigma_1(2i-1), sigma_1(2i), ...)``.
    ``"fixed"`` restricts ``sigma_1`` to canonical pairings, which absorbs the ``1/n!``.
    """
    if B.order % 2 or B.side % 2:
        raise ValueError("hyperpfaffian needs even order and even side")
    if method not in ("naive", "fixed"):
        raise ValueError(f"unknown method {method!r}")
    m, n = B.order // 2, B.side // 2
    entries, strides = B.entries, B.strides
    ep = pair_ascending_permutations(B.side)
    # per slot pair: offsets contributed to each of the n factors
    def pair_offsets(perm, s):
        a, b = strides[2 * s], strides[2 * s + 1]
        return [perm[2 * i] * a + perm[2 * i + 1] * b for i in range(n)]

    tables = [[(pair_offsets(p, s), sg) for p, sg in ep] for s in range(m)]
    first = tables[0] if method == "naive" else [
        (pair_offsets(p, 0), sg) for p, sg in perfect_matchings(B.side)
    ]
    total = None
    stack = [(0, [0] * n, 1)]

    def rec(level, offs, sign):
        nonlocal total
        if level == m:
            term = _signed(_prod(entries[o] for o in offs), sign)
            total = term if total is None else total + term
            return
        for add, sg in (first if level == 0 else tables[level]):
            rec(level + 1, [o + a for o, a in zip(offs, add)], sign * sg)

    rec(*stack[0])
    if method == "naive":
        total = _scale(total, Fraction(1, math.factorial(n)))
    return total


def embed_hdet_to_hpf(A: HyperArray) -> AlternatingArray:
    """Side-``2n`` alternating array ``B`` with ``hpf(B) = hdet(A)``.

    Within each slot pair one index must be odd and the other even; an
    (odd ``2p-1``, even ``2q``) pair reads row ``p``, column ``q`` of that pair
    of slots of ``A``, and the reversed orientation contributes a sign.
    """
    n, order = A.side, A.order

    def entry(*idx):
        sign = 1
        sub = []
        for s in range(0, order, 2):
            a, b = idx[s], idx[s + 1]
            if a % 2 == 1 and b % 2 == 0:
                sub += [(a + 1) // 2, b // 2]
            elif a % 2 == 0 and b % 2 == 1:
                sub += [(b + 1) // 2, a // 2]
                sign = -sign
            else:
                return _zero_like(A.entries[0])
        return _signed(A[tuple(sub)], sign)

    return AlternatingArray.from_function(order, 2 * n, entry)


def _zero_like(x):
    return x * 0 if not is_scalar(x) else 0


def block_ascending_permutations(m: int, n: int, canonical: bool = True):
    """``E_{2mn,2m}``: permutations whose ``n`` consecutive ``2m``-blocks ascend.

    With ``canonical=True`` only set partitions with blocks ordered by their
    least element are produced (reordering blocks is an even permutation).
    """
    size, block = 2 * m * n, 2 * m

    def rec(rest):
        if not rest:
            yield ()
            return
        a = rest[0]
        for others in combinations(rest[1:], block - 1):
            blk = (a,) + others
            remaining = tuple(x for x in rest if x not in blk)
            for tail in rec(remaining):
                yield blk + tail

    for seq in rec(tuple(range(size))):
        if canonical:
            yield seq, perm_sign(seq)
        else:
            blocks = [seq[block * i : block * (i + 1)] for i in range(n)]
            for order in permutations(range(n)):
                p = tuple(x for k in order for x in blocks[k])
                yield p, perm_sign(p)


def barvinok_hpf(M: HyperArray, canonical: bool = True):
    """Barvinok's hyperpfaffian ``(1/n!) sum_{E_{2mn,2m}} sgn prod_i M(block_i)``."""
    order, side = M.order, M.side
    if order % 2 or side % order:
        raise ValueError("side must be a multiple of the even order")
    m, n = order // 2, side // order
    total = None
    for seq, sign in block_ascending_permutations(m, n, canonical):
        term = _signed(
            _prod(M[tuple(x + 1 for x in seq[order * i : order * (i + 1)])] for i in range(n)), sign
        )
        total = term if total is None else total + term
    if not canonical:
        total = _scale(total, Fraction(1, math.factorial(n)))
    return total


def embed_hpf_to_barvinok(B: HyperArray, m: int | None = None) -> FullyAntisymmetricArray:
    """Fully antisymmetric ``M`` of side ``2mn`` with ``barvinok_hpf(M) = hpf(B)``.

    On strictly ascending tuples whose ``s``-th slot pair lies in the ``s``-th
    block of ``2n`` indices, ``M`` equals ``B`` at the in-block positions;
    other ascending tuples give zero; the rest follows by antisymmetry.
    """
    order = B.order
    m = order // 2 if m is None else m
    if 2 * m != order:
        raise ValueError("m must be half the order of B")
    two_n = B.side
    zero = _zero_like(B.entries[0])

    def entry(*idx):
        if len(set(idx)) < order:
            return zero
        srt = sorted(idx)
        sign = perm_sign([srt.index(i) for i in idx])
        r = []
        for s in range(m):
            lo = two_n * s
            for i in srt[2 * s : 2 * s + 2]:
                if not lo < i <= lo + two_n:
                    return zero
                r.append(i - lo)
        return _signed(B[tuple(r)], sign)

    return FullyAntisymmetricArray.from_function(order, m * two_n, entry)


# discrete integral formulas -----------------------------------------------------


def cauchy_binet_sides(phi: Sequence[Sequence[Callable]], X: Sequence, m: int, n: int):
    """Both sides of the hyperdeterminant Cauchy-Binet formula over a finite set ``X``.

    ``phi[i][j]`` (``0 <= i < 2m``, ``0 <= j < n``) are functions on ``X``;
    integrals are sums with unit weights.
    """
    if len(phi) != 2 * m or any(len(row) != n for row in phi):
        raise ValueError("phi must have 2m rows of n functions")
    lhs = 0
    for xs in product(X, repeat=n):
        term = 1
        for i in range(2 * m):
            term = term * det([[phi[i][j](x) for x in xs] for j in range(n)])
            if term == 0:
                break
        lhs = lhs + term
    lhs = _scale(lhs, Fraction(1, math.factorial(n)))

    def moment(*idx):
        return sum(_prod(phi[s][idx[s] - 1](x) for s in range(2 * m)) for x in X)

    rhs = hdet(HyperArray.from_function(2 * m, n, moment))
    return lhs, rhs


def cauchy_binet_check(phi, X, m: int, n: int) -> bool:
    lhs, rhs = cauchy_binet_sides(phi, X, m, n)
    return lhs == rhs


def debruijn_sides(psi, eps: Callable, X: Sequence, m: int, n: int):
    """Both sides of the hyperpfaffian de Bruijn formula (``m`` odd) over finite ``X``.

    ``psi[s][j]`` (``0 <= s < m``, ``0 <= j < 2n``) are functions on ``X`` and
    ``eps`` is antisymmetric on ``X x X``.
    """
    if m % 2 == 0:
        raise ParameterError("the de Bruijn-type formula needs odd m")
    if len(psi) != m or any(len(row) != 2 * n for row in psi):
        raise ValueError("psi must have m rows of 2n functions")
    for x in X:
        for y in X:
            if eps(x, y) != -eps(y, x):
                raise ValueError("eps must be antisymmetric")
    size = 2 * n
    lhs = 0
    for xs in product(X, repeat=size):
        if len(set(xs)) < size:
            continue  # determinants vanish on repeated points
        term = pfaffian([[eps(a, b) for b in xs] for a in xs])
        for s in range(m):
            if term == 0:
                break
            term = term * det([[psi[s][j](x) for x in xs] for j in range(size)])
        lhs = lhs + term
    lhs = _scale(lhs, Fraction(1, math.factorial(size)))

    def q_entry(*idx):
        total = 0
        for x in X:
            for y in X:
                e = eps(x, y)
                if e == 0:
                    continue
                term = e
                for s in range(m):
                    a, b = psi[s][idx[2 * s] - 1], psi[s][idx[2 * s + 1] - 1]
                    term = term * (a(x) * b(y) - a(y) * b(x))
                total = total + term
        return _scale(total, Fraction(1, 2))

    rhs = hpf(AlternatingArray.from_function(2 * m, size, q_entry))
    return lhs, rhs


def debruijn_check(psi, eps, X, m: int, n: int) -> bool:
    lhs, rhs = debruijn_sides(psi, eps, X, m, n)
    return lhs == rhs


def paired_column_sides(psi, X: Sequence, m: int, n: int):
    """Both sides of the paired-column hyperpfaffian formula over finite ``X``.

    ``psi[i][j]`` (``0 <= i < 2m``, ``0 <= j < 2n``).  The left side uses the
    ``2n x 2n`` determinant whose row ``j`` is
    ``(a_j(x_1), b_j(x_1), ..., a_j(x_n), b_j(x_n))``.
    """
    if len(psi) != 2 * m or any(len(row) != 2 * n for row in psi):
        raise ValueError("psi must have 2m rows of 2n functions")
    lhs = 0
    for xs in product(X, repeat=n):
        term = 1
        for s in range(m):
            a, b = psi[2 * s], psi[2 * s + 1]
            mat = [[f(x) for x in xs for f in (a[j], b[j])] for j in range(2 * n)]
            term = term * det(mat)
            if term == 0:
                break
        lhs = lhs + term
    lhs = _scale(lhs, Fraction(1, math.factorial(n)))

    def r_entry(*idx):
        total = 0
        for x in X:
            term = 1
            for s in range(m):
                i, j = idx[2 * s] - 1, idx[2 * s + 1] - 1
                a, b = psi[2 * s], psi[2 * s + 1]
                term = term * (a[i](x) * b[j](x) - a[j](x) * b[i](x))
            total = total + term
        return total

    rhs = hpf(AlternatingArray.from_function(2 * m, 2 * n, r_entry))
    return lhs, rhs


def paired_column_check(psi, X, m: int, n: int) -> bool:
    lhs, rhs = paired_column_sides(psi, X, m, n)
    return lhs == rhs


# random instances ---------------------------------------------------------------


def random_rational(rng: random.Random, bound: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_array(order: int, side: int, seed: int, bound: int = 5, den: int = 4) -> HyperArray:
    rng = random.Random(seed)
    return HyperArray(order, side, [random_rational(rng, bound, den) for _ in range(side**order)])


def random_alternating(order: int, side: int, seed: int, bound: int = 5, den: int = 4) -> AlternatingArray:
    """Random array obeying the pairwise alternating condition."""
    rng = random.Random(seed)
    canonical = {}

    def entry(*idx):
        sign, key = 1, []
        for s in range(0, order, 2):
            a, b = idx[s], idx[s + 1]
            if a == b:
                return 0
            if a > b:
                a, b = b, a
                sign = -sign
            key += [a, b]
        key = tuple(key)
        if key not in canonical:
            canonical[key] = random_rational(rng, bound, den)
        return sign * canonical[key]

    return AlternatingArray.from_function(order, side, entry)
