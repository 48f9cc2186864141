"""Exact integer univariate polynomials and characteristic polynomials.

Everything here is arbitrary-precision: coefficients are Python ints and
all algorithms are division-free or use only provably exact integer
divisions.  Floating point never enters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .limits import max_vertices


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, ascending coefficients, no trailing zeros.

    ``IntPoly((-2, -3, 0, 1))`` is ``x^3 - 3*x - 2``.  The zero polynomial
    is the empty tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    # -- queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, power: int) -> int:
        """Coefficient of x**power (0 outside the stored range)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(other * v for v in self.coeffs))
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by x**k."""
        if self.is_zero():
            return ZERO
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        """Evaluate at an integer by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- presentation ----------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                xs = "x" if power == 1 else f"x^{power}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        """Ascending coefficients as decimal strings (arbitrary precision)."""
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> IntPoly:
        return cls(tuple(int(s) for s in data["coeffs"]))


ZERO = IntPoly(())
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def _coerce(v: IntPoly | int) -> IntPoly:
    return v if isinstance(v, IntPoly) else IntPoly((v,))


def monomial(power: int, coeff: int = 1) -> IntPoly:
    return IntPoly((0,) * power + (coeff,))


# ---------------------------------------------------------------------------
# Chebyshev-type basis: J_k(x) = U_k(x/2), the normalized second-kind family.
# J_{-1} = 0, J_0 = 1, J_{k+2} = x*J_{k+1} - J_k.
# ---------------------------------------------------------------------------

def jpoly(k: int) -> IntPoly:
    """The k-th normalized Chebyshev polynomial of the second kind, U_k(x/2).

    Defined for k >= -1 with jpoly(-1) = 0; computed by the three-term
    recurrence J_{k+2} = x*J_{k+1} - J_k.
    """
    if k < -1:
        raise ValueError(f"jpoly index must be >= -1, got {k}")
    if k == -1:
        return ZERO
    prev, cur = ZERO, ONE
    for _ in range(k):
        prev, cur = cur, X * cur - prev
    return cur


def jpoly_explicit(k: int) -> IntPoly:
    """jpoly(k) by the closed binomial sum instead of the recurrence.

    J_k(x) = sum_{j=0}^{floor(k/2)} (-1)^j * C(k-j, j) * x^(k-2j).
    Kept as an independent code path so the two can be checked against
    each other.
    """
    if k < -1:
        raise ValueError(f"jpoly index must be >= -1, got {k}")
    if k == -1:
        return ZERO
    coeffs = [0] * (k + 1)
    for j in range(k // 2 + 1):
        coeffs[k - 2 * j] = (-1) ** j * math.comb(k - j, j)
    return IntPoly(tuple(coeffs))


def check_quadratic_identity(k: int) -> bool:
    """True iff J_k^2 - x*J_k*J_{k-1} + J_{k-1}^2 == 1 exactly."""
    if k < 1:
        raise ValueError("quadratic identity needs k >= 1")
    jk, jk1 = jpoly(k), jpoly(k - 1)
    return jk * jk - X * jk * jk1 + jk1 * jk1 == ONE


def invert_power_series(denominator: Sequence[IntPoly | int],
                        n_terms: int) -> list[IntPoly]:
    """Coefficients of 1/denominator as a power series in t over Z[x].

    ``denominator`` lists polynomial coefficients of powers of t and must
    have constant term 1 (or -1) so the inverse stays integral.
    """
    den = [_coerce(c) for c in denominator]
    if not den or den[0] not in (ONE, -ONE):
        raise ValueError("series inversion needs constant term +1 or -1")
    lead = 1 if den[0] == ONE else -1
    out: list[IntPoly] = []
    for k in range(n_terms + 1):
        acc = ONE if k == 0 else ZERO
        for i in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[i] * out[k - i]
        out.append(acc * lead)
    return out


def check_generating_function(k_max: int, t_terms: int | None = None) -> bool:
    """Expand 1/(1 - t*x + t^2) in t and compare each coefficient to jpoly.

    Returns True iff coefficients of t^0..t^k_max all equal J_0..J_{k_max}.
    """
    if t_terms is None:
        t_terms = k_max
    terms = invert_power_series([ONE, -X, ONE], max(k_max, t_terms))
    return all(terms[k] == jpoly(k) for k in range(k_max + 1))


# ---------------------------------------------------------------------------
# Characteristic polynomials, exactly.
# ---------------------------------------------------------------------------

def charpoly(matrix) -> IntPoly:
    """det(x*I - M) of an integer matrix, exact.

    Uses the Faddeev-LeVerrier recurrence: every division it performs is
    by the step index and is provably exact over the integers, so the
    result is computed without fractions.  Matrix rows are consumed as any
    sequence of sequences of ints (an AdjMatrix works too).
    """
    rows = getattr(matrix, "rows", matrix)
    n = len(rows)
    if n == 0:
        raise ValueError("characteristic polynomial of an empty matrix")
    if n > max_vertices():
        raise ValueError(
            f"matrix dimension {n} above the cap {max_vertices()} "
            "(raise ALTKNOT_MAX_V to allow it)")
    m = [[int(v) for v in row] for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")

    # Sparse view of m: adjacency matrices have at most two entries per row.
    sparse = [[(j, v) for j, v in enumerate(row) if v] for row in m]

    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    aux = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # M_1 = I
    for k in range(1, n + 1):
        prod = [[sum(v * aux[j][col] for j, v in sparse[i]) for col in range(n)]
                for i in range(n)]
        trace = sum(prod[i][i] for i in range(n))
        q, r = divmod(trace, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        c = -q
        coeffs[n - k] = c
        if k < n:
            aux = prod
            for i in range(n):
                aux[i][i] += c
    return IntPoly(tuple(coeffs))


def charpoly_cofactor(matrix) -> IntPoly:
    """det(x*I - M) by cofactor expansion over Z[x].

    Exponential in the dimension; only sensible for small matrices.  Serves
    as an independent oracle for :func:`charpoly`.
    """
    rows = getattr(matrix, "rows", matrix)
    n = len(rows)
    if n == 0:
        raise ValueError("characteristic polynomial of an empty matrix")
    xi_minus_m = [[X - rows[i][j] if i == j else IntPoly((-int(rows[i][j]),))
                   for j in range(n)] for i in range(n)]

    def det(mat: list[list[IntPoly]]) -> IntPoly:
        size = len(mat)
        if size == 1:
            return mat[0][0]
        total = ZERO
        rest = mat[1:]
        for j in range(size):
            if mat[0][j].is_zero():
                continue
            minor = [row[:j] + row[j + 1:] for row in rest]
            term = mat[0][j] * det(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return det(xi_minus_m)


def divide_out(p: IntPoly, root_factor: IntPoly) -> tuple[IntPoly, bool]:
    """Synthetic division of p by a monic-in-magnitude linear factor.

    Returns ``(quotient, exact)`` where exact means the remainder is zero.
    The divisor must be degree 1 with leading coefficient +-1 (all designated
    factors here, like (x - 2) and (x + 1), are monic).
    """
    if root_factor.degree != 1 or abs(root_factor[1]) != 1:
        raise ValueError("divisor must be linear with leading coefficient +-1")
    lead, const = root_factor[1], root_factor[0]
    root = -const * lead  # the divisor's zero, as an exact integer
    if p.is_zero():
        return ZERO, True
    quotient = [0] * max(p.degree, 1)
    acc = 0
    for power in range(p.degree, 0, -1):
        acc = acc * root + p[power]
        quotient[power - 1] = acc
    remainder = acc * root + p[0]
    if lead == -1:
        quotient = [-q for q in quotient]
    return IntPoly(tuple(quotient)), remainder == 0


def power_sums_from_charpoly(p: IntPoly, k_max: int) -> list[int]:
    """Traces of matrix powers 1..k_max recovered from det(x*I - M).

    Newton's identities relate the power sums of the eigenvalues to the
    characteristic coefficients; everything stays in exact integers.
    """
    n = p.degree
    if n < 1 or p[n] != 1:
        raise ValueError("expected a monic characteristic polynomial")
    # e_i are the elementary symmetric functions of the eigenvalues.
    e = [(-1) ** i * p[n - i] if i <= n else 0 for i in range(k_max + 1)]
    sums: list[int] = []
    for k in range(1, k_max + 1):
        pk = (-1) ** (k - 1) * k * e[k] if k <= n else 0
        for i in range(1, k):
            pk += (-1) ** (i - 1) * e[i] * sums[k - i - 1] if i <= n else 0
        sums.append(pk)
    return sums


@dataclass(frozen=True)
class CoefficientReport:
    """Pass/fail record of the coefficient rules tying the polynomial to faces.

    For a degree-V characteristic polynomial: the x^(V-1) coefficient is
    minus the loop count; with no loops, x^(V-2) carries -C_2 and x^(V-3)
    carries -C_3.
    """

    loop_rule: bool
    bigon_rule: bool | None
    triangle_rule: bool | None

    def all_pass(self) -> bool:
        return all(v is not False for v in
                   (self.loop_rule, self.bigon_rule, self.triangle_rule))


def coefficient_report(p: IntPoly, census, loops: int) -> CoefficientReport:
    """Check a_{V-1} = -loops, and for loop-free census a_{V-2} = -C_2,
    a_{V-3} = -C_3.  Rules whose power falls below x^0 report None (vacuous).
    """
    v = p.degree
    counts = getattr(census, "counts", census)
    loop_rule = p[v - 1] == -loops if v >= 1 else loops == 0
    bigon_rule = triangle_rule = None
    if loops == 0 and not counts.get(1, 0):
        if v >= 2:
            bigon_rule = p[v - 2] == -counts.get(2, 0)
        if v >= 3:
            triangle_rule = p[v - 3] == -counts.get(3, 0)
    return CoefficientReport(loop_rule, bigon_rule, triangle_rule)
