"""Integer polynomials, rational generating functions and linear recurrences.

Polynomials are in ascending order of powers.  A :class:`RationalGF` is kept
reduced, with a denominator whose constant term is 1, so that its
power-series coefficients come from a plain integer recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from tmenum.matrix import IntMatrix, mat_mul, trace


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        if not self or not other:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> Poly:
        """Multiply by ``z**k``."""
        return Poly([0] * k + list(self.coeffs)) if self else Poly()

    def truncate(self, n: int) -> Poly:
        """Drop every term of degree ``n`` or higher."""
        return Poly(self.coeffs[:n])

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def reverse(self, degree: int | None = None) -> Poly:
        """Return ``z**degree * p(1/z)`` (``degree`` defaults to ``self.degree``)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError(f"reversal degree {d} below polynomial degree {self.degree}")
        return Poly(self[d - k] for k in range(d + 1))

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def render(self, var: str = "z") -> str:
        return render_poly(self.coeffs, var)

    def __str__(self) -> str:
        return self.render()


def render_poly(coeffs: Sequence[int], var: str = "z") -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Exact division over the rationals (used only for GCD reduction)
# ---------------------------------------------------------------------------

def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qdivmod(a: Sequence, b: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        s = len(a) - len(b)
        q[s] = f
        for i, bc in enumerate(b):
            a[s + i] -= f * bc
        a.pop()
        _trim(a)
    return q, a


def _qgcd(a: Sequence, b: Sequence) -> list[Fraction]:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return a


def _as_ints(c: Sequence[Fraction], what: str) -> list[int]:
    out = []
    for x in c:
        if x.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {x} in reduced {what}")
        out.append(int(x))
    return out


def poly_divexact(a: Poly, b: Poly) -> Poly:
    q, r = _qdivmod(a.coeffs, b.coeffs)
    if r:
        raise ArithmeticError(f"{b} does not divide {a}")
    return Poly(_as_ints(q, "quotient"))


# ---------------------------------------------------------------------------
# Sequences and generating functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CountSeq:
    """Finite prefix ``a_offset, a_{offset+1}, ...`` of an integer sequence."""

    offset: int
    values: tuple[int, ...] = field(default=())

    def __init__(self, offset: int, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("a CountSeq needs at least one value")
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def stop(self) -> int:
        """One past the last covered index."""
        return self.offset + len(self.values)

    def at(self, n: int) -> int:
        if not self.offset <= n < self.stop:
            raise IndexError(f"index {n} outside {self.offset}..{self.stop - 1}")
        return self.values[n - self.offset]

    def items(self) -> list[tuple[int, int]]:
        return list(enumerate(self.values, start=self.offset))

    def from_index(self, n: int) -> CountSeq:
        return CountSeq(n, self.values[n - self.offset:])


@dataclass(frozen=True)
class RationalGF:
    """Reduced quotient ``num / den`` with ``den(0) == 1``."""

    num: Poly
    den: Poly

    def __init__(self, num: Poly | Iterable[int], den: Poly | Iterable[int] = (1,)):
        num = num if isinstance(num, Poly) else Poly(num)
        den = den if isinstance(den, Poly) else Poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = _qgcd(num.coeffs, den.coeffs)
            if len(g) > 1:
                # exact over Q: g divides both
                nq, _ = _qdivmod(num.coeffs, g)
                dq, _ = _qdivmod(den.coeffs, g)
            else:
                nq, dq = [Fraction(c) for c in num.coeffs], [Fraction(c) for c in den.coeffs]
        else:
            nq, dq = [], [Fraction(1)]
        if dq[0] == 0:
            raise ValueError(f"({num}) / ({den}) is not a power series at z = 0")
        c0 = dq[0]
        object.__setattr__(self, "num", Poly(_as_ints([x / c0 for x in nq], "numerator")))
        object.__setattr__(self, "den", Poly(_as_ints([x / c0 for x in dq], "denominator")))

    def __add__(self, other: RationalGF) -> RationalGF:
        return RationalGF(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RationalGF) -> RationalGF:
        return RationalGF(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: RationalGF | int) -> RationalGF:
        if isinstance(other, int):
            return RationalGF(self.num * other, self.den)
        return RationalGF(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def shift(self, k: int) -> RationalGF:
        """Multiply by ``z**k``."""
        return RationalGF(self.num.shift(k), self.den)

    def tail(self, start: int) -> RationalGF:
        """GF of the same sequence with every term below index ``start`` zeroed."""
        head = Poly(series_coeffs(self, start).values) if start > 0 else Poly()
        return RationalGF(self.num - head * self.den, self.den)

    def coeffs(self, count: int) -> CountSeq:
        return series_coeffs(self, count)

    def render(self, var: str = "z") -> str:
        return f"({self.num.render(var)}) / ({self.den.render(var)})"

    def __str__(self) -> str:
        return self.render()


def char_poly_reverse(a: IntMatrix) -> Poly:
    """``det(I - z*a)`` via the Faddeev-LeVerrier iteration.

    With ``det(x*I - a) = x^m + c_1 x^(m-1) + ... + c_m`` the reversed
    polynomial is ``1 + c_1 z + ... + c_m z^m``.  Each step divides a trace
    by ``k``; the quotient is always an integer.
    """
    m = a.dim
    coeffs = [1]
    mk = None
    for k in range(1, m + 1):
        c_prev = coeffs[-1]
        if mk is None:
            mk = IntMatrix(tuple(tuple(c_prev * (i == j) for j in range(m)) for i in range(m)))
        else:
            am = mat_mul(a, mk)
            mk = IntMatrix(tuple(
                tuple(x + c_prev * (i == j) for j, x in enumerate(r)) for i, r in enumerate(am.rows)
            ))
        t = trace(mat_mul(a, mk))
        if t % k:
            raise ArithmeticError(f"Faddeev-LeVerrier trace {t} not divisible by {k}")
        coeffs.append(-t // k)
    return Poly(coeffs)


def trace_gf(a: IntMatrix) -> RationalGF:
    """Generating function of ``tr(a**n)`` for n >= 0, i.e. ``m - z F'(z) / F(z)``."""
    f = char_poly_reverse(a)
    return RationalGF(f * a.dim - f.derivative().shift(1), f)


def series_coeffs(gf: RationalGF, count: int) -> CountSeq:
    """First ``count`` Taylor coefficients of ``gf`` at z = 0."""
    den = gf.den.coeffs
    if not den or den[0] != 1:
        raise ValueError(f"denominator constant term must be 1, got {gf.den}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    out: list[int] = []
    for n in range(count):
        acc = gf.num[n]
        for k in range(1, min(len(den), n + 1)):
            acc -= den[k] * out[n - k]
        out.append(acc)
    return CountSeq(0, out)


def check_recurrence(seq: CountSeq, rec: Sequence[int], from_index: int | None = None) -> bool:
    """True iff ``a_n = rec[0] a_{n-1} + ... + rec[d-1] a_{n-d}`` for every covered n >= from_index."""
    d = len(rec)
    start = seq.offset + d if from_index is None else from_index
    if start - d < seq.offset or start >= seq.stop:
        raise ValueError(
            f"sequence covers {seq.offset}..{seq.stop - 1}; a depth-{d} check from {start} "
            f"needs indices {start - d}..{start}"
        )
    return all(
        seq.at(n) == sum(c * seq.at(n - k) for k, c in enumerate(rec, start=1))
        for n in range(start, seq.stop)
    )


def recurrence_denominator(rec: Sequence[int]) -> Poly:
    return Poly([1] + [-c for c in rec])


def gf_from_recurrence(
    initial: CountSeq | Sequence[int], rec: Sequence[int], offset: int | None = None
) -> RationalGF:
    """GF of the sequence fixed by ``initial`` and continued by ``rec``.

    Terms below the offset are zero.  The recurrence is assumed to hold for
    every index past the supplied initial values, so at least ``len(rec)``
    values are needed.
    """
    if isinstance(initial, CountSeq):
        if offset is not None and offset != initial.offset:
            raise ValueError(f"offset {offset} disagrees with sequence offset {initial.offset}")
        offset, values = initial.offset, initial.values
    else:
        offset, values = offset or 0, tuple(initial)
    if len(values) < len(rec):
        raise ValueError(f"need at least {len(rec)} initial values, got {len(values)}")
    den = recurrence_denominator(rec)
    head = Poly(values).shift(offset)
    return RationalGF((head * den).truncate(offset + len(values)), den)


def largest_real_root(p: Poly | Sequence[int], tol: float = 1e-9, grid: int = 4096) -> float:
    """Largest real root of ``p`` in ``[0, 1 + max|c_i| / |lead|]``.

    The bracket is scanned from the top for a sign change and then bisected.
    Values are evaluated exactly, so the sign tests are reliable; roots of
    even multiplicity without a sign change are not detected.
    """
    p = p if isinstance(p, Poly) else Poly(p)
    if not p:
        raise ValueError("zero polynomial")
    lead = p.coeffs[-1]
    bound = 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), abs(lead))
    step = bound / grid
    hi = bound
    f_hi = p(hi)
    for k in range(grid - 1, -1, -1):
        lo = step * k
        f_lo = p(lo)
        if f_lo == 0:
            return float(lo)
        if (f_lo < 0) != (f_hi < 0):
            break
        hi, f_hi = lo, f_lo
    else:
        raise ValueError(f"no real root of {p} found in [0, {float(bound)}]")
    lo = Fraction(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        f_mid = p(mid)
        if f_mid == 0:
            return float(mid)
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return float((lo + hi) / 2)
