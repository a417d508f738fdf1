"""Exact univariate polynomial algebra over the rationals.

All coefficients are `fractions.Fraction`, so algebraic identities can be
asserted with zero tolerance.  On top of the generic :class:`RatPoly` /
:class:`RatFun` types the module builds the classical generalized Laguerre
polynomials with rational parameter and the exceptional X_m Laguerre
polynomials obtained from them by the standard composition formula.

Conventions:

* the Laguerre index ``n = -1`` is legal and denotes the zero polynomial
  (needed inside the exceptional composition when ``n == m``);
* the parameter of a Laguerre polynomial must be rational — every instance
  used downstream is an integer or half-integer, for which the Gamma-ratio
  coefficients of the recurrence reduce to exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar | str) -> Fraction:
    if isinstance(value, float):
        raise TypeError("exact polynomial coefficients must be rational, got float")
    return Fraction(value)


class RatPoly:
    """Dense univariate polynomial with exact rational coefficients.

    Immutable; the coefficient tuple is stored lowest power first with
    trailing zeros stripped, so the zero polynomial has an empty tuple and
    degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()) -> None:
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RatPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> "RatPoly":
        return cls((c,))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def lowest_index(self) -> int:
        """Smallest power with a nonzero coefficient (0 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def lowest_coeff(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no lowest coefficient")
        return self.coeffs[self.lowest_index()]

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RatPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "RatPoly | Scalar") -> "RatPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __sub__(self, other: "RatPoly | Scalar") -> "RatPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "RatPoly | Scalar") -> "RatPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "RatPoly | Scalar") -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return RatPoly(tuple(c * q for c in self.coeffs))
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = RatPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        if dq < 0:
            return RatPoly.zero(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / other.leading
        for k in range(dq, -1, -1):
            c = rem[other.degree + k] * inv_lead
            quo[k] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[j + k] -= c * b
        return RatPoly(quo), RatPoly(rem[: other.degree])

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        """Divide, asserting the remainder vanishes."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("polynomial division left a nonzero remainder")
        return q

    # -- calculus and evaluation -------------------------------------------

    def derivative(self, order: int = 1) -> "RatPoly":
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        p = self
        for _ in range(order):
            p = RatPoly(tuple(c * (i + 1) for i, c in enumerate(p.coeffs[1:])))
        return p

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int arguments, float otherwise."""
        if isinstance(x, (int, Fraction)):
            acc: Fraction = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        xf = float(x)
        accf = 0.0
        for c in reversed(self.coeffs):
            accf = accf * xf + float(c)
        return accf

    def scale_arg(self, c: Scalar) -> "RatPoly":
        """Return p(c*x)."""
        q = Fraction(c)
        power = Fraction(1)
        out = []
        for coeff in self.coeffs:
            out.append(coeff * power)
            power *= q
        return RatPoly(out)

    def shift_down(self, k: int) -> "RatPoly":
        """Divide by x**k; every dropped coefficient must be zero."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ArithmeticError("polynomial not divisible by x**%d" % k)
        return RatPoly(self.coeffs[k:])

    def monic(self) -> "RatPoly":
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    # -- presentation and serialization --------------------------------------

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if abs(c) != 1 else ("-x" if c < 0 else "x"))
            else:
                parts.append(f"{c}*x^{i}" if abs(c) != 1 else (f"-x^{i}" if c < 0 else f"x^{i}"))
        return " + ".join(parts).replace("+ -", "- ")

    def coeff_strings(self) -> list[str]:
        """Exactness-preserving form: ["num/den", ...], lowest power first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, strings: Sequence[str]) -> "RatPoly":
        return cls(tuple(Fraction(s) for s in strings))


def _coerce_poly(value: "RatPoly | Scalar") -> "RatPoly":
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RatPoly.constant(value)
    return NotImplemented


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


class RatFun:
    """Quotient of two RatPoly, kept fully reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: RatPoly | Scalar, den: RatPoly | Scalar = 1) -> None:
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = RatPoly.zero(), RatPoly.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lead = den.leading
            if lead != 1:
                num, den = num * (1 / lead), den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RatFun is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, RatPoly)):
            return self == RatFun(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __add__(self, other) -> "RatFun":
        other = _coerce_fun(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFun":
        other = _coerce_fun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        other = _coerce_fun(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatFun":
        other = _coerce_fun(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _coerce_fun(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFun":
        other = _coerce_fun(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def derivative(self) -> "RatFun":
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __repr__(self) -> str:
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == RatPoly.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _coerce_fun(value) -> "RatFun":
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (int, Fraction, RatPoly)):
        return RatFun(value)
    return NotImplemented


# -- real-root counting ------------------------------------------------------


def _squarefree(p: RatPoly) -> RatPoly:
    g = poly_gcd(p, p.derivative())
    if g.degree > 0:
        p = p.exact_div(g)
    return p


def _sturm_chain(p: RatPoly) -> list[RatPoly]:
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
        if chain[-1].is_zero:
            chain.pop()
            break
    return [q for q in chain if not q.is_zero]

def _sign_at(p: RatPoly, point: Fraction | None, positive_infinity: bool) -> int:
    if point is None:
        lead = p.leading if not p.is_zero else Fraction(0)
        if lead == 0:
            return 0
        if positive_infinity:
            return 1 if lead > 0 else -1
        sign = 1 if lead > 0 else -1
        return sign if p.degree % 2 == 0 else -sign

    v = p(point)
    return 0 if v == 0 else (1 if v > 0 else -1)


def _variations(signs: list[int]) -> int:
    filtered = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a * b < 0)


def count_real_roots(p: RatPoly, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Count distinct real roots of p in (lo, hi]; None means -inf / +inf.

    Uses an exact Sturm chain on the squarefree part, so the answer is a
    certificate, not an estimate.
    """
    if p.is_zero:
        raise ValueError("root counting on the zero polynomial")
    if p.degree == 0:
        return 0
    sf = _squarefree(p)
    chain = _sturm_chain(sf)
    at_lo = _variations([_sign_at(q, lo, positive_infinity=False) for q in chain])
    at_hi = _variations([_sign_at(q, hi, positive_infinity=True) for q in chain])
    return at_lo - at_hi


def count_positive_roots(p: RatPoly) -> int:
    """Distinct roots in the open interval (0, +inf)."""
    return count_real_roots(p, lo=Fraction(0), hi=None)


# -- Laguerre families -------------------------------------------------------


def rising(x: Fraction, n: int) -> Fraction:
    """Pochhammer product x (x+1) ... (x+n-1); empty product for n = 0."""
    out = Fraction(1)
    for j in range(n):
        out *= x + j
    return out


def laguerre(n: int, alpha: Scalar) -> RatPoly:
    """Generalized Laguerre polynomial L_n^alpha by the three-term recurrence.

    n = -1 returns the zero polynomial (ladder convention); n < -1 rejected.
    """
    if n < -1:
        raise ValueError(f"Laguerre index must be >= -1, got {n}")
    if n == -1:
        return RatPoly.zero()
    a = Fraction(alpha)
    prev = RatPoly.one()
    if n == 0:
        return prev
    cur = RatPoly((1 + a, -1))
    for k in range(1, n):
        nxt = (RatPoly((2 * k + 1 + a, -1)) * cur - (k + a) * prev) * Fraction(1, k + 1)
        prev, cur = cur, nxt
    return cur


def laguerre_derivative(n: int, alpha: Scalar, order: int) -> RatPoly:
    """order-th derivative of L_n^alpha, by coefficient differentiation.

    Equals (-1)**order * L_{n-order}^{alpha+order} for order <= n and the
    zero polynomial above that; the index-shift route is kept in the tests
    as an independent check.
    """
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    return laguerre(n, alpha).derivative(order)


def exceptional_laguerre(n: int, m: int, k: Scalar) -> RatPoly:
    """Exceptional X_m Laguerre polynomial of degree n via the composition

        Lhat_{n,m}^k(x) = L_m^k(-x) L_{n-m}^{k-1}(x) + L_m^{k-1}(-x) L_{n-m-1}^k(x)

    valid for n >= m; the last factor uses the L_{-1} = 0 convention when
    n = m.  m = 0 reduces to the classical L_n^k.
    """
    if m < 0:
        raise ValueError(f"exceptional Laguerre needs m >= 0, got {m}")
    if n < m:
        raise ValueError(f"exceptional Laguerre requires n >= m, got n={n}, m={m}")
    kf = Fraction(k)
    first = laguerre(m, kf).scale_arg(-1) * laguerre(n - m, kf - 1)
    second = laguerre(m, kf - 1).scale_arg(-1) * laguerre(n - m - 1, kf)
    return first + second


def poly_eval(p: RatPoly, x):
    """Evaluate p at x: exact for rational x, Horner double precision for float."""
    return p(x)


# -- serialization helpers ----------------------------------------------------


def poly_to_json(p: RatPoly) -> list[str]:
    return p.coeff_strings()


def poly_from_json(data: Sequence[str]) -> RatPoly:
    return RatPoly.from_coeff_strings(data)
