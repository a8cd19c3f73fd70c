"""Finite-precision arithmetic in Q_p.

A nonzero value is stored as ``p**valuation * unit`` where ``unit`` is known
modulo ``p**prec`` (relative precision).  Zero is its own state: valuation is
``math.inf`` and ``prec`` holds the absolute precision to which the value is
known to vanish (``math.inf`` for an exact zero).

Precision rules
---------------
* add/sub: absolute precision is the minimum of the operands' absolute
  precisions; cancellation of leading digits lowers the relative precision.
* mul/div: relative precision is the minimum of the operands'.
* ``iwasawa_log`` and ``padic_exp`` are isometries on ``1 + pZ_p`` for odd
  ``p``, so they lose nothing: the log of a unit known to relative precision
  ``r`` is returned to absolute precision ``r``.  Internally the series are
  summed with guard digits to absorb the ``1/k`` and ``1/k!`` denominators.
  The resulting worst-case loss table is ``LOG_LOSS[p] = 0`` for every odd
  prime; see :func:`log_precision_loss`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

INF = math.inf

Scalar = Union[int, Fraction, "PadicNumber"]


class PrecisionError(ArithmeticError):
    """Raised when a result cannot be certified at the requested precision."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vp(n: int, p: int) -> float:
    """p-adic valuation of an integer (``inf`` for 0)."""
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def inverse_mod_prime_power(u: int, p: int, k: int) -> int:
    """Inverse of a p-adic unit modulo ``p**k`` by Newton lifting from mod p."""
    if u % p == 0:
        raise ZeroDivisionError(f"{u} is not a unit mod {p}")
    y = pow(u, p - 2, p)
    e = 1
    while e < k:
        e = min(2 * e, k)
        m = p**e
        y = y * (2 - u * y) % m
    return y % p**k


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")


@dataclass(frozen=True)
class PadicNumber:
    p: int
    valuation: float
    unit: int
    prec: float

    def __post_init__(self):
        if self.valuation == INF:
            if self.unit != 0:
                raise ValueError("zero state must carry unit 0")
        else:
            if self.prec < 1:
                raise ValueError("nonzero value needs relative precision >= 1")
            if not 0 < self.unit < self.p**self.prec or self.unit % self.p == 0:
                raise ValueError("unit digits out of range or divisible by p")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, p: int, absprec: float = INF) -> PadicNumber:
        return cls(p, INF, 0, absprec)

    @classmethod
    def from_rational(cls, num: int, den: int, p: int, prec: int) -> PadicNumber:
        return padic_from_rational(num, den, p, prec)

    @classmethod
    def from_int(cls, n: int, p: int, prec: int) -> PadicNumber:
        return padic_from_rational(n, 1, p, prec)

    @classmethod
    def from_absolute(cls, n: int, p: int, absprec: float) -> PadicNumber:
        """The integer ``n`` regarded as known modulo ``p**absprec``."""
        if absprec == INF:
            raise ValueError("use from_rational for exact values")
        m = p**absprec if absprec > 0 else 1
        r = n % m if absprec > 0 else 0
        if r == 0:
            return cls.zero(p, absprec)
        v = int(vp(r, p))
        return cls(p, v, (r // p**v) % p ** (absprec - v), absprec - v)

    # -- basic properties -------------------------------------------------

    def is_zero(self) -> bool:
        return self.valuation == INF

    @property
    def absprec(self) -> float:
        if self.is_zero():
            return self.prec
        return self.valuation + self.prec

    def is_unit(self) -> bool:
        return self.valuation == 0

    def is_integral(self) -> bool:
        return self.valuation >= 0

    def residue(self) -> int:
        """Reduction modulo p of an integral value."""
        if self.valuation < 0:
            raise ValueError("not integral")
        if self.valuation > 0:
            return 0
        return self.unit % self.p

    def lift(self) -> int:
        """Integer representative of an integral value modulo p**absprec."""
        if self.is_zero():
            return 0
        if self.valuation < 0:
            raise ValueError("value is not integral")
        return self.unit * self.p**self.valuation

    def to_fraction(self) -> Fraction:
        """Rational representative ``unit * p**valuation``."""
        if self.is_zero():
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.valuation

    def reduce(self, absprec: float) -> PadicNumber:
        """Forget digits beyond absolute precision ``absprec``."""
        if absprec >= self.absprec:
            return self
        if self.is_zero() or absprec <= self.valuation:
            return PadicNumber.zero(self.p, absprec)
        rel = absprec - self.valuation
        return PadicNumber(self.p, self.valuation, self.unit % self.p**rel, rel)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: Scalar, absprec: float) -> PadicNumber:
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError(f"prime mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                return PadicNumber.zero(self.p)
            v = vp(other.numerator, self.p) - vp(other.denominator, self.p)
            target = absprec if absprec != INF else v + 1
            rel = max(int(target - v), 1)
            return padic_from_rational(other.numerator, other.denominator, self.p, rel)
        return NotImplemented

    def __add__(self, other: Scalar) -> PadicNumber:
        o = self._coerce(other, self.absprec)
        if o is NotImplemented:
            return NotImplemented
        absprec = min(self.absprec, o.absprec)
        if self.is_zero() and o.is_zero():
            return PadicNumber.zero(self.p, absprec)
        if self.is_zero():
            return o.reduce(absprec)
        if o.is_zero():
            return self.reduce(absprec)
        m = min(self.valuation, o.valuation)
        x = self.unit * self.p ** (self.valuation - m) + o.unit * self.p ** (o.valuation - m)
        return _normalize(self.p, x, m, absprec)

    __radd__ = __add__

    def __neg__(self) -> PadicNumber:
        if self.is_zero():
            return self
        return PadicNumber(self.p, self.valuation, (-self.unit) % self.p**self.prec, self.prec)

    def __sub__(self, other: Scalar) -> PadicNumber:
        o = self._coerce(other, self.absprec)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> PadicNumber:
        return (-self) + other

    def _coerce_exact(self, other: Scalar) -> PadicNumber:
        # exact rationals are taken at the caller's relative precision
        if isinstance(other, (int, Fraction)) and other != 0:
            other = Fraction(other)
            rel = 1 if self.is_zero() else int(self.prec)
            return padic_from_rational(other.numerator, other.denominator, self.p, rel)
        return self._coerce(other, INF)

    def __mul__(self, other: Scalar) -> PadicNumber:
        o = self._coerce_exact(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            shift_a = 0 if o.is_zero() else o.valuation
            shift_b = 0 if self.is_zero() else self.valuation
            a = self.absprec + shift_a if self.is_zero() else INF
            b = o.absprec + shift_b if o.is_zero() else INF
            if self.is_zero() and o.is_zero():
                return PadicNumber.zero(self.p, self.absprec + o.absprec)
            return PadicNumber.zero(self.p, min(a, b))
        prec = min(self.prec, o.prec)
        unit = self.unit * o.unit % self.p**prec
        return PadicNumber(self.p, self.valuation + o.valuation, unit, prec)

    __rmul__ = __mul__

    def inverse(self) -> PadicNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of p-adic zero")
        return PadicNumber(
            self.p, -self.valuation, inverse_mod_prime_power(self.unit, self.p, self.prec), self.prec
        )

    def __truediv__(self, other: Scalar) -> PadicNumber:
        o = self._coerce_exact(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by p-adic zero")
        if self.is_zero():
            return PadicNumber.zero(self.p, self.absprec - o.valuation)
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> PadicNumber:
        return self.inverse() * other

    def __pow__(self, n: int) -> PadicNumber:
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_zero():
            return self if n > 0 else padic_from_rational(1, 1, self.p, 1)
        return PadicNumber(
            self.p, self.valuation * n, pow(self.unit, n, self.p**self.prec), self.prec
        )

    # -- comparison -------------------------------------------------------

    def agreement(self, other: Scalar) -> float:
        """Absolute precision to which two values are known to agree."""
        o = self._coerce(other, self.absprec)
        d = self - o
        if d.is_zero():
            return d.absprec
        return d.valuation

    def equals(self, other: Scalar) -> bool:
        """Equality up to the smaller of the two absolute precisions."""
        o = self._coerce(other, self.absprec)
        return (self - o).is_zero()

    def __repr__(self) -> str:
        if self.is_zero():
            return f"O({self.p}^{self.prec})" if self.prec != INF else "0"
        return f"{self.unit}*{self.p}^{self.valuation} + O({self.p}^{self.absprec})"

    # -- serialization ----------------------------------------------------

    def to_record(self) -> dict:
        if self.is_zero():
            return {
                "p": self.p,
                "valuation": None,
                "unit_digits": "0",
                "prec": None if self.prec == INF else int(self.prec),
            }
        return {
            "p": self.p,
            "valuation": int(self.valuation),
            "unit_digits": str(self.unit),
            "prec": int(self.prec),
        }

    @classmethod
    def from_record(cls, rec: dict) -> PadicNumber:
        if rec["valuation"] is None:
            return cls.zero(rec["p"], INF if rec["prec"] is None else rec["prec"])
        return cls(rec["p"], rec["valuation"], int(rec["unit_digits"]), rec["prec"])


def _normalize(p: int, x: int, shift: float, absprec: float) -> PadicNumber:
    """``x * p**shift`` known to absolute precision ``absprec``."""
    rel_all = absprec - shift
    if absprec == INF:
        if x == 0:
            return PadicNumber.zero(p)
        raise PrecisionError("exact nonzero values need an explicit precision")
    if rel_all <= 0:
        return PadicNumber.zero(p, absprec)
    x %= p**rel_all
    if x == 0:
        return PadicNumber.zero(p, absprec)
    v = int(vp(x, p))
    prec = rel_all - v
    return PadicNumber(p, shift + v, (x // p**v) % p**prec, prec)


def padic_from_rational(num: int, den: int, p: int, prec: int) -> PadicNumber:
    """Image of ``num/den`` in Q_p with relative precision ``prec``."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    _check_prime(p)
    if prec < 1:
        raise ValueError("prec must be positive")
    if num == 0:
        return PadicNumber.zero(p)
    v = int(vp(num, p) - vp(den, p))
    n = num // p ** int(vp(num, p))
    d = den // p ** int(vp(den, p))
    m = p**prec
    unit = n * inverse_mod_prime_power(d % m, p, prec) % m
    return PadicNumber(p, v, unit, prec)


def arith(a: PadicNumber, b: PadicNumber, op: str) -> PadicNumber:
    if a.p != b.p:
        raise ValueError(f"prime mismatch: {a.p} vs {b.p}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def teichmuller(x: PadicNumber) -> PadicNumber:
    """The (p-1)-st root of unity congruent to the unit ``x`` mod p."""
    if x.is_zero() or x.valuation != 0:
        raise ValueError("teichmuller needs a unit")
    prec = int(x.prec)
    m = x.p**prec
    return PadicNumber(x.p, 0, pow(x.unit, x.p ** (prec - 1), m), prec)


def teichmuller_int(a: int, p: int, prec: int) -> int:
    """Integer representative of omega(a) mod p**prec."""
    return pow(a % p, p ** (prec - 1), p**prec)


def log_precision_loss(p: int) -> int:
    """Worst-case digits lost by :func:`iwasawa_log` (0 for odd p)."""
    return 0 if p > 2 else 2


def _log_one_plus(z: int, vz: int, p: int, r: int) -> int:
    """log(1+z) mod p**r for integer z with v_p(z) = vz >= 1, p odd."""
    if z == 0:
        return 0
    terms = 1
    while (terms + 1) * vz - math.floor(math.log(terms + 1, p) + 1e-12) < r:
        terms += 1
    guard = math.floor(math.log(terms, p) + 1e-12) + 1
    mod = p ** (r + guard)
    acc = 0
    zk = 1
    for k in range(1, terms + 1):
        zk = zk * z % mod
        e = int(vp(k, p))
        kk = k // p**e
        num = zk // p**e
        term = num * inverse_mod_prime_power(kk, p, r + guard) % p ** (r + guard - e)
        acc += term if k % 2 == 1 else -term
    return acc % p**r


def iwasawa_log(x: PadicNumber) -> PadicNumber:
    """Iwasawa logarithm: log_p(p) = 0 and roots of unity map to 0."""
    if x.is_zero():
        raise ValueError("log of zero")
    p = x.p
    if p == 2:
        raise ValueError("only odd p is supported")
    r = int(x.prec)
    w = pow(x.unit, p - 1, p ** (r + 1))
    z = (w - 1) % p ** (r + 1)
    if z % p**r == 0:
        return PadicNumber.zero(p, r)
    vz = int(vp(z, p))
    lg = _log_one_plus(z, vz, p, r)
    lg = lg * inverse_mod_prime_power(p - 1, p, r) % p**r
    return PadicNumber.from_absolute(lg, p, r)


def padic_exp(x: PadicNumber) -> PadicNumber:
    """exp on its disc of convergence v_p(x) >= 1 (odd p)."""
    p = x.p
    if p == 2:
        raise ValueError("only odd p is supported")
    r = x.absprec
    if x.is_zero():
        if r == INF:
            return padic_from_rational(1, 1, p, 1)
        return padic_from_rational(1, 1, p, int(r))
    if x.valuation < 1:
        raise ValueError("exp diverges for valuation < 1")
    r = int(r)
    z = x.lift()
    vz = int(x.valuation)
    # v(z^k/k!) >= k*vz - (k-1)/(p-1)
    terms = 0
    while (terms + 1) * vz - terms / (p - 1) < r:
        terms += 1
    guard = terms // (p - 1) + 1
    mod = p ** (r + guard)
    acc = 1
    zk = 1
    fact = 1
    for k in range(1, terms + 1):
        zk = zk * z % mod
        fact *= k
        e = int(vp(fact, p))
        u = fact // p**e
        term = (zk // p**e) * inverse_mod_prime_power(u % p ** (r + guard), p, r + guard)
        acc += term
    return PadicNumber.from_absolute(acc % p**r, p, r)


def hensel_sqrt(a: int, p: int, prec: int) -> int:
    """A square root of the unit ``a`` modulo ``p**prec`` (odd p), lifted from
    the least root mod p."""
    if a % p == 0 or pow(a % p, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a nonzero square mod {p}")
    r = next(t for t in range(1, p) if (t * t - a) % p == 0)
    e = 1
    while e < prec:
        e = min(2 * e, prec)
        m = p**e
        r = (r - (r * r - a) * inverse_mod_prime_power(2 * r, p, e)) % m
    return r % p**prec
