"""Unramified extensions Z_q of Z_p and the tower Z_q[pi], pi^(p-1) = -p.

Elements of Z_q are tuples of ``f`` integers (coefficients of 1, x, ...,
x^(f-1) modulo the field's modulus).  Residue-field elements are tuples of
the same shape with entries mod p.

The modulus is chosen deterministically: encode a monic degree-f polynomial
``x^f + c_(f-1) x^(f-1) + ... + c_0`` by the integer ``sum c_i p^i`` and take
the smallest code whose polynomial is irreducible mod p.  Its coefficients,
read as integers in ``[0, p)``, are the lift to Z_p.

Elements of the tower are stored in the basis ``1, pi, ..., pi^(p-2)`` over
Z_q; precision is tracked in pi-units (``pi_prec``), so coordinate ``i`` is
known modulo ``p**ceil((pi_prec - i)/(p-1))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .padic import INF, PadicNumber, is_prime, vp

Poly = tuple  # coefficients, low degree first


# -- polynomials over F_p ---------------------------------------------------

def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _fp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list, list]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = (a[k + i] - c * y) % p
        _trim(a)
    return _trim(q), a


def _fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    return a


def _fp_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list:
    result = [1]
    b = _fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, b, p), mod, p)[1]
        b = _fp_divmod(_fp_mul(b, b, p), mod, p)[1]
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_mod_p(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    g = _trim([c % p for c in poly])
    f = len(g) - 1
    if f < 1:
        return False
    if f == 1:
        return True
    x = [0, 1]
    xq = _fp_powmod(x, p**f, g, p)
    if _trim([(a - b) % p for a, b in zip(xq + [0] * 2, x + [0] * len(xq))]) != []:
        return False
    for ell in _prime_factors(f):
        h = _fp_powmod(x, p ** (f // ell), g, p)
        diff = [0] * max(len(h), 2)
        for i, c in enumerate(h):
            diff[i] = c
        diff[1] = (diff[1] - 1) % p
        if len(_fp_gcd(g, _trim(diff), p)) != 1:
            return False
    return True


def least_irreducible(p: int, f: int) -> tuple:
    """Monic irreducible of degree f with the smallest code sum c_i p^i."""
    for code in range(p**f):
        coeffs = [(code // p**i) % p for i in range(f)] + [1]
        if is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


# -- the unramified field ---------------------------------------------------

@dataclass(frozen=True)
class UnramifiedField:
    p: int
    f: int
    modulus: tuple
    prec: int

    @property
    def q(self) -> int:
        return self.p**self.f

    # Z_q arithmetic modulo p**k ---------------------------------------------

    def zq(self, c: int | Sequence[int]) -> tuple:
        if isinstance(c, int):
            return (c,) + (0,) * (self.f - 1)
        c = tuple(c)
        return c + (0,) * (self.f - len(c))

    def zq_add(self, a, b, k: int) -> tuple:
        m = self.p**k
        return tuple((x + y) % m for x, y in zip(a, b))

    def zq_sub(self, a, b, k: int) -> tuple:
        m = self.p**k
        return tuple((x - y) % m for x, y in zip(a, b))

    def zq_scale(self, a, s: int, k: int) -> tuple:
        m = self.p**k
        return tuple(x * s % m for x in a)

    def zq_mul(self, a, b, k: int) -> tuple:
        f = self.f
        m = self.p**k
        if f == 1:
            return (a[0] * b[0] % m,)
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        mod = self.modulus
        for d in range(2 * f - 2, f - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(f):
                    prod[d - f + i] -= c * mod[i]
        return tuple(x % m for x in prod[:f])

    def zq_pow(self, a, e: int, k: int) -> tuple:
        result = self.zq(1)
        b = tuple(x % self.p**k for x in a)
        while e:
            if e & 1:
                result = self.zq_mul(result, b, k)
            b = self.zq_mul(b, b, k)
            e >>= 1
        return result

    def zq_valuation(self, a) -> float:
        return min(vp(x, self.p) for x in a)

    def zq_inverse(self, a, k: int) -> tuple:
        """Inverse of a unit of Z_q mod p**k, Newton-lifted from F_q."""
        r = self.residue_inverse(tuple(x % self.p for x in a))
        y = tuple(r)
        e = 1
        while e < k:
            e = min(2 * e, k)
            two = self.zq(2)
            y = self.zq_mul(y, self.zq_sub(two, self.zq_mul(a, y, e), e), e)
        return tuple(x % self.p**k for x in y)

    # residue field ----------------------------------------------------------

    def residue_mul(self, a, b) -> tuple:
        return self.zq_mul(a, b, 1)

    def residue_pow(self, a, e: int) -> tuple:
        return self.zq_pow(a, e, 1)

    def residue_inverse(self, a) -> tuple:
        if not any(x % self.p for x in a):
            raise ZeroDivisionError("zero has no inverse")
        return self.residue_pow(a, self.q - 2)

    def residue_elements(self) -> Iterator[tuple]:
        p, f = self.p, self.f
        for code in range(p**f):
            yield tuple((code // p**i) % p for i in range(f))

    def frobenius(self, a) -> tuple:
        return self.residue_pow(a, self.p)

    @cached_property
    def generator(self) -> tuple:
        """Least generator of F_q^* (exhaustive order check)."""
        q = self.q
        if q > 10**6:
            raise ValueError("residue field too large for exhaustive search")
        one = self.zq(1)
        factors = _prime_factors(q - 1)
        for a in self.residue_elements():
            if not any(a):
                continue
            if all(self.residue_pow(a, (q - 1) // ell) != one for ell in factors):
                return a
        raise RuntimeError("no generator")  # pragma: no cover

    def teichmuller(self, r, k: int | None = None) -> tuple:
        """The (q-1)-st root of unity in Z_q lifting the residue ``r``."""
        k = self.prec if k is None else k
        if not any(x % self.p for x in r):
            raise ValueError("Teichmuller lift of 0")
        return self.zq_pow(tuple(x % self.p for x in r), self.q ** (k - 1), k)


def make_unramified(p: int, f: int, prec: int) -> UnramifiedField:
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if f < 1 or prec < 1:
        raise ValueError("degree and precision must be positive")
    return UnramifiedField(p, f, least_irreducible(p, f), prec)


def teichmuller_lift(F: UnramifiedField, r) -> tuple:
    return F.teichmuller(F.zq(r))


def trace_to_prime_field(F: UnramifiedField, x) -> int:
    """Tr(x) = x + x^p + ... + x^(p^(f-1)) for x in F_q, as an element of F_p."""
    x = F.zq(x)
    acc = F.zq(0)
    y = tuple(c % F.p for c in x)
    for _ in range(F.f):
        acc = F.zq_add(acc, y, 1)
        y = F.frobenius(y)
    if any(acc[1:]):
        raise AssertionError("trace left the prime field")  # pragma: no cover
    return acc[0]


# -- the tower Z_q[pi] ------------------------------------------------------

@dataclass(frozen=True)
class LocalFieldElement:
    base: UnramifiedField
    coords: tuple  # p-1 elements of Z_q
    pi_prec: float

    @property
    def p(self) -> int:
        return self.base.p

    def _coord_prec(self, i: int) -> int:
        return max(math.ceil((self.pi_prec - i) / (self.p - 1)), 0)

    def normalized(self) -> LocalFieldElement:
        coords = []
        for i, c in enumerate(self.coords):
            k = self._coord_prec(i)
            m = self.p**k
            coords.append(tuple(x % m for x in c))
        return LocalFieldElement(self.base, tuple(coords), self.pi_prec)

    def valuation(self) -> float:
        """pi-adic valuation; ``inf`` when zero to the known precision."""
        best = INF
        for i, c in enumerate(self.coords):
            v = self.base.zq_valuation(c)
            if v != INF:
                best = min(best, (self.p - 1) * v + i)
        return best if best < self.pi_prec else INF

    def is_zero(self) -> bool:
        return self.valuation() == INF

    def _work(self) -> int:
        return self._coord_prec(0)

    def __add__(self, other: LocalFieldElement) -> LocalFieldElement:
        prec = min(self.pi_prec, other.pi_prec)
        k = max(math.ceil(prec / (self.p - 1)), 1)
        coords = tuple(self.base.zq_add(a, b, k) for a, b in zip(self.coords, other.coords))
        return LocalFieldElement(self.base, coords, prec).normalized()

    def __neg__(self) -> LocalFieldElement:
        k = max(self._work(), 1)
        coords = tuple(self.base.zq_scale(c, -1, k) for c in self.coords)
        return LocalFieldElement(self.base, coords, self.pi_prec).normalized()

    def __sub__(self, other: LocalFieldElement) -> LocalFieldElement:
        return self + (-other)

    def __mul__(self, other) -> LocalFieldElement:
        F, p = self.base, self.p
        if isinstance(other, int):
            if other == 0:
                return zero_element(F, INF)
            e = int(vp(other, p))
            k = max(self._work(), 1) + e
            coords = tuple(F.zq_scale(c, other, k) for c in self.coords)
            return LocalFieldElement(F, coords, self.pi_prec + (p - 1) * e).normalized()
        va, vb = self.valuation(), other.valuation()
        prec = min(self.pi_prec + (vb if vb != INF else other.pi_prec),
                   other.pi_prec + (va if va != INF else self.pi_prec))
        k = max(math.ceil(prec / (p - 1)), 1)
        n = p - 1
        acc = [F.zq(0)] * n
        for i, a in enumerate(self.coords):
            if not any(a):
                continue
            for j, b in enumerate(other.coords):
                if not any(b):
                    continue
                t = F.zq_mul(a, b, k)
                d = i + j
                if d >= n:
                    d -= n
                    t = F.zq_scale(t, -p, k)
                acc[d] = F.zq_add(acc[d], t, k)
        return LocalFieldElement(F, tuple(acc), prec).normalized()

    __rmul__ = __mul__

    def scale(self, c) -> LocalFieldElement:
        """Multiply by an element of Z_q (given exactly or mod enough digits)."""
        k = max(self._work(), 1)
        coords = tuple(self.base.zq_mul(x, c, k) for x in self.coords)
        return LocalFieldElement(self.base, coords, self.pi_prec).normalized()

    def __pow__(self, e: int) -> LocalFieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        result = one_element(self.base, self.pi_prec)
        b = self
        while e:
            if e & 1:
                result = result * b
            b = b * b
            e >>= 1
        return result

    def inverse(self) -> LocalFieldElement:
        """Inverse of a unit (nonzero constant coordinate mod p)."""
        F = self.base
        c0 = self.coords[0]
        if not any(x % self.p for x in c0):
            raise ZeroDivisionError("not a unit of Z_q[pi]")
        k = self._work()
        y = embed(F, F.zq_inverse(c0, k), self.pi_prec)
        two = embed(F, F.zq(2), self.pi_prec)
        for _ in range(max(int(self.pi_prec).bit_length(), 1) + 1):
            y = y * (two - self * y)
        return y

    def div_pi_power(self, s: int) -> LocalFieldElement:
        """Exact division by pi**s; requires valuation >= s."""
        p, F = self.p, self.base
        n = p - 1
        v = self.valuation()
        if v < s:
            raise ArithmeticError(f"valuation {v} < {s}: not divisible by pi^{s}")
        a, b = divmod(s, n)
        pa = (-p) ** a
        coords = [F.zq(0)] * n
        for i, c in enumerate(self.coords):
            if not any(c):
                continue
            d = i - b
            if d < 0:
                # c * pi^(i-b) = c * pi^(i-b+n) / (-p)
                c = tuple(x // (-p) for x in c)
                d += n
                div = pa
            else:
                div = pa
            coords[d] = tuple(x // div for x in c)
        return LocalFieldElement(F, tuple(coords), self.pi_prec - s).normalized()

    def constant(self) -> tuple:
        """The Z_q coordinate; raises unless all pi-coordinates vanish."""
        if any(any(c) for c in self.coords[1:]):
            raise ArithmeticError("element is not in Z_q")
        return self.coords[0]

    def in_Zp(self) -> bool:
        return not any(any(c) for c in self.coords[1:]) and not any(self.coords[0][1:])

    def to_padic(self) -> PadicNumber:
        """Image in Z_p (p-precision floor(pi_prec/(p-1)))."""
        if not self.in_Zp():
            raise ArithmeticError("element does not lie in Z_p")
        k = math.floor(self.pi_prec / (self.p - 1)) if self.pi_prec != INF else self.base.prec
        return PadicNumber.from_absolute(self.coords[0][0], self.p, k)

    def to_record(self) -> dict:
        k = self._work()
        return {
            "p": self.p,
            "f": self.base.f,
            "pi_prec": None if self.pi_prec == INF else int(self.pi_prec),
            "coords": [
                [PadicNumber.from_absolute(x, self.p, max(self._coord_prec(i), 0)).to_record()
                 if self._coord_prec(i) > 0 else PadicNumber.zero(self.p, 0).to_record()
                 for x in c]
                for i, c in enumerate(self.coords)
            ],
            "work_prec": k,
        }


def zero_element(F: UnramifiedField, pi_prec: float) -> LocalFieldElement:
    return LocalFieldElement(F, tuple(F.zq(0) for _ in range(F.p - 1)), pi_prec)


def embed(F: UnramifiedField, c, pi_prec: float) -> LocalFieldElement:
    coords = [F.zq(0) for _ in range(F.p - 1)]
    coords[0] = F.zq(c)
    return LocalFieldElement(F, tuple(coords), pi_prec).normalized()


def one_element(F: UnramifiedField, pi_prec: float) -> LocalFieldElement:
    return embed(F, 1, pi_prec)


def pi_element(F: UnramifiedField, pi_prec: float) -> LocalFieldElement:
    coords = [F.zq(0) for _ in range(F.p - 1)]
    if F.p - 1 > 1:
        coords[1] = F.zq(1)
    else:  # pragma: no cover - p = 2 is excluded
        coords[0] = F.zq(-2)
    return LocalFieldElement(F, tuple(coords), pi_prec).normalized()


@dataclass(frozen=True)
class EisensteinExtension:
    """Q_q(pi) with pi^(p-1) = -p over a fixed unramified field."""

    base: UnramifiedField
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def default_pi_prec(self) -> int:
        return (self.p - 1) * self.base.prec

    def element(self, coords, pi_prec: float | None = None) -> LocalFieldElement:
        prec = self.default_pi_prec if pi_prec is None else pi_prec
        coords = tuple(self.base.zq(c) for c in coords)
        coords = coords + (self.base.zq(0),) * (self.p - 1 - len(coords))
        return LocalFieldElement(self.base, coords, prec).normalized()

    def one(self, pi_prec=None) -> LocalFieldElement:
        return one_element(self.base, self.default_pi_prec if pi_prec is None else pi_prec)

    def pi(self, pi_prec=None) -> LocalFieldElement:
        return pi_element(self.base, self.default_pi_prec if pi_prec is None else pi_prec)

    def zeta_p(self, pi_prec: int | None = None) -> LocalFieldElement:
        return zeta_p_element(self, pi_prec)


def _cyclotomic_w(p: int) -> list[int]:
    # Phi_p(1+y) = y^(p-1) + p * w(y),  w(y) = sum_{k=1}^{p-1} (C(p,k)/p) y^(k-1)
    return [math.comb(p, k) // p for k in range(1, p)]


def zeta_p_element(E: EisensteinExtension, pi_prec: int | None = None) -> LocalFieldElement:
    """The p-th root of unity with zeta_p = 1 + pi mod pi^2.

    Writing zeta_p = 1 + pi*s, the equation Phi_p(1 + pi s) = 0 becomes
    s^(p-1) = w(pi s), whose derivative at s = 1 is the unit p-1; Newton
    iteration from s = 1 converges quadratically.
    """
    prec = E.default_pi_prec if pi_prec is None else pi_prec
    key = ("zeta", prec)
    if key in E._cache:
        return E._cache[key]
    p, F = E.p, E.base
    if prec < 2:
        raise ValueError("pi-precision >= 2 is required to single out zeta_p")
    work = prec + p
    one = one_element(F, work)
    pi = pi_element(F, work)
    wcoef = _cyclotomic_w(p)

    def w_and_dw(y):
        # Horner for w(y) and w'(y)
        val = embed(F, wcoef[-1], work)
        der = zero_element(F, work)
        for c in reversed(wcoef[:-1]):
            der = der * y + val
            val = val * y + embed(F, c, work)
        return val, der

    s = one
    for _ in range(work.bit_length() + 2):
        y = pi * s
        w, dw = w_and_dw(y)
        phi = s ** (p - 1) - w
        dphi = (s ** (p - 2)) * (p - 1) - pi * dw
        s = s - phi * dphi.inverse()
    z = one + pi * s
    z = LocalFieldElement(F, z.coords, prec).normalized()
    E._cache[key] = z
    return z
