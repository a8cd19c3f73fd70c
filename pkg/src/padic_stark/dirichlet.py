"""Dirichlet characters with exact values in Q(zeta_m).

A character of order m stores its values as exponents: ``chi(a) = zeta_m^e(a)``.
Exact arithmetic on such values happens in :class:`CyclotomicNumber`, and a
:class:`PadicEmbedding` sends zeta_m to a Teichmuller root of unity in Z_p
(this needs p = 1 mod m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from sympy import cyclotomic_poly, factorint, primitive_root
from sympy.functions.combinatorial.numbers import jacobi_symbol
from sympy.abc import x as _x

from .padic import PadicNumber, padic_from_rational, teichmuller_int


@lru_cache(maxsize=None)
def cyclotomic_coeffs(m: int) -> tuple:
    """Coefficients of Phi_m, lowest degree first."""
    return tuple(int(c) for c in reversed(cyclotomic_poly(m, _x, polys=True).all_coeffs()))


def euler_phi(n: int) -> int:
    out = n
    for q in factorint(n):
        out = out // q * (q - 1)
    return out


@dataclass(frozen=True)
class CyclotomicNumber:
    """An element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1)."""

    m: int
    coeffs: tuple

    @classmethod
    def from_list(cls, m: int, coeffs) -> CyclotomicNumber:
        return cls(m, _reduce(m, [Fraction(c) for c in coeffs]))

    @classmethod
    def rational(cls, m: int, r) -> CyclotomicNumber:
        return cls.from_list(m, [r])

    @classmethod
    def root_power(cls, m: int, k: int) -> CyclotomicNumber:
        k %= m
        return cls.from_list(m, [0] * k + [1])

    def _coerce(self, other) -> CyclotomicNumber:
        if isinstance(other, CyclotomicNumber):
            if other.m != self.m:
                raise ValueError("cyclotomic orders differ")
            return other
        return CyclotomicNumber.rational(self.m, other)

    def __add__(self, other) -> CyclotomicNumber:
        o = self._coerce(other)
        return CyclotomicNumber(self.m, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> CyclotomicNumber:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CyclotomicNumber:
        return self._coerce(other) - self

    def __mul__(self, other) -> CyclotomicNumber:
        o = self._coerce(other)
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        return CyclotomicNumber(self.m, _reduce(self.m, prod))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"Q(zeta_{self.m})[" + (" + ".join(terms) or "0") + "]"


def _reduce(m: int, coeffs: list) -> tuple:
    phi = cyclotomic_coeffs(m)
    d = len(phi) - 1
    c = list(coeffs) + [Fraction(0)] * max(0, d - len(coeffs))
    for i in range(len(c) - 1, d - 1, -1):
        t = c[i]
        if t:
            for j in range(d + 1):
                c[i - d + j] -= t * phi[j]
    return tuple(c[:d])


# -- unit groups and characters --------------------------------------------


def unit_group_generators(N: int) -> list[tuple[int, int]]:
    """Pairs (g, n): elements of (Z/N)^* of order n whose product is direct."""
    gens = []
    for q, e in sorted(factorint(N).items()):
        qe = q**e
        rest = N // qe
        local = []
        if q == 2:
            if e >= 2:
                local.append((qe - 1, 2))
            if e >= 3:
                local.append((5, 2 ** (e - 2)))
        else:
            local.append((primitive_root(qe), qe - qe // q))
        for g, n in local:
            # CRT: g mod q^e, 1 mod the rest
            gens.append(((g * rest * pow(rest, -1, qe) + qe * pow(qe, -1, rest)) % N if rest > 1 else g % N, n))
    return gens


def _discrete_logs(N: int, gens) -> dict[int, tuple]:
    logs = {1 % N: tuple(0 for _ in gens)}
    for idx, (g, n) in enumerate(gens):
        new = {}
        for a, vec in logs.items():
            x = a
            for k in range(n):
                v = list(vec)
                v[idx] = k
                new[x] = tuple(v)
                x = x * g % N
        logs = new
    return logs


@dataclass(frozen=True)
class DirichletCharacter:
    """chi(a) = zeta_order^exps[a] for units a mod N."""

    modulus: int
    order: int
    exps: tuple  # exps[a] for 0 <= a < N, None where gcd(a, N) > 1
    label: tuple = ()

    def exponent(self, a: int) -> int | None:
        return self.exps[a % self.modulus]

    def __call__(self, a: int) -> CyclotomicNumber:
        e = self.exponent(a)
        if e is None:
            return CyclotomicNumber.rational(self.order, 0)
        return CyclotomicNumber.root_power(self.order, e)

    def is_trivial(self) -> bool:
        return self.order == 1

    @cached_property
    def parity(self) -> int:
        e = self.exponent(-1)
        return 1 if e == 0 else -1

    def is_odd(self) -> bool:
        return self.parity == -1

    @cached_property
    def conductor(self) -> int:
        N = self.modulus
        for d in sorted(k for k in range(1, N + 1) if N % k == 0):
            if all(
                self.exps[a] == 0
                for a in range(1, N, d)
                if self.exps[a] is not None
            ):
                return d
        return N  # pragma: no cover

    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def conj(self) -> DirichletCharacter:
        exps = tuple(None if e is None else (-e) % self.order for e in self.exps)
        return DirichletCharacter(self.modulus, self.order, exps, self.label)

    def is_real(self) -> bool:
        return self.order <= 2

    def value_on_int(self, a: int) -> int | None:
        """chi(a) as an integer when the order is at most 2 (0 off the units)."""
        if self.order > 2:
            raise ValueError("character is not real")
        e = self.exponent(a)
        if e is None:
            return 0
        return 1 if e == 0 else -1

    def __repr__(self) -> str:
        return f"DirichletCharacter(mod {self.modulus}, order {self.order}, label {self.label})"


def _normalize_order(N: int, L: int, raw: dict) -> tuple[int, tuple]:
    g = L
    for e in raw.values():
        g = math.gcd(g, e)
    order = L // g
    exps = [None] * N
    for a, e in raw.items():
        exps[a] = (e // g) % order if order > 1 else 0
    return order, tuple(exps)


def enumerate_characters(N: int) -> list[DirichletCharacter]:
    """All characters mod N, labelled by their exponents on the generators."""
    if N < 1:
        raise ValueError("modulus must be positive")
    gens = unit_group_generators(N) if N > 2 else []
    logs = _discrete_logs(N, gens)
    L = 1
    for _, n in gens:
        L = L * n // math.gcd(L, n)
    labels = [()]
    for _, n in gens:
        labels = [lab + (j,) for lab in labels for j in range(n)]
    out = []
    for lab in labels:
        raw = {}
        for a, vec in logs.items():
            raw[a] = sum(j * (L // n) * k for j, (_, n), k in zip(lab, gens, vec)) % L
        order, exps = _normalize_order(N, L, raw)
        out.append(DirichletCharacter(N, order, exps, lab))
    return out


def character_from_values(N: int, values: dict) -> DirichletCharacter:
    """Find the character mod N taking the given integer (+-1) values."""
    for chi in enumerate_characters(N):
        if chi.order <= 2 and all(chi.value_on_int(a) == v for a, v in values.items()):
            return chi
    raise ValueError("no character with the requested values")


def kronecker_character(d: int) -> DirichletCharacter:
    """The quadratic character attached to a fundamental discriminant d."""
    N = abs(d)
    raw = {}
    for a in range(N):
        if math.gcd(a, N) == 1:
            raw[a] = 0 if kronecker(d, a) == 1 else 1
    order = 2 if any(raw.values()) else 1
    exps = tuple(raw.get(a) for a in range(N))
    return DirichletCharacter(N, order, exps, ("kronecker", d))


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol (d/n) for n >= 1."""
    if n == 0:
        return 1 if abs(d) == 1 else 0
    out = 1
    while n % 2 == 0:
        n //= 2
        if d % 2 == 0:
            return 0
        out *= 1 if d % 8 in (1, 7) else -1
    if n == 1:
        return out
    return out * int(jacobi_symbol(d % n, n)) if math.gcd(d, n) == 1 else 0


def primitive_odd_characters(N: int) -> list[DirichletCharacter]:
    return [c for c in enumerate_characters(N) if c.is_odd() and c.is_primitive()]


def bernoulli_b1(chi: DirichletCharacter) -> CyclotomicNumber:
    """B_{1,chi} = sum_{a=1}^{N} chi(a) a / N."""
    N = chi.modulus
    acc = CyclotomicNumber.rational(chi.order, 0)
    for a in range(1, N + 1):
        e = chi.exponent(a)
        if e is not None:
            acc = acc + CyclotomicNumber.root_power(chi.order, e) * Fraction(a, N)
    return acc


def classical_l_at_zero(chi: DirichletCharacter) -> CyclotomicNumber:
    """L(chi, 0): -B_{1,chi} for nontrivial chi (0 for even chi)."""
    if chi.is_trivial():
        return CyclotomicNumber.rational(1, Fraction(-1, 2))
    return -bernoulli_b1(chi)


# -- p-adic embedding ------------------------------------------------------


@dataclass(frozen=True)
class PadicEmbedding:
    """zeta_m -> omega(g)^((p-1) k / m) for the least primitive root g mod p.

    ``twist`` (prime to m) picks another embedding; the twists are exactly
    the Galois conjugates.
    """

    p: int
    m: int
    prec: int
    twist: int = 1

    def __post_init__(self):
        if (self.p - 1) % self.m:
            raise ValueError(f"need p = 1 mod {self.m} for an embedding into Q_{self.p}")
        if math.gcd(self.twist, self.m) != 1:
            raise ValueError("twist must be prime to the order")

    @cached_property
    def root(self) -> int:
        g = int(primitive_root(self.p))
        base = pow(g, (self.p - 1) // self.m * self.twist, self.p)
        return teichmuller_int(base, self.p, self.prec)

    def root_power(self, k: int) -> int:
        return pow(self.root, k % self.m, self.p**self.prec)

    def __call__(self, z: CyclotomicNumber) -> PadicNumber:
        if self.m % z.m:
            raise ValueError("embedding order mismatch")
        step = self.m // z.m
        p, k = self.p, self.prec
        acc = PadicNumber.zero(p, k)
        for i, c in enumerate(z.coeffs):
            if c:
                term = padic_from_rational(c.numerator, c.denominator, p, k)
                acc = acc + term * PadicNumber.from_absolute(self.root_power(i * step), p, k)
        return acc

    def character_value(self, chi: DirichletCharacter, a: int) -> int:
        """Integer representative of the embedded chi(a) mod p^prec (0 off the units)."""
        e = chi.exponent(a)
        if e is None:
            return 0
        return self.root_power(e * (self.m // chi.order))


def embedding_for(chi: DirichletCharacter, p: int, prec: int, twist: int = 1) -> PadicEmbedding:
    return PadicEmbedding(p, chi.order, prec, twist)
