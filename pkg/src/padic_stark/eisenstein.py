"""Eisenstein families in weight k = 1 + eps, computed modulo eps^2.

Weights run over the disc k = 1 mod (p - 1), where d^(k-1) = 1 + eps log_p d.
The G-factor is taken in weight k - 1, so its zeta argument 2 - k crosses the
pole of zeta_p at k = 1:

    2 / zeta_p(1 - eps) = -2 eps / lambda + O(eps^2),  lambda = Res_{s=1} zeta_p,

and G = 1 - eps (2/lambda) sum_n (sum_{d | n, p !| d} d^-1) q^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dirichlet import DirichletCharacter, classical_l_at_zero, embedding_for
from .lfunctions import GUARD, lp_taylor, zeta_residue
from .padic import INF, PadicNumber, PrecisionError, iwasawa_log, padic_from_rational


def _const(x, p: int, W: int) -> PadicNumber:
    x = Fraction(x)
    return padic_from_rational(x.numerator, x.denominator, p, W)


@dataclass(frozen=True)
class DualScalar:
    """value + eps * derivative with eps^2 = 0."""

    value: PadicNumber
    derivative: PadicNumber

    @classmethod
    def const(cls, x, p: int, W: int) -> DualScalar:
        return cls(_const(x, p, W), _const(0, p, W))

    @property
    def p(self) -> int:
        return self.value.p

    def _lift(self, other) -> DualScalar:
        if isinstance(other, DualScalar):
            return other
        if isinstance(other, PadicNumber):
            return DualScalar(other, PadicNumber.zero(self.p, other.absprec))
        W = int(min(self.value.absprec, self.derivative.absprec))
        return DualScalar.const(other, self.p, W)

    def __add__(self, other) -> DualScalar:
        o = self._lift(other)
        return DualScalar(self.value + o.value, self.derivative + o.derivative)

    __radd__ = __add__

    def __neg__(self) -> DualScalar:
        return DualScalar(-self.value, -self.derivative)

    def __sub__(self, other) -> DualScalar:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> DualScalar:
        return self._lift(other) - self

    def __mul__(self, other) -> DualScalar:
        o = self._lift(other)
        return DualScalar(
            self.value * o.value,
            self.value * o.derivative + self.derivative * o.value,
        )

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        return not self.value.is_zero() and self.value.valuation <= 0

    def inverse(self) -> DualScalar:
        if self.value.is_zero():
            raise ZeroDivisionError("dual number with zero value part")
        inv = self.value.inverse()
        return DualScalar(inv, -(self.derivative * inv * inv))

    def __truediv__(self, other) -> DualScalar:
        return self * self._lift(other).inverse()

    def agreement(self, other) -> float:
        o = self._lift(other)
        return min(self.value.agreement(o.value), self.derivative.agreement(o.derivative))

    def reduce(self, absprec) -> DualScalar:
        return DualScalar(self.value.reduce(absprec), self.derivative.reduce(absprec))

    def specialize(self) -> PadicNumber:
        return self.value

    def to_record(self) -> dict:
        return {"value": self.value.to_record(), "eps": self.derivative.to_record()}


@dataclass(frozen=True)
class DualSeries:
    coeffs: tuple  # DualScalar a_0 .. a_{n_max}
    level: int = 1
    nebentypus: object = None

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, n_max: int) -> DualSeries:
        if n_max > self.n_max:
            raise ValueError("cannot extend a truncated series")
        return DualSeries(self.coeffs[: n_max + 1], self.level, self.nebentypus)

    def __add__(self, other: DualSeries) -> DualSeries:
        n = min(self.n_max, other.n_max)
        return DualSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), self.level, self.nebentypus)

    def __neg__(self) -> DualSeries:
        return DualSeries(tuple(-a for a in self.coeffs), self.level, self.nebentypus)

    def __sub__(self, other: DualSeries) -> DualSeries:
        return self + (-other)

    def scale(self, c) -> DualSeries:
        return DualSeries(tuple(a * c for a in self.coeffs), self.level, self.nebentypus)

    def __mul__(self, other) -> DualSeries:
        if not isinstance(other, DualSeries):
            return self.scale(other)
        n = min(self.n_max, other.n_max)
        out = []
        for k in range(n + 1):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return DualSeries(tuple(out), self.level, self.nebentypus)

    def specialize(self) -> list[PadicNumber]:
        return [a.value for a in self.coeffs]

    def agreement(self, other: DualSeries) -> float:
        n = min(self.n_max, other.n_max)
        return min((a.agreement(b) for a, b in zip(self.coeffs[: n + 1], other.coeffs)), default=INF)

    def to_record(self) -> list:
        return [a.to_record() for a in self.coeffs]


# -- building blocks ---------------------------------------------------------


@dataclass
class FamilyContext:
    """Embedded character values, L-data and the zeta residue, shared by the families."""

    chi: DirichletCharacter
    p: int
    prec: int

    def __post_init__(self):
        chi, p = self.chi, self.p
        if not chi.is_odd() or not chi.is_primitive():
            raise ValueError("need an odd primitive character")
        if chi.modulus % p == 0:
            raise ValueError("p must not divide the conductor")
        self.W = self.prec + GUARD
        self.emb = embedding_for(chi, p, self.W)
        self.chi_p_is_one = chi.exponent(p) == 0
        self._taylor = {}

    def char(self, a: int, conj: bool = False) -> PadicNumber:
        c = self.chi.conj() if conj else self.chi
        return _const(self.emb.character_value(c, a), self.p, self.W)

    def taylor(self, conj: bool = False) -> list[PadicNumber]:
        if conj not in self._taylor:
            c = self.chi.conj() if conj else self.chi
            self._taylor[conj] = lp_taylor(c, self.p, self.W, order=2, embedding=self.emb)
        return self._taylor[conj]

    def l_zero(self, conj: bool = False) -> PadicNumber:
        c = self.chi.conj() if conj else self.chi
        return self.emb(classical_l_at_zero(c))

    def lp_one_minus_k(self, conj: bool = False) -> DualScalar:
        """L_p(chi omega, 1 - k) at k = 1 + eps, i.e. L_p(-eps)."""
        t = self.taylor(conj)
        return DualScalar(t[0], -t[1])


def weight_exponent(d: int, p: int, prec: int) -> DualScalar:
    """d^(k-1) = 1 + eps log_p d on the disc k = 1 mod (p - 1)."""
    if d % p == 0:
        raise ValueError(f"{p} divides {d}")
    one = _const(1, p, prec)
    if abs(d) == 1:
        return DualScalar(one, _const(0, p, prec))
    return DualScalar(one, iwasawa_log(_const(d, p, prec)))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def family_E_star(ctx: FamilyContext, n_max: int) -> DualSeries:
    """E_k^*(1, chi): constant L_p(chi omega, 1-k)/2, a_n = sum chi(d) d^(k-1) over d | n, p !| d."""
    p, W = ctx.p, ctx.W
    half = _const(Fraction(1, 2), p, W)
    coeffs = [ctx.lp_one_minus_k() * half]
    for n in range(1, n_max + 1):
        acc = DualScalar.const(0, p, W)
        for d in _divisors(n):
            if d % p:
                acc = acc + weight_exponent(d, p, W) * ctx.char(d)
        coeffs.append(acc)
    return DualSeries(tuple(coeffs), ctx.chi.modulus * p, ctx.chi.label)


def family_E_star_twisted(ctx: FamilyContext, n_max: int) -> DualSeries:
    """E_k^*(chi, 1): no constant term, a_n = sum chi(n/d) d^(k-1) over d | n, p !| d."""
    p, W = ctx.p, ctx.W
    coeffs = [DualScalar.const(0, p, W)]
    for n in range(1, n_max + 1):
        acc = DualScalar.const(0, p, W)
        for d in _divisors(n):
            if d % p:
                acc = acc + weight_exponent(d, p, W) * ctx.char(n // d)
        coeffs.append(acc)
    return DualSeries(tuple(coeffs), ctx.chi.modulus * p, ctx.chi.label)


def classical_E1(ctx: FamilyContext, n_max: int) -> DualSeries:
    """E_1(1, chi) = L(chi, 0)/2 + sum (sum_{d | n} chi(d)) q^n, constant in the weight."""
    p, W = ctx.p, ctx.W
    half = _const(Fraction(1, 2), p, W)
    coeffs = [DualScalar(ctx.l_zero() * half, _const(0, p, W))]
    for n in range(1, n_max + 1):
        acc = _const(0, p, W)
        for d in _divisors(n):
            acc = acc + ctx.char(d)
        coeffs.append(DualScalar(acc, _const(0, p, W)))
    return DualSeries(tuple(coeffs), ctx.chi.modulus, ctx.chi.label)


@dataclass
class ResidueData:
    values: list  # eps * zeta_p(1 + eps) at the two step sizes
    agreement: float
    classical_agreement: float  # against 1 - 1/p

    @property
    def residue(self) -> PadicNumber:
        return self.values[-1]


def zeta_residue_data(p: int, prec: int) -> ResidueData:
    vals = zeta_residue(p, prec, steps=(prec, prec + 2))
    agree = vals[0].agreement(vals[1])
    if agree < prec:
        raise PrecisionError(f"zeta residue unstable between step sizes: {agree} < {prec}")
    classical = vals[-1].agreement(_const(Fraction(p - 1, p), p, prec))
    return ResidueData(vals, agree, classical)


def g_factor(p: int, n_max: int, prec: int) -> DualSeries:
    """1 - eps (2/lambda) sum_n (sum_{d | n, p !| d} d^-1) q^n."""
    W = prec + GUARD
    lam = zeta_residue_data(p, W).residue
    c = -(_const(2, p, W) / lam)
    zero = _const(0, p, W)
    coeffs = [DualScalar(_const(1, p, W), zero)]
    for n in range(1, n_max + 1):
        s = sum((_const(Fraction(1, d), p, W) for d in _divisors(n) if d % p), zero)
        coeffs.append(DualScalar(zero, c * s))
    return DualSeries(tuple(coeffs), p, None)


def family_F_star(ctx: FamilyContext, n_max: int) -> DualSeries:
    """E^* - (L_p(chi omega, 1-k) / L(chi, 0)) E_1(1, chi) G."""
    coef = ctx.lp_one_minus_k() / ctx.l_zero()
    E1G = classical_E1(ctx, n_max) * g_factor(ctx.p, n_max, ctx.prec)
    return family_E_star(ctx, n_max) - E1G.scale(coef)


def h_ratio(ctx: FamilyContext) -> DualScalar:
    """L_p(chi omega,1-k) L(chi^-1,0) / (L_p(chi^-1 omega,1-k) L(chi,0)) mod eps^2.

    With trivial zeros on both sides the eps factor cancels, leaving
    (L' - eps L''/2) / (L'bar - eps L''bar/2).
    """
    t, tb = ctx.taylor(), ctx.taylor(conj=True)
    lz, lzb = ctx.l_zero(), ctx.l_zero(conj=True)
    if t[0].is_zero() and tb[0].is_zero():
        num = DualScalar(t[1], -t[2])
        den = DualScalar(tb[1], -tb[2])
        if den.value.is_zero():
            raise PrecisionError("L_p'(chi^-1 omega, 0) vanishes at working precision")
    else:
        num = DualScalar(t[0], -t[1])
        den = DualScalar(tb[0], -tb[1])
    return num / den * (lzb / lz)


def family_H_star(ctx: FamilyContext, n_max: int) -> DualSeries:
    return family_F_star(ctx, n_max) - family_E_star_twisted(ctx, n_max).scale(h_ratio(ctx))


# -- Hecke operators ---------------------------------------------------------


def hecke_T(ell: int, f: DualSeries, ctx: FamilyContext) -> DualSeries:
    """(T_l f)_n = a_{n l} + chi(l) l^(k-1) a_{n/l}; output truncation n_max // l."""
    p, N = ctx.p, ctx.chi.modulus
    if (p * N) % ell == 0:
        raise ValueError(f"{ell} divides pN")
    m = f.n_max // ell
    if m < 1:
        raise ValueError("insufficient truncation for T_l")
    w = weight_exponent(ell, p, ctx.W) * ctx.char(ell)
    out = []
    for n in range(m + 1):
        a = f.coeffs[n * ell]
        if n % ell == 0:
            a = a + w * f.coeffs[n // ell]
        out.append(a)
    return DualSeries(tuple(out), f.level, f.nebentypus)


def hecke_U_p(f: DualSeries, p: int) -> DualSeries:
    m = f.n_max // p
    if m < 1:
        raise ValueError("insufficient truncation for U_p")
    return DualSeries(tuple(f.coeffs[n * p] for n in range(m + 1)), f.level, f.nebentypus)


def first_primes_away(k: int, avoid: int) -> list[int]:
    out, n = [], 2
    while len(out) < k:
        if all(n % d for d in range(2, int(n**0.5) + 1)) and avoid % n:
            out.append(n)
        n += 1
    return out


# -- reports -----------------------------------------------------------------


@dataclass
class EigenCheck:
    operator: str
    eigenvalue: DualScalar
    n_range: int
    agreement: float


@dataclass
class EisensteinReport:
    chi_modulus: int
    p: int
    prec: int
    n_max: int
    constant_term_F: DualScalar
    constant_term_H: DualScalar
    specialization_agreement: float  # F* at eps = 0 against E_1^*
    t_checks: list
    u_claimed: EigenCheck
    u_realized: DualScalar
    u_realized_check: EigenCheck
    l_ratio: PadicNumber  # L_p'(chi omega, 0) / L(chi, 0) from dirichlet-lfunctions
    residue: ResidueData

    @property
    def tolerance(self) -> int:
        return self.prec

    @property
    def constant_terms_cancel(self) -> bool:
        return all(
            x.value.is_zero() and x.derivative.is_zero() and min(x.value.absprec, x.derivative.absprec) >= self.prec
            for x in (self.constant_term_F, self.constant_term_H)
        )

    @property
    def t_passed(self) -> bool:
        return all(c.agreement >= self.tolerance for c in self.t_checks)

    @property
    def u_passed(self) -> bool:
        return self.u_claimed.agreement >= self.tolerance

    @property
    def passed(self) -> bool:
        return self.constant_terms_cancel and self.t_passed and self.u_passed

    def to_record(self) -> dict:
        def num(x):
            return None if x == INF else int(x)

        return {
            "chi_modulus": self.chi_modulus, "p": self.p, "prec": self.prec, "n_max": self.n_max,
            "constant_term_F": self.constant_term_F.to_record(),
            "constant_term_H": self.constant_term_H.to_record(),
            "constant_terms_cancel": self.constant_terms_cancel,
            "specialization_agreement": num(self.specialization_agreement),
            "T": [
                {"operator": c.operator, "eigenvalue": c.eigenvalue.to_record(),
                 "n_range": c.n_range, "agreement": num(c.agreement)}
                for c in self.t_checks
            ],
            "U_p_claimed": {"eigenvalue": self.u_claimed.eigenvalue.to_record(),
                            "agreement": num(self.u_claimed.agreement)},
            "U_p_realized": {"eigenvalue": self.u_realized.to_record(),
                             "agreement": num(self.u_realized_check.agreement)},
            "Lp_prime_over_L": self.l_ratio.to_record(),
            "zeta_residue": self.residue.residue.to_record(),
            "zeta_residue_vs_1_minus_1_over_p": num(self.residue.classical_agreement),
            "pass": self.passed,
        }


def _eigen_check(name, lhs: DualSeries, eig: DualScalar, f: DualSeries) -> EigenCheck:
    rhs = f.truncate(lhs.n_max).scale(eig)
    return EigenCheck(name, eig, lhs.n_max, lhs.agreement(rhs))


def verify_F_eigen(chi: DirichletCharacter, p: int, ells=None, n_max: int = 60, prec: int = 10) -> EisensteinReport:
    ctx = FamilyContext(chi, p, prec)
    if not ctx.chi_p_is_one:
        raise ValueError("need chi(p) = 1")
    W = ctx.W
    ells = ells or first_primes_away(3, p * chi.modulus)
    F = family_F_star(ctx, n_max)
    H = family_H_star(ctx, n_max)
    E = family_E_star(ctx, n_max)
    spec_agree = min(a.value.agreement(b.value) for a, b in zip(F.coeffs[1:], E.coeffs[1:]))
    t_checks = []
    for ell in ells:
        eig = DualScalar.const(1, p, W) + weight_exponent(ell, p, W) * ctx.char(ell)
        t_checks.append(_eigen_check(f"T_{ell}", hecke_T(ell, F, ctx), eig, F))
    UF = hecke_U_p(F, p)
    taylor = ctx.taylor()
    ratio = taylor[1] / ctx.l_zero()
    one = _const(1, p, W)
    claimed = DualScalar(one, -ratio)
    a1 = F.coeffs[1]
    realized = UF.coeffs[1] / a1
    return EisensteinReport(
        chi.modulus, p, prec, n_max,
        F.coeffs[0], H.coeffs[0], spec_agree,
        t_checks,
        _eigen_check(f"U_{p}", UF, claimed, F),
        realized,
        _eigen_check(f"U_{p}", UF, realized, F),
        ratio.reduce(prec),
        zeta_residue_data(p, prec),
    )


@dataclass
class LInvariantReport:
    chi_modulus: int
    p: int
    value: PadicNumber  # L_p'(chi omega,0)/L(chi,0) + L_p'(chi^-1 omega,0)/L(chi,0)
    holds: bool
    ratio_value_part: PadicNumber
    h_specializes_to_E1_star: bool

    def to_record(self) -> dict:
        return {
            "chi_modulus": self.chi_modulus, "p": self.p,
            "value": self.value.to_record(),
            "condition_holds": self.holds,
            "hecke_operator_t_exists": self.holds,
            "third_coefficient_value_part": self.ratio_value_part.to_record(),
            "H_star_specializes_to_E1_star": self.h_specializes_to_E1_star,
        }


def l_invariant_condition(chi: DirichletCharacter, p: int, prec: int = 10, n_max: int = 20) -> LInvariantReport:
    ctx = FamilyContext(chi, p, prec)
    t, tb = ctx.taylor(), ctx.taylor(conj=True)
    lz = ctx.l_zero()
    val = (t[1] / lz + tb[1] / lz).reduce(prec)
    r = h_ratio(ctx)
    H = family_H_star(ctx, n_max)
    E = family_E_star(ctx, n_max)
    specializes = min(a.value.agreement(b.value) for a, b in zip(H.coeffs[1:], E.coeffs[1:])) >= prec
    return LInvariantReport(chi.modulus, p, val, not val.is_zero(), r.value.reduce(prec), specializes)
