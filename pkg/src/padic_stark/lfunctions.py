"""Kubota-Leopoldt values and derivatives at s = 0.

Three routes to L_p'(chi omega, 0) for an odd primitive chi of conductor N,
p not dividing N:

* :func:`lp_derivative_gamma`: sum of chi(a) log_p Gamma_p(a/N), plus the
  (1 - chi(p)) B_{1,chi} log_p N correction;
* :func:`lp_derivative_jacobi`: (1/N) sum over (Z/N)^*/<p> of
  chi(a) log_p J(a), valid when chi(p) = 1;
* :func:`lp_taylor`: an independent oracle built from Washington's finite-sum
  formula for L_p(s, psi), expanded as a power series in s.

For the oracle, with F = Np and psi = chi omega,

    L_p(s, psi) = 1/(F (s - 1)) * sum_{a <= F, p !| a} psi(a) <a>^(1-s)
                  * sum_j binom(1-s, j) (F/a)^j B_j,

and psi(a) <a>^(1-s) = chi(a) a <a>^(-s).  The weight c(a) = chi(a) is
pluggable, which also gives zeta_p (c(a) = omega(a)^-1) for the residue at 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import bernoulli as _sympy_bernoulli
from sympy import binomial as _sympy_binomial

from .dirichlet import DirichletCharacter, PadicEmbedding, bernoulli_b1, embedding_for
from .gamma import fraction_to_padic, log_gamma_p_rational
from .gauss import GaussSumInstance, gauss_unit, jacobi_sum_padic
from .padic import (
    INF,
    PadicNumber,
    iwasawa_log,
    padic_exp,
    padic_from_rational,
    teichmuller_int,
)

GUARD = 4


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n == 1:
        return Fraction(-1, 2)
    b = _sympy_bernoulli(n)
    return Fraction(int(b.p), int(b.q))


def _check(chi: DirichletCharacter, p: int) -> None:
    if not chi.is_odd():
        raise ValueError("character must be odd")
    if not chi.is_primitive():
        raise ValueError("only primitive characters are supported")
    if chi.modulus % p == 0:
        raise ValueError("p must not divide the conductor")


def _embedding(chi, p, prec, embedding):
    if embedding is None:
        return embedding_for(chi, p, prec)
    if embedding.m % chi.order:
        raise ValueError("embedding order mismatch")
    if embedding.prec < prec:
        return PadicEmbedding(embedding.p, embedding.m, prec, embedding.twist)
    return embedding


def _chi_value(chi, emb, a, prec) -> PadicNumber:
    v = emb.character_value(chi, a)
    if v == 0:
        return PadicNumber.zero(emb.p)
    return PadicNumber.from_absolute(v, emb.p, prec)


def lp_value_at_zero(chi, p, embedding=None, prec: int = 10) -> PadicNumber:
    """L_p(chi omega, 0) = -(1 - chi(p)) B_{1,chi}."""
    _check(chi, p)
    emb = _embedding(chi, p, prec, embedding)
    val = -(1 - chi(p)) * bernoulli_b1(chi)
    return emb(val).reduce(prec)


def lp_derivative_gamma(chi, p, embedding=None, prec: int = 10) -> PadicNumber:
    """sum chi(a) log_p Gamma_p(a/N) + (1 - chi(p)) B_{1,chi} log_p N."""
    _check(chi, p)
    emb = _embedding(chi, p, prec, embedding)
    N = chi.modulus
    acc = PadicNumber.zero(p, prec)
    for a in range(1, N):
        if chi.exponent(a) is None:
            continue
        acc = acc + _chi_value(chi, emb, a, prec) * log_gamma_p_rational(a, N, p, prec)
    corr = (1 - chi(p)) * bernoulli_b1(chi)
    if not corr.is_zero():
        acc = acc + emb(corr) * iwasawa_log(padic_from_rational(N, 1, p, prec))
    return acc.reduce(prec)


def coset_representatives(N: int, p: int) -> list[int]:
    """Least representatives of (Z/N)^* / <p>."""
    seen = set()
    reps = []
    for a in range(1, N):
        if math.gcd(a, N) != 1 or a in seen:
            continue
        reps.append(a)
        x = a
        while x not in seen:
            seen.add(x)
            x = x * p % N
    return reps


def _require_trivial_zero(chi, p):
    if chi.exponent(p) != 0:
        raise ValueError("the Jacobi-sum formula needs chi(p) = 1")


def lp_derivative_jacobi(chi, p, embedding=None, prec: int = 10) -> PadicNumber:
    """(1/N) sum_{a in (Z/N)^*/<p>} chi(a) log_p J(a, P)."""
    _check(chi, p)
    _require_trivial_zero(chi, p)
    emb = _embedding(chi, p, prec, embedding)
    N = chi.modulus
    acc = PadicNumber.zero(p, prec)
    for a in coset_representatives(N, p):
        J = jacobi_sum_padic(GaussSumInstance(p, N, a, prec))
        acc = acc + _chi_value(chi, emb, a, prec) * iwasawa_log(J)
    return (acc / N).reduce(prec)


def lp_derivative_gauss_units(chi, p, embedding=None, prec: int = 10) -> PadicNumber:
    """sum over cosets of chi(a) log_p g(a, P); log_p pi = 0 leaves the unit part."""
    _check(chi, p)
    _require_trivial_zero(chi, p)
    emb = _embedding(chi, p, prec, embedding)
    N = chi.modulus
    acc = PadicNumber.zero(p, prec)
    for a in coset_representatives(N, p):
        u = gauss_unit(GaussSumInstance(p, N, a, prec))
        acc = acc + _chi_value(chi, emb, a, prec) * iwasawa_log(u)
    return acc.reduce(prec)


# -- the interpolation oracle ---------------------------------------------


def _j_cutoff(p: int, W: int) -> int:
    # v(binom(1-s, j) (F/a)^j B_j) >= j - 1 - v_p(j!) >= j - 1 - (j-1)/(p-1)
    j = 0
    while j - 1 - (j - 1) / (p - 1) < W + 2:
        j += 1
    return j


@lru_cache(maxsize=None)
def _binom_poly(j: int, K: int) -> tuple:
    """Taylor coefficients in s (up to s^K) of binom(1 - s, j)."""
    poly = [Fraction(1)]
    for i in range(j):
        # factor (1 - i - s)
        nxt = [Fraction(0)] * min(len(poly) + 1, K + 1)
        for d, c in enumerate(poly):
            nxt[d] += c * (1 - i)
            if d + 1 <= K:
                nxt[d + 1] -= c
        poly = nxt
    fj = math.factorial(j)
    return tuple(c / fj for c in poly) + (Fraction(0),) * (K + 1 - len(poly))


def _to_padic(r: Fraction, p: int, W: int) -> PadicNumber:
    return fraction_to_padic(r, p, W)


@dataclass(frozen=True)
class OracleSetup:
    p: int
    F: int
    weights: dict  # a -> integer representative of c(a) mod p^W
    W: int


def _chi_setup(chi: DirichletCharacter, p: int, W: int, embedding=None) -> OracleSetup:
    emb = _embedding(chi, p, W, embedding)
    F = chi.modulus * p
    weights = {}
    for a in range(1, F + 1):
        if a % p and chi.exponent(a) is not None:
            weights[a] = emb.character_value(chi, a)
    return OracleSetup(p, F, weights, W)


def _zeta_setup(p: int, W: int) -> OracleSetup:
    F = p
    weights = {a: pow(teichmuller_int(a, p, W), -1, p**W) for a in range(1, F) if a % p}
    return OracleSetup(p, F, weights, W)


def _series_mul(a: list, b: list, K: int) -> list:
    out = []
    for k in range(K + 1):
        acc = None
        for i in range(k + 1):
            t = a[i] * b[k - i]
            acc = t if acc is None else acc + t
        out.append(acc)
    return out


def _oracle_series(setup: OracleSetup, K: int) -> list[PadicNumber]:
    """Taylor coefficients of F (s - 1) L_p(s) at s = 0, up to s^K."""
    p, F, W = setup.p, setup.F, setup.W
    J = _j_cutoff(p, W)
    bj = [bernoulli(j) for j in range(J)]
    binoms = [_binom_poly(j, K) for j in range(J)]
    total = [PadicNumber.zero(p, W) for _ in range(K + 1)]
    for a, w in setup.weights.items():
        # rational part R_a(s) = sum_j binom(1-s, j) (F/a)^j B_j
        R = [Fraction(0)] * (K + 1)
        ratio = Fraction(1)
        for j in range(J):
            if bj[j]:
                coef = ratio * bj[j]
                for k in range(K + 1):
                    R[k] += binoms[j][k] * coef
            ratio *= Fraction(F, a)
        Rp = [_to_padic(r, p, W) for r in R]
        # <a>^(-s) = sum_k (-log a)^k / k! s^k
        la = iwasawa_log(padic_from_rational(a, 1, p, W))
        E = []
        pw = padic_from_rational(1, 1, p, W)
        for k in range(K + 1):
            E.append(pw / math.factorial(k) if k else pw)
            pw = pw * (-la) if not la.is_zero() else PadicNumber.zero(p, W)
        term = _series_mul(E, Rp, K)
        scale = PadicNumber.from_absolute(w * a, p, W)
        for k in range(K + 1):
            total[k] = total[k] + scale * term[k]
    return total


def _finish(raw: list[PadicNumber], F: int, K: int, prec: int) -> list[PadicNumber]:
    # L = raw / (F (s - 1)) = -(raw / F)(1 + s + s^2 + ...)
    out = []
    acc = PadicNumber.zero(raw[0].p)
    for k in range(K + 1):
        acc = acc + raw[k]
        out.append((-(acc / F)).reduce(prec))
    return out


def lp_taylor(chi: DirichletCharacter, p: int, prec: int = 10, order: int = 2, embedding=None) -> list[PadicNumber]:
    """Taylor coefficients [L(0), L'(0), L''(0)/2, ...] of L_p(s, chi omega) at s = 0."""
    _check(chi, p)
    W = prec + GUARD
    setup = _chi_setup(chi, p, W, embedding)
    return _finish(_oracle_series(setup, order), setup.F, order, prec)


def _eval_inner(setup: OracleSetup, s: PadicNumber) -> PadicNumber:
    """sum_a c(a) a <a>^(-s) R_a(s), evaluated directly at s."""
    p, F, W = setup.p, setup.F, setup.W
    J = _j_cutoff(p, W)
    one = padic_from_rational(1, 1, p, W)
    # binom(1 - s, j), shared by all a
    binoms = [one]
    acc = one
    for j in range(1, J):
        acc = acc * (one - s - (j - 1)) / j
        binoms.append(acc)
    total = PadicNumber.zero(p, W)
    for a, w in setup.weights.items():
        R = PadicNumber.zero(p, W)
        ratio = Fraction(1)
        for j in range(J):
            bj = bernoulli(j)
            if bj:
                c = _to_padic(ratio * bj, p, W + 2)
                if not binoms[j].is_zero():
                    R = R + binoms[j] * c
            ratio *= Fraction(F, a)
        la = iwasawa_log(padic_from_rational(a, 1, p, W))
        x = -(s * la) if not la.is_zero() else PadicNumber.zero(p, W)
        pw = one if x.is_zero() else padic_exp(x.reduce(W))
        total = total + PadicNumber.from_absolute(w * a, p, W) * pw * R
    return total


def lp_interpolation_oracle(chi: DirichletCharacter, p: int, s, prec: int = 10, embedding=None) -> PadicNumber:
    """L_p(s, chi omega) at s in Z_p (s != 1), by direct evaluation."""
    _check(chi, p)
    s = _as_padic(s, p, prec)
    W = prec + GUARD + (0 if s.is_zero() else max(0, -int(s.valuation)))
    setup = _chi_setup(chi, p, W, embedding)
    if s.is_zero():
        return (_eval_inner(setup, PadicNumber.zero(p)) / -setup.F).reduce(prec)
    inner = _eval_inner(setup, s.reduce(W))
    return (inner / ((s - 1) * setup.F)).reduce(prec)


def _as_padic(s, p, prec) -> PadicNumber:
    if isinstance(s, PadicNumber):
        return s
    s = Fraction(s)
    if s == 0:
        return PadicNumber.zero(p)
    return padic_from_rational(s.numerator, s.denominator, p, prec + GUARD + 8)


@dataclass
class DifferenceQuotient:
    step_valuation: int
    quotient: PadicNumber


def lp_difference_quotients(chi, p, prec: int = 10, steps=None, embedding=None) -> list[DifferenceQuotient]:
    """(L(s) - L(0)) / s at s = p^e for each e in ``steps`` (default prec, prec+1)."""
    steps = steps or (prec, prec + 1)
    out = []
    for e in steps:
        work = prec + e + 2
        s = padic_from_rational(p**e, 1, p, work)
        L0 = lp_interpolation_oracle(chi, p, 0, work + e, embedding)
        Ls = lp_interpolation_oracle(chi, p, s, work + e, embedding)
        out.append(DifferenceQuotient(e, ((Ls - L0) / s).reduce(prec)))
    return out


def generalized_bernoulli_padic(chi: DirichletCharacter, p: int, k: int, prec: int, embedding=None) -> tuple[PadicNumber, int]:
    """B_{k, theta} for theta = chi omega^(1-k), with the conductor of theta."""
    W = prec + GUARD + k
    emb = _embedding(chi, p, W, embedding)
    N = chi.modulus
    trivial_twist = (k - 1) % (p - 1) == 0
    f = N if trivial_twist else N * p
    # Bernoulli polynomial B_k(x) = sum_i binom(k, i) B_i x^(k-i)
    acc = PadicNumber.zero(p, W)
    for a in range(1, f + 1):
        if chi.exponent(a) is None or (not trivial_twist and a % p == 0):
            continue
        x = Fraction(a, f)
        bk = sum(int(_sympy_binomial(k, i)) * bernoulli(i) * x ** (k - i) for i in range(k + 1))
        theta = emb.character_value(chi, a)
        if not trivial_twist:
            theta = theta * pow(teichmuller_int(a, p, W), (1 - k) % (p - 1), p**W)
        if bk:
            acc = acc + PadicNumber.from_absolute(theta, p, W) * _to_padic(bk, p, W)
    acc = acc * Fraction(f) ** (k - 1)
    return acc, f


def lp_at_negative_integer(chi, p, k: int, prec: int = 10, embedding=None) -> PadicNumber:
    """-(1 - theta(p) p^(k-1)) B_{k,theta} / k with theta = chi omega^(1-k)."""
    _check(chi, p)
    B, f = generalized_bernoulli_padic(chi, p, k, prec, embedding)
    if f % p:
        emb = _embedding(chi, p, prec + GUARD + k, embedding)
        theta_p = PadicNumber.from_absolute(emb.character_value(chi, p), p, prec + GUARD + k)
        euler = 1 - theta_p * p ** (k - 1)
    else:
        euler = 1
    return (-(B * euler) / k).reduce(prec)


def zeta_residue(p: int, prec: int = 10, steps=None) -> list[PadicNumber]:
    """epsilon * zeta_p(1 + epsilon) at epsilon = p^e, for each step e."""
    steps = steps or (prec, prec + 1)
    out = []
    for e in steps:
        W = prec + GUARD + e
        setup = _zeta_setup(p, W)
        eps = padic_from_rational(p**e, 1, p, W)
        inner = _eval_inner(setup, 1 + eps)
        out.append((inner / setup.F).reduce(prec))
    return out


@dataclass
class CrossOracleReport:
    chi: DirichletCharacter
    p: int
    prec: int
    gamma_route: PadicNumber
    jacobi_route: PadicNumber | None
    gauss_unit_route: PadicNumber | None
    oracle_taylor: PadicNumber
    oracle_quotient: PadicNumber
    value_at_zero: PadicNumber
    oracle_value_at_zero: PadicNumber

    def agreements(self) -> dict:
        out = {
            "gamma_vs_taylor": self.gamma_route.agreement(self.oracle_taylor),
            "gamma_vs_quotient": self.gamma_route.agreement(self.oracle_quotient),
            "value_at_zero": self.value_at_zero.agreement(self.oracle_value_at_zero),
        }
        if self.jacobi_route is not None:
            out["gamma_vs_jacobi"] = self.gamma_route.agreement(self.jacobi_route)
            out["jacobi_vs_quotient"] = self.jacobi_route.agreement(self.oracle_quotient)
            out["gauss_units_vs_jacobi"] = self.gauss_unit_route.agreement(self.jacobi_route)
        return out

    def passed(self, tolerance: int | None = None) -> bool:
        need = self.prec - (tolerance if tolerance is not None else precision_loss(self.p))
        return all(v >= need for v in self.agreements().values())

    def to_record(self) -> dict:
        rec = {
            "modulus": self.chi.modulus,
            "order": self.chi.order,
            "label": list(self.chi.label),
            "p": self.p,
            "prec": self.prec,
            "L_p(0)": self.value_at_zero.to_record(),
            "gamma_route": self.gamma_route.to_record(),
            "jacobi_route": self.jacobi_route.to_record() if self.jacobi_route else None,
            "oracle_taylor": self.oracle_taylor.to_record(),
            "oracle_difference_quotient": self.oracle_quotient.to_record(),
        }
        rec["agreement"] = {k: None if v == INF else int(v) for k, v in self.agreements().items()}
        rec["pass"] = self.passed()
        return rec


def precision_loss(p: int) -> int:
    """delta(M): digits the reported L'-values may lose (log: 0, divisions: 0)."""
    return 0


def ferrero_greenberg_report(chi, p, prec: int = 10, embedding=None) -> CrossOracleReport:
    gamma_route = lp_derivative_gamma(chi, p, embedding, prec)
    trivial_zero = chi.exponent(p) == 0
    jac = lp_derivative_jacobi(chi, p, embedding, prec) if trivial_zero else None
    gu = lp_derivative_gauss_units(chi, p, embedding, prec) if trivial_zero else None
    taylor = lp_taylor(chi, p, prec, order=1, embedding=embedding)
    quotient = lp_difference_quotients(chi, p, prec, steps=(prec,), embedding=embedding)[0].quotient
    return CrossOracleReport(
        chi, p, prec, gamma_route, jac, gu, taylor[1], quotient,
        lp_value_at_zero(chi, p, embedding, prec), taylor[0],
    )
