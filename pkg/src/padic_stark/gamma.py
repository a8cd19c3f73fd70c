"""Morita's p-adic Gamma function.

``Gamma_p(m) = (-1)^m * prod(j for 0 < j < m if p does not divide j)`` for
positive integers m, extended to Z_p by continuity.  For odd p,
``Gamma_p(x + p^k y) = Gamma_p(x) mod p^k``, so a value mod p^M only needs a
representative of x mod p^M.  We still take the representative modulo
``p^(M + margin)`` with margin 1 (p >= 5) or 2 (p = 3).

Two evaluation paths compute the same integer product modulo p^M:

* :func:`gamma_p_direct` multiplies the integers one by one, O(m).  It is the
  oracle and is only usable for small representatives.
* :func:`gamma_p` splits ``[1, m)`` into p-adic blocks.  The product of the
  units in a block of length p^r starting at a multiple ``p^r u`` is a
  polynomial ``G_r(u)`` whose coefficient of u^i is divisible by p^(r i);
  reduced mod p^M it has degree < M, and ``G_(r+1)(u) = prod_c G_r(p u + c)``.
  Cost is O(M^3 p) per evaluation plus a cached O(M^4 p) table.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .padic import PadicNumber, iwasawa_log, padic_from_rational, vp


def continuity_margin(p: int) -> int:
    return 2 if p == 3 else 1


def _poly_mul(a: list, b: list, mod: int, deg: int) -> list:
    out = [0] * min(len(a) + len(b) - 1, deg)
    for i, x in enumerate(a):
        if x == 0 or i >= deg:
            continue
        for j, y in enumerate(b):
            if i + j >= deg:
                break
            out[i + j] = (out[i + j] + x * y) % mod
    return out


def _poly_shift(a: list, p: int, c: int, mod: int, deg: int) -> list:
    """Coefficients of a(p*u + c) mod ``mod``, truncated below degree ``deg``."""
    out = [0]
    for coef in reversed(a):
        # out = out * (p u + c) + coef
        nxt = [0] * min(len(out) + 1, deg)
        for i, x in enumerate(out):
            if x == 0:
                continue
            nxt[i] = (nxt[i] + x * c) % mod
            if i + 1 < deg:
                nxt[i + 1] = (nxt[i + 1] + x * p) % mod
        nxt[0] = (nxt[0] + coef) % mod
        out = nxt
    return out


def _poly_eval(a: list, u: int, mod: int) -> int:
    acc = 0
    for coef in reversed(a):
        acc = (acc * u + coef) % mod
    return acc


@lru_cache(maxsize=64)
def _block_tables(p: int, M: int, rmax: int) -> tuple:
    """G_r mod p^M for r = 1..rmax (index 0 unused)."""
    mod = p**M
    deg = M
    # G_1(u) = F_1(p u), F_1(t) = prod_{j=1}^{p-1} (t + j)
    F1 = [1]
    for j in range(1, p):
        F1 = _poly_mul(F1, [j, 1], mod, p)
    G1 = [(c * pow(p, i, mod)) % mod for i, c in enumerate(F1)][:deg]
    tables = [None, G1]
    for _ in range(2, rmax + 1):
        prev = tables[-1]
        acc = [1]
        for c in range(p):
            acc = _poly_mul(acc, _poly_shift(prev, p, c, mod, deg), mod, deg)
        tables.append(acc)
    return tuple(tuple(t) if t is not None else None for t in tables)


def unit_factorial_mod(m: int, p: int, M: int) -> int:
    """prod of 0 < j < m with p not dividing j, modulo p^M."""
    mod = p**M
    if m <= 1:
        return 1 % mod
    digits = []
    n = m
    while n:
        digits.append(n % p)
        n //= p
    tables = _block_tables(p, M, max(len(digits) - 1, 1))
    acc = 1
    base = 0
    for r in range(len(digits) - 1, 0, -1):
        G = tables[r]
        for c in range(digits[r]):
            start = base + c * p**r
            acc = acc * _poly_eval(list(G), start // p**r, mod) % mod
        base += digits[r] * p**r
    for j in range(base + 1, m):
        if j % p:
            acc = acc * j % mod
    return acc


def gamma_int(m: int, p: int, M: int) -> int:
    """Gamma_p(m) mod p^M for a positive integer m."""
    if m < 1:
        raise ValueError("integer argument must be positive")
    sign = -1 if m % 2 else 1
    return sign * unit_factorial_mod(m, p, M) % p**M


def gamma_p_direct(m: int, p: int, M: int) -> int:
    """Oracle: Gamma_p(m) mod p^M by the defining product, one factor at a time."""
    mod = p**M
    acc = 1
    for j in range(1, m):
        if j % p:
            acc = acc * j % mod
    return (-acc if m % 2 else acc) % mod


def _representative(x: PadicNumber, K: int) -> int:
    """Positive integer congruent to the p-adic integer x mod p^K."""
    if x.is_zero():
        return x.p**K
    if x.valuation < 0:
        raise ValueError("Gamma_p is defined on Z_p only")
    m = x.lift() % x.p**K
    return m if m > 0 else x.p**K


def gamma_p(x: PadicNumber | int, prec: int, p: int | None = None) -> PadicNumber:
    """Gamma_p(x) modulo p^prec for x in Z_p.

    ``x`` may be an integer (then ``p`` is required) or a PadicNumber; the
    output precision is capped by the absolute precision of ``x``.
    """
    if isinstance(x, int):
        if p is None:
            raise ValueError("p required for integer input")
        x = padic_from_rational(x, 1, p, prec + continuity_margin(p) + 1) if x else PadicNumber.zero(p)
    p = x.p
    if p == 2:
        raise ValueError("p = 2 is not supported")
    if not x.is_zero() and x.valuation < 0:
        raise ValueError("Gamma_p needs valuation >= 0")
    M = int(min(prec, x.absprec))
    if M < 1:
        raise ValueError("input known to too little precision")
    m = _representative(x, M + continuity_margin(p))
    return PadicNumber.from_absolute(gamma_int(m, p, M), p, M)


def gamma_p_rational(a: int, N: int, p: int, prec: int) -> PadicNumber:
    """Gamma_p(a/N) for N prime to p."""
    if N % p == 0:
        raise ValueError("denominator must be prime to p")
    K = prec + continuity_margin(p)
    x = padic_from_rational(a, N, p, K) if a else PadicNumber.zero(p)
    if not x.is_zero() and x.valuation > 0:
        x = x.reduce(K)
    return gamma_p(x.reduce(K) if not x.is_zero() else PadicNumber.zero(p, K), prec)


def reflection_sign(x: PadicNumber) -> int:
    """(-1)^m(x) with 0 < m(x) <= p and m(x) = x mod p."""
    r = x.residue() if not x.is_zero() else 0
    m = r if r else x.p
    return -1 if m % 2 else 1


def log_gamma_p_rational(a: int, N: int, p: int, prec: int) -> PadicNumber:
    return iwasawa_log(gamma_p_rational(a, N, p, prec))


def fraction_to_padic(r: Fraction, p: int, prec: int) -> PadicNumber:
    if r == 0:
        return PadicNumber.zero(p, prec)
    v = int(vp(r.numerator, p) - vp(r.denominator, p))
    return padic_from_rational(r.numerator, r.denominator, p, max(prec - v, 1))
