"""Genus and cusp bookkeeping for the modular curves X_0(N), X(N,p) and
Atkin-Lehner quotients.

X(N,p) denotes the fiber product of X_0(N) and X(p) over the j-line; its
genus admits both a closed form and an independent Riemann-Hurwitz
computation from the cusp data of X_0(N), and the two are cross-checked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    Level,
    class_number_primitive,
    divisors,
    euler_phi,
    is_squarefree,
    kronecker,
    odd_primes_upto,
    prime_factors,
    psi_index,
    squarefree_part,
)


@dataclass(frozen=True)
class CuspData:
    """A cusp m/n of X_0(N): n | N, gcd(m, n) = 1, m taken mod gcd(n, N/n)."""

    n: int
    m: int
    h: int  # gcd(n, N/n); the cusps with this n are indexed by (Z/h)^*
    ram_degree: int  # ramification degree over X(1)

    @property
    def label(self) -> str:
        return f"{self.m}/{self.n}"


def cusps_X0(N: int) -> list[CuspData]:
    """The cusps of X_0(N): for each divisor n, phi(gcd(n, N/n)) cusps m/n
    with m the least positive representative of its class prime to n."""
    if N <= 0:
        raise ValueError(f"cusps_X0: need N > 0, got {N}")
    out = []
    for n in divisors(N):
        h = math.gcd(n, N // n)
        ram = N // (n * h)
        for u in range(1, h + 1):
            if math.gcd(u, h) != 1:
                continue
            # least positive m = u (mod h) with gcd(m, n) = 1
            m = u
            while math.gcd(m, n) != 1:
                m += h
            out.append(CuspData(n=n, m=m, h=h, ram_degree=ram))
    assert sum(c.ram_degree for c in out) == psi_index(N)
    return out


def cusps_oracle(N: int) -> int:
    """Independent cusp count for X_0(N): orbits of P^1(Z/N) under the
    parabolic action (c : d) -> (c : c + d)."""
    if N <= 0:
        raise ValueError(f"cusps_oracle: need N > 0, got {N}")
    if N == 1:
        return 1
    units = [u for u in range(1, N) if math.gcd(u, N) == 1]
    gcd_n = [math.gcd(d, N) for d in range(N)]
    point_id: dict[tuple[int, int], int] = {}
    n_points = 0
    for c in range(N):
        gc = gcd_n[c]
        for d in range(N):
            if math.gcd(gc, gcd_n[d]) != 1:
                continue
            if (c, d) in point_id:
                continue
            for u in units:
                point_id[(u * c % N, u * d % N)] = n_points
            n_points += 1
    assert n_points == psi_index(N)
    seen = [False] * n_points
    orbits = 0
    for (c, d), idx in list(point_id.items()):
        if seen[idx]:
            continue
        orbits += 1
        x, y = c, d
        while True:
            seen[point_id[(x, y)]] = True
            y = (y + x) % N
            if seen[point_id[(x, y)]]:
                break
    return orbits


def _nu2(N: int) -> int:
    if N % 4 == 0:
        return 0
    out = 1
    for q in prime_factors(N):
        out *= 1 + kronecker(-4, q)
    return out


def _nu3(N: int) -> int:
    if N % 9 == 0:
        return 0
    out = 1
    for q in prime_factors(N):
        out *= 1 + kronecker(-3, q)
    return out


def genus_X0(N: int) -> int:
    """Genus of X_0(N) by the standard index/elliptic-point/cusp formula."""
    nu_inf = sum(euler_phi(math.gcd(n, N // n)) for n in divisors(N))
    g = 1 + Fraction(psi_index(N), 12) - Fraction(_nu2(N), 4) - Fraction(_nu3(N), 3) - Fraction(nu_inf, 2)
    assert g.denominator == 1 and g >= 0
    return int(g)


def genus_XNp(level: Level) -> int:
    """Genus of X(N, p), closed form."""
    N, p = level.N, level.p
    s = sum(euler_phi(math.gcd(n, N // n)) for n in divisors(N))
    g = 1 + Fraction(psi_index(N) * p * (p * p - 1), 24) - Fraction((p * p - 1) * s, 4)
    assert g.denominator == 1 and g >= 0, f"non-integral genus at {level}"
    return int(g)


def genus_XNp_hurwitz(level: Level) -> int:
    """Independent genus computation for X(N, p): Riemann-Hurwitz over the
    j-line using the cusp data of X_0(N).

    The covering X(N,p) -> X(1) has degree d = psi(N) p (p^2-1)/2; every
    point over j = 1728 has ramification degree 2 and over j = 0 degree 3
    (the curve has no elliptic points), and every cusp of X_0(N) of
    ramification degree e contributes (p^2-1)/2 cusps of degree p*e.
    """
    N, p = level.N, level.p
    d = psi_index(N) * p * (p * p - 1) // 2
    if d % 2 != 0 or d % 3 != 0:
        raise AssertionError("covering degree must be divisible by 6")
    total = Fraction(-2 * d)
    total += Fraction(d, 2)  # over j = 1728: d/2 points with e = 2
    total += Fraction(2 * d, 3)  # over j = 0: d/3 points with e = 3
    m = (p * p - 1) // 2
    cusp_sum = 0
    for c in cusps_X0(N):
        cusp_sum += m * (p * c.ram_degree - 1)
    total += cusp_sum
    assert total % 2 == 0
    g = (total + 2) / 2
    assert g.denominator == 1 and g >= 0
    return int(g)


# ---------------------------------------------------------------------------
# Atkin-Lehner fixed points and quotients
# ---------------------------------------------------------------------------


def _order_od_cyclic_orders(Q: int) -> list[tuple[int, int]]:
    """Pairs (disc, t11) for the orders O with Z[sqrt(-Q)] <= O <= O_K such
    that O / sqrt(-Q) O is cyclic, i.e. the CM orders whose curves carry a
    cyclic self-isogeny of degree Q squaring to -Q.  Here t11 is the second
    coordinate of theta = sqrt(-Q) in the basis (1, f w0) of O, so theta is
    a scalar mod q exactly when q divides t11."""
    d = squarefree_part(Q)
    msq, m = Q // d, math.isqrt(Q // d)
    assert m * m == msq
    if d % 4 == 3:
        dk, cond = -d, 2 * m
    else:
        dk, cond = -4 * d, m
    out = []
    for f in divisors(cond):
        # O_f = Z + f O_K with Z-basis (1, f w0); express theta = m sqrt(-d)
        # and theta * f w0 in that basis and take the Smith form.
        if dk % 4 == 1:  # w0 = (1 + sqrt(-d)) / 2
            # theta * 1 = -m/?  theta = m sqrt(-d) = m (2 w0 - 1)
            # coordinates w.r.t. (1, f w0): theta = (-m, 2m/f)
            if (2 * m) % f != 0:
                continue
            t10, t11 = -m, 2 * m // f
            # theta * f w0 = f m sqrt(-d) w0 = f m (sqrt(-d) + d? ) compute:
            # sqrt(-d) w0 = (sqrt(-d) - d)/2  => theta f w0 = f m (sqrt(-d)-d)/2
            #             = -f m d / 2 + (f m / 2) sqrt(-d)
            # sqrt(-d) = 2 w0 - 1: = -f m d/2 - f m/2 + f m w0
            # coordinates: (-f m (d + 1) / 2, m)
            t20, t21 = -(f * m * (d + 1)) // 2, m
        else:  # w0 = sqrt(-d)
            if m % f != 0:
                continue
            t10, t11 = 0, m // f
            t20, t21 = -f * m * d, 0
        # Smith form of [[t10, t11], [t20, t21]]
        g1 = math.gcd(math.gcd(t10, t11), math.gcd(t20, t21))
        det = abs(t10 * t21 - t11 * t20)
        assert det == Q, (Q, f, det)
        if g1 == 1:  # elementary divisors (1, Q) => cyclic quotient
            out.append((f * f * dk, t11))
    return out


def _al_local_factor(disc: int, t11: int, q: int) -> int:
    """Number of fixed points above the prime q | R lying over one CM point
    with order of discriminant ``disc``: the number of theta-stable lines in
    O/q, up to the extra units when disc = -3.

    If theta = sqrt(-Q) is a scalar mod q (q | t11) every one of the q + 1
    lines is stable; for disc = -3 the order's extra units then identify all
    of them (this occurs only at q = 2).  Otherwise the stable lines are
    exactly the ideal lines of O above q, counted by the Kronecker symbol.
    """
    if t11 % q == 0:
        if disc == -3:
            assert q == 2
            return 1
        return q + 1
    return 1 + kronecker(disc, q)


def al_fixed_points(M: int, Q: int) -> int:
    """Number of fixed points of the Atkin-Lehner involution w_Q on X_0(M).

    Requires Q || M, Q > 1, and R = M/Q squarefree.  Counted via CM theory:
    fixed non-cuspidal points biject with triples (E, theta, C_R) where
    theta in End(E) is a cyclic Q-isogeny with theta^2 = -Q (plus, for Q = 2
    only, theta^2 = +-2i on j = 1728), weighted by Kronecker local factors at
    the primes dividing R; for Q = 4 the involution additionally fixes the
    cusps m/n with ord_2(n) = 1.
    """
    if M % Q != 0 or Q <= 1:
        raise ValueError(f"al_fixed_points: need Q > 1 dividing M, got ({M}, {Q})")
    R = M // Q
    if math.gcd(Q, R) != 1:
        raise ValueError(f"al_fixed_points: need Q || M, got ({M}, {Q})")
    if not is_squarefree(R):
        raise ValueError(f"al_fixed_points: M/Q = {R} not squarefree (unsupported)")
    total = 0
    for disc, t11 in _order_od_cyclic_orders(Q):
        term = class_number_primitive(disc)
        for q in prime_factors(R) if R > 1 else []:
            term *= _al_local_factor(disc, t11, q)
        total += term
    if Q == 2:
        # extra fixed point on j = 1728 from theta = 1 + i with theta^2 = 2i;
        # theta = 1 + 1*i is never a scalar mod q
        term = class_number_primitive(-4)
        for q in prime_factors(R) if R > 1 else []:
            term *= _al_local_factor(-4, 1, q)
        total += term
    if Q == 4:
        # w_4 fixes each cusp m/n with ord_2(n) = 1; with R squarefree and
        # odd each such n carries a single cusp.
        for c in cusps_X0(M):
            n = c.n
            if n % 2 == 0 and n % 4 != 0:
                if euler_phi(c.h) != 1:
                    raise ValueError("al_fixed_points: ambiguous cusp class for Q = 4")
                total += 1
    return total


def genus_AL_quotient(M: int, Q: int) -> int:
    """Genus of X_0(M) / w_Q via Riemann-Hurwitz; errors if the fixed-point
    count is inconsistent with an involution quotient."""
    g = genus_X0(M)
    f = al_fixed_points(M, Q)
    num = 2 * g + 2 - f
    if num % 4 != 0 or num < 0:
        raise AssertionError(
            f"genus_AL_quotient({M}, {Q}): fixed points {f} incompatible with genus {g}"
        )
    return num // 4


_HYPERELLIPTIC_BOUND = 71  # beyond this, X_0(pN)/w_N always has genus > 0


def lemma_pairs(bound: int = _HYPERELLIPTIC_BOUND) -> set[tuple[int, int]]:
    """All pairs (N, p), p an odd prime, N > 1 prime to p, with p*N <= bound
    and X_0(pN)/w_N of genus 0.  Pairs with p*N > 71 cannot occur, so the
    scan is capped there."""
    out = set()
    cap = min(bound, _HYPERELLIPTIC_BOUND)
    for p in odd_primes_upto(cap):
        for N in range(2, cap // p + 1):
            if math.gcd(N, p) != 1:
                continue
            if genus_AL_quotient(p * N, N) == 0:
                out.add((N, p))
    return out


@dataclass(frozen=True)
class GenusReport:
    curve: str
    genus: int | None  # None means "not computed exactly"
    method: str
    note: str = ""


def low_genus_XNp(max_n: int, max_p: int) -> list[tuple[Level, int]]:
    """All levels (N, p) with N <= max_n, p <= max_p and genus X(N,p) <= 1."""
    out = []
    for p in odd_primes_upto(max_p):
        for N in range(2, max_n + 1):
            if math.gcd(N, p) != 1:
                continue
            level = Level(N, p)
            g = genus_XNp(level)
            if g <= 1:
                out.append((level, g))
    return out


def xplus_verdict(level: Level) -> GenusReport:
    """Genus verdict for the quotient X+(N,p) of X(N,p) by w (cyclotomic
    levels only): exact genus for the two small cases, else 'genus > 1'
    whenever X_0(pN)/w_N has positive genus."""
    if not level.cyclotomic:
        raise ValueError(f"xplus_verdict: level {level} is not cyclotomic")
    N, p = level.N, level.p
    name = f"X+({N},{p})"
    if (N, p) == (4, 3):
        # X(4,3) is elliptic, w has fixed points, and the quotient is
        # rational; consistent with X_0(12)/w_4 being rational.
        assert genus_XNp(level) == 1 and genus_AL_quotient(12, 4) == 0
        return GenusReport(curve=name, genus=0, method="paper_case")
    if (N, p) == (4, 5):
        # degree-10 covering of the rational curve X_0(20)/w_4, ramified at
        # four points of degree 5 and ten of degree 2.
        base = genus_AL_quotient(20, 4)
        assert base == 0
        rami = 4 * (5 - 1) + 10 * (2 - 1)
        assert rami == 26
        two_g_minus_2 = 10 * (2 * base - 2) + rami
        assert two_g_minus_2 % 2 == 0
        g = (two_g_minus_2 + 2) // 2
        assert g == 4
        return GenusReport(curve=name, genus=g, method="paper_case")
    q = genus_AL_quotient(p * N, N)
    if q > 0:
        return GenusReport(
            curve=name,
            genus=None,
            method="al_quotient",
            note=f"genus > 1 (X_0({p * N})/w_{N} has genus {q})",
        )
    raise AssertionError(f"unexpected genus-0 quotient at cyclotomic level {level}")
