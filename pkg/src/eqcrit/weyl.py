"""Weyl sums mod p^2 for equicritical integral pairs: the direct O(p^2)
sum, the critical-point reduced formula, and the paired check that the two
scaled family members produce identical sums."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (DegenerateLeadingCoefficient, NotCoprime, NotPrime,
                     PoleAtT)
from .family import f_t, g_t

MAX_PRIME = 10_000


def is_prime(p: int) -> bool:
    """Trial division; desk-scale inputs only."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def check_prime(p: int) -> None:
    if p > MAX_PRIME:
        raise ValueError(f"p = {p} exceeds the desk-scale bound {MAX_PRIME}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


@dataclass(frozen=True)
class FpPoly:
    """Integer polynomial reduced mod q (q = p or p^2).

    The coefficient tuple keeps its declared length so that a leading
    coefficient that vanished in the reduction stays detectable.
    """

    p: int
    q: int
    coeffs: tuple[int, ...]

    @classmethod
    def reduce(cls, coeffs, p: int, power: int = 1) -> "FpPoly":
        q = p ** power
        return cls(p, q, tuple(int(c) % q for c in coeffs))

    @property
    def degree(self) -> int | None:
        """Actual degree after reduction (None for the zero polynomial)."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return None

    def degenerate_leading(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] % self.p == 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.q
        return acc

    def derivative(self) -> "FpPoly":
        return FpPoly(self.p, self.q,
                      tuple(c * i % self.q
                            for i, c in enumerate(self.coeffs) if i >= 1))


def _c_at(coeffs, i):
    return coeffs[i] if 0 <= i < len(coeffs) else 0


def _fp_roots_with_multiplicity(f: FpPoly) -> list[tuple[int, int]]:
    """Roots of f in F_p with multiplicity, by exhaustive scan plus
    repeated synthetic division (q must be p)."""
    p = f.p
    out = []
    for v in range(p):
        if f(v) != 0:
            continue
        mult = 0
        cs = list(f.coeffs)
        while len(cs) >= 2:
            # synthetic division of cs by (x - v) mod p
            quot = [0] * (len(cs) - 1)
            acc = 0
            for i in range(len(cs) - 1, 0, -1):
                acc = (acc * v + cs[i]) % p
                quot[i - 1] = acc
            if (acc * v + cs[0]) % p != 0:
                break
            mult += 1
            cs = quot
        out.append((v, mult))
    return out


def weyl_direct(f: FpPoly, a: int, p: int) -> complex:
    """(1/p) sum over x mod p^2 of e(a f(x)/p^2); O(p^2) terms."""
    check_prime(p)
    if math.gcd(a, p) != 1:
        raise NotCoprime(f"gcd({a}, {p}) != 1")
    q = p * p
    if f.q != q:
        raise ValueError("polynomial must be reduced mod p^2")
    x = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % q
    phases = np.exp((2j * np.pi / q) * ((a % q) * acc % q))
    return complex(phases.sum() / p)


def weyl_reduced(f: FpPoly, a: int, p: int) -> complex:
    """The critical-point reduction of the mod-p^2 Weyl sum:
    sum of e(a f(v)/p^2) over v in F_p with f'(v) = 0 mod p.

    Splitting x = u + pv in the direct sum collapses it to this O(p) form
    whenever gcd(a, p) = 1; the values f(v) are taken mod p^2 (they are
    well defined there because f'(v) vanishes mod p).
    """
    check_prime(p)
    if math.gcd(a, p) != 1:
        raise NotCoprime(f"gcd({a}, {p}) != 1")
    q = p * p
    if f.q != q:
        raise ValueError("polynomial must be reduced mod p^2")
    if not f.coeffs or f.degenerate_leading():
        raise DegenerateLeadingCoefficient("leading coefficient vanishes mod p")
    fp = f.derivative()
    total = 0j
    for v in range(p):
        if fp(v) % p == 0:
            total += cmath.exp(2j * cmath.pi * (a * f(v) % q) / q)
    return total


def crit_values_mod_p(f: FpPoly, p: int) -> tuple[list[int], int, int]:
    """({f(v) : f'(v) = 0}, with the root multiplicity of f', as a sorted
    list), the number of derivative roots found with multiplicity, and
    deg f'."""
    check_prime(p)
    if f.q != p:
        raise ValueError("polynomial must be reduced mod p")
    if not f.coeffs or f.degenerate_leading():
        raise DegenerateLeadingCoefficient("leading coefficient vanishes mod p")
    fp = f.derivative()
    values = []
    found = 0
    for v, mult in _fp_roots_with_multiplicity(fp):
        values.extend([f(v)] * mult)
        found += mult
    deg = fp.degree if fp.degree is not None else 0
    return sorted(values), found, deg


@dataclass
class WeylReport:
    """Paired Weyl-sum verification at (t, p, a)."""

    p: int
    a: int
    t: int
    direct_f: complex
    direct_g: complex
    reduced_f: complex
    reduced_g: complex
    crit_found_f: int
    crit_found_g: int
    crit_expected: int
    exact_multiset_equal: bool
    guards: dict
    tolerance: float

    @property
    def pair_difference(self) -> float:
        return abs(self.direct_f - self.direct_g)

    @property
    def within_tolerance(self) -> bool:
        return (self.pair_difference < self.tolerance
                and abs(self.direct_f - self.reduced_f) < self.tolerance
                and abs(self.direct_g - self.reduced_g) < self.tolerance)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p, "a": self.a, "t": self.t,
            "W_f": [self.direct_f.real, self.direct_f.imag],
            "W_g": [self.direct_g.real, self.direct_g.imag],
            "reduced_f": [self.reduced_f.real, self.reduced_f.imag],
            "reduced_g": [self.reduced_g.real, self.reduced_g.imag],
            "exact_multiset_equal": self.exact_multiset_equal,
            "crit_rational": [self.crit_found_f, self.crit_found_g],
            "guards": self.guards,
            "pair_difference": self.pair_difference,
            "within_tolerance": self.within_tolerance,
        }


def default_tolerance(p: int) -> float:
    # error accumulation over p^2 complex exponentials
    return 1e-9 if p <= 500 else 1e-7


def scaled_integral_pair(t: int) -> tuple[list[int], list[int]]:
    """F = 3(t+2)^4 f_t and G = 3(t+2)^4 g_t as integer coefficient lists."""
    if t in (1, -2):
        raise PoleAtT(f"t = {t} is outside the integral family")
    scale = Fraction(3 * (t + 2) ** 4)
    out = []
    for poly in (f_t(Fraction(t)), g_t(Fraction(t))):
        coeffs = []
        for c in poly.coeffs:
            v = c.as_rational() * scale
            if v.denominator != 1:
                raise ArithmeticError("scaled family member is not integral")
            coeffs.append(int(v))
        out.append(coeffs)
    return out[0], out[1]


def fd_pair_check(t: int, p: int, a: int,
                  tolerance: float | None = None) -> WeylReport:
    """Build the integral pair F = 3(t+2)^4 f_t, G = 3(t+2)^4 g_t, reduce
    mod p and p^2, compute all four Weyl values, and check the exact value
    multiset {a F(v) mod p : F'(v) = 0} against G's.

    Preconditions: p > 3 prime, gcd(a, p) = 1, p does not divide t(t-1)
    (the stated condition) nor 3(t+2) (leading-coefficient guard; a
    strengthening recorded in the guards map when it is the binding one).
    """
    check_prime(p)
    if p <= 3:
        raise NotPrime("need p > 3")
    if math.gcd(a, p) != 1:
        raise NotCoprime(f"gcd({a}, {p}) != 1")
    if t in (1, -2):
        raise PoleAtT(f"t = {t} is outside the integral family")
    stated_ok = t % p != 0 and (t - 1) % p != 0
    guard_ok = (3 * (t + 2)) % p != 0
    if not stated_ok:
        raise DegenerateLeadingCoefficient(
            f"p = {p} divides t(t-1); the reduced pair degenerates")
    if not guard_ok:
        raise DegenerateLeadingCoefficient(
            f"p = {p} divides 3(t+2): leading coefficient of the scaled "
            "first member vanishes (strengthened guard beyond the stated "
            "condition)")
    F, G = scaled_integral_pair(t)
    tol = default_tolerance(p) if tolerance is None else tolerance
    Fq, Gq = FpPoly.reduce(F, p, 2), FpPoly.reduce(G, p, 2)
    Fp_, Gp_ = FpPoly.reduce(F, p, 1), FpPoly.reduce(G, p, 1)
    direct_f = weyl_direct(Fq, a, p)
    direct_g = weyl_direct(Gq, a, p)
    reduced_f = weyl_reduced(Fq, a, p)
    reduced_g = weyl_reduced(Gq, a, p)
    vals_f, found_f, expected = crit_values_mod_p(Fp_, p)
    vals_g, found_g, _ = crit_values_mod_p(Gp_, p)
    mf = sorted(a * v % p for v in vals_f)
    mg = sorted(a * v % p for v in vals_g)
    return WeylReport(
        p=p, a=a, t=t,
        direct_f=direct_f, direct_g=direct_g,
        reduced_f=reduced_f, reduced_g=reduced_g,
        crit_found_f=found_f, crit_found_g=found_g, crit_expected=expected,
        exact_multiset_equal=(mf == mg),
        guards={"condition_p_ndiv_t(t-1)": stated_ok,
                "guard_p_ndiv_3(t+2)": guard_ok},
        tolerance=tol)
