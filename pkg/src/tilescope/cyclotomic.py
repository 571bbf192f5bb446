"""Exact mask-polynomial algebra over the integers.

The mask polynomial of a finite integer set A is ``sum of x**a`` over
``a`` in A (after translating the minimum to 0).  Which cyclotomic
polynomials divide it controls both tiling and spectral structure, so
everything here is integer-exact: cyclotomic polynomials are computed by
exact division, divisibility is an exact polynomial remainder, and
vanishing of root-of-unity exponential sums is decided through cyclotomic
divisibility rather than floating point.

The (T1)/(T2) conditions and the resulting explicit spectrum construction
follow the Coven-Meyerowitz / Laba line: (T1) equates #A with the product
of the primes under its prime-power support, (T2) asks for divisibility at
products of coprime support entries, and together they yield the spectrum
``{sum of k_s / s}`` in the cyclic group of order lcm(support).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial as a coefficient tuple, lowest degree first.

    No trailing zeros; the zero polynomial is the empty tuple.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "IntPolynomial":
        exps = sorted(set(exponents))
        if not exps:
            return cls.zero()
        if exps[0] < 0:
            raise ValueError(f"negative exponent {exps[0]}")
        coeffs = [0] * (exps[-1] + 1)
        for e in exps:
            coeffs[e] = 1
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(
            tuple(x + y for x, y in zip(a, b)) + a[len(b):]
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + IntPolynomial(tuple(-c for c in other.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def divmod_monic(
        self, divisor: "IntPolynomial"
    ) -> tuple["IntPolynomial", "IntPolynomial"]:
        """Exact division by a monic divisor over Z."""
        if divisor.is_zero or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - d - 1, -1, -1):
            q = rem[i + d]
            if q:
                quot[i] = q
                for j, c in enumerate(divisor.coeffs):
                    rem[i + j] -= q * c
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:d]))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mag = "" if abs(c) == 1 and e > 0 else str(abs(c))
            var = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            terms.append((c < 0, mag + var))
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, t in terms[1:]:
            out += (" - " if neg else " + ") + t
        return out


def prime_power_root(n: int) -> int | None:
    """The prime p when n = p**a with a >= 1, else None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
        p += 1
    return n


def euler_phi(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            out *= p - 1
            m //= p
            while m % p == 0:
                out *= p
                m //= p
        p += 1
    if m > 1:
        out *= m - 1
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(s: int) -> IntPolynomial:
    """The s-th cyclotomic polynomial, exactly.

    Prime powers use the closed form ``1 + x**q + ... + x**((p-1)q)`` with
    ``q = s / p``; otherwise ``x**s - 1`` is divided by the product of the
    cyclotomic polynomials of the proper divisors.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if s == 1:
        return IntPolynomial((-1, 1))
    p = prime_power_root(s)
    if p is not None:
        q = s // p
        coeffs = [0] * ((p - 1) * q + 1)
        for j in range(p):
            coeffs[j * q] = 1
        return IntPolynomial(tuple(coeffs))
    x_s_minus_1 = IntPolynomial((-1,) + (0,) * (s - 1) + (1,))
    divisor = IntPolynomial.one()
    for d in range(1, s):
        if s % d == 0:
            divisor = divisor * cyclotomic_poly(d)
    quot, rem = x_s_minus_1.divmod_monic(divisor)
    assert rem.is_zero
    return quot


def mask_poly(a: Iterable[int]) -> IntPolynomial:
    """0/1 mask polynomial of a set, translated so the minimum maps to x**0.

    Divisibility by any cyclotomic polynomial of order >= 2 is invariant
    under the translation.
    """
    vals = sorted(set(a))
    if not vals:
        raise ValueError("mask polynomial of an empty set")
    return IntPolynomial.from_exponents(v - vals[0] for v in vals)


def divides(s: int, a: Iterable[int]) -> bool:
    """Whether the s-th cyclotomic polynomial divides the mask of the set."""
    if s < 2:
        raise ValueError(f"s must be >= 2, got {s}")
    _, rem = mask_poly(a).divmod_monic(cyclotomic_poly(s))
    return rem.is_zero


@dataclass(frozen=True)
class PrimePowerSupport:
    """The prime powers whose cyclotomic polynomials divide a mask."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(sorted(set(self.entries)))
        for e in entries:
            if prime_power_root(e) is None:
                raise ValueError(f"{e} is not a prime power > 1")
        object.__setattr__(self, "entries", entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(prime_power_root(e) for e in self.entries)

    @property
    def lcm(self) -> int:
        return math.lcm(*self.entries) if self.entries else 1

    @property
    def prime_product(self) -> int:
        return math.prod(self.primes)


def support(a: Iterable[int]) -> PrimePowerSupport:
    """All prime powers s with the s-th cyclotomic dividing the mask of A.

    A divisor must have degree phi(s) at most the mask degree, so testing
    every prime power with phi(s) <= max(A) - min(A) is exhaustive.
    """
    vals = sorted(set(a))
    if not vals:
        raise ValueError("support of an empty set")
    span = vals[-1] - vals[0]
    found = []
    for p in range(2, span + 2):
        if prime_power_root(p) != p:
            continue
        s = p
        while euler_phi(s) <= span:
            if divides(s, vals):
                found.append(s)
            s *= p
    return PrimePowerSupport(tuple(sorted(found)))


def check_t1(a: Iterable[int]) -> bool:
    """Size condition: #A equals the product of the support's primes."""
    vals = set(a)
    return len(vals) == support(vals).prime_product


def check_t2(a: Iterable[int], strict: bool = False) -> bool:
    """Divisibility at products of support entries for distinct primes.

    For every subset of the support of size >= 2 whose entries are powers
    of pairwise distinct primes, the cyclotomic polynomial of the product
    must divide the mask.  ``strict=True`` widens the subsets to all
    combinations of distinct entries (powers of one prime included), a
    literal reading that is strictly harder to satisfy.
    """
    vals = sorted(set(a))
    entries = support(vals).entries
    for k in range(2, len(entries) + 1):
        for combo in combinations(entries, k):
            if not strict:
                primes = [prime_power_root(e) for e in combo]
                if len(set(primes)) != len(primes):
                    continue
            if not divides(math.prod(combo), vals):
                return False
    return True


@dataclass(frozen=True)
class RationalSpectrum:
    """A finite set of rationals in [0, 1) with a common denominator."""

    elements: tuple[Fraction, ...]
    denominator: int

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        if len(elems) != len(self.elements):
            raise ValueError("spectrum elements must be distinct")
        for e in elems:
            if not 0 <= e < 1:
                raise ValueError(f"element {e} outside [0, 1)")
            if self.denominator % e.denominator != 0:
                raise ValueError(f"{e} does not divide denominator {self.denominator}")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def scaled(self, factor: int) -> tuple[int, ...]:
        """The elements multiplied by an integer factor, when all are integers."""
        out = []
        for e in self.elements:
            v = e * factor
            if v.denominator != 1:
                raise ValueError(f"{e} * {factor} is not an integer")
            out.append(int(v))
        return tuple(sorted(out))


def laba_spectrum(a: Iterable[int]) -> RationalSpectrum:
    """The explicit spectrum ``{sum of k_s / s mod 1}`` of a (T1)+(T2) set.

    One term per support entry s = p**alpha with k_s ranging over
    0..p-1; the sums are reduced into [0, 1) and are pairwise distinct,
    giving exactly #A elements with common denominator lcm(support).
    """
    vals = sorted(set(a))
    if not check_t1(vals):
        raise ValueError(f"(T1) fails for {vals}")
    if not check_t2(vals):
        raise ValueError(f"(T2) fails for {vals}")
    supp = support(vals)
    elements = set()
    ranges = [range(prime_power_root(s)) for s in supp]
    for ks in product(*ranges):
        total = sum(
            (Fraction(k, s) for k, s in zip(ks, supp)), start=Fraction(0)
        )
        elements.add(total % 1)
    spectrum = RationalSpectrum(tuple(sorted(elements)), supp.lcm)
    assert len(spectrum) == len(vals)
    return spectrum


def vanishes_at(a: Iterable[int], m: int, n: int) -> bool:
    """Whether the exponential sum of A at frequency m/n is exactly zero.

    The sum is the mask evaluated at a primitive (n/gcd(m,n))-th root of
    unity, so it vanishes iff m != 0 and the matching cyclotomic
    polynomial divides the mask.  No floating point is involved.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= m < n:
        raise ValueError(f"m must lie in [0, {n}), got {m}")
    if m == 0:
        return False
    return divides(n // math.gcd(m, n), a)
