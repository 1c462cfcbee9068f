"""Cyclotomic cosets modulo p^m - 1 and the integer arithmetic around them."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple, Optional

from .errors import BadModulus


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def extension_degree(p: int, n: int) -> int:
    """The ``m`` with ``n == p**m - 1``; raises BadModulus otherwise."""
    q, m = n + 1, 0
    while q > 1 and q % p == 0:
        q //= p
        m += 1
    if q != 1 or m < 1:
        raise BadModulus(f"{n} + 1 is not a positive power of {p}")
    return m


@dataclass(frozen=True)
class Coset:
    leader: int
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, i: int) -> bool:
        return i in self.elements


def coset(p: int, n: int, i: int) -> Coset:
    """The p-cyclotomic coset of ``i`` modulo ``n = p^m - 1``."""
    extension_degree(p, n)
    i %= n
    members = [i]
    j = i * p % n
    while j != i:
        members.append(j)
        j = j * p % n
    return Coset(min(members), tuple(sorted(members)))


def coset_size(p: int, n: int, i: int) -> int:
    i %= n
    size, j = 1, i * p % n
    while j != i:
        j = j * p % n
        size += 1
    return size


def all_cosets(p: int, n: int) -> list[Coset]:
    """Every coset modulo ``n``, ordered by leader."""
    extension_degree(p, n)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if not seen[i]:
            c = coset(p, n, i)
            for j in c.elements:
                seen[j] = 1
            out.append(c)
    return out


def same_coset(p: int, n: int, i: int, j: int) -> bool:
    i, j = i % n, j % n
    k = i
    while True:
        if k == j:
            return True
        k = k * p % n
        if k == i:
            return False


def lemma1_sufficient(p: int, m: int, v: int) -> bool:
    """Cheap sufficient test for |C_v| = m.

    True when gcd(v, p^m-1) < p, or when gcd(v, p^m-1) * gcd(p^j-1, p^m-1)
    is nonzero mod p^m-1 for every 1 <= j < m.
    """
    n = p**m - 1
    g = gcd(v, n)
    if g < p:
        return True
    return all(g * gcd(p**j - 1, n) % n for j in range(1, m))


class GcdForms(NamedTuple):
    plus_minus: int  # gcd(a^t + 1, a^l - 1)
    plus_plus: int  # gcd(a^t + 1, a^l + 1)
    unspecified: tuple[str, ...]  # names of forms that fell outside the case table


def gcd_power_forms(a: int, t: int, l: int) -> GcdForms:
    """Closed forms for gcd(a^t+1, a^l-1) and gcd(a^t+1, a^l+1).

    Parameter combinations the closed forms do not cover (``a`` even with the
    odd branch) fall back to the integer gcd and are listed in ``unspecified``.
    """
    if a < 2 or t < 1 or l < 1:
        raise ValueError("need a >= 2, t >= 1, l >= 1")
    g = gcd(t, l)
    flags = []

    if (l // g) % 2 == 0:
        pm = a**g + 1
    elif a % 2:
        pm = 2
    else:
        pm = gcd(a**t + 1, a**l - 1)
        flags.append("plus_minus")

    if (t // g) % 2 and (l // g) % 2:
        pp = a**g + 1
    elif a % 2:
        pp = 2
    else:
        pp = gcd(a**t + 1, a**l + 1)
        flags.append("plus_plus")

    return GcdForms(pm, pp, tuple(flags))


def solve_linear_congruence(A: int, B: int, M: int) -> list[int]:
    """All v in [0, M) with A*v = B (mod M), ascending."""
    if M < 2:
        raise ValueError("modulus must be >= 2")
    A, B = A % M, B % M
    g = gcd(A, M)
    if B % g:
        return []
    step = M // g
    x0 = 0 if step == 1 else (B // g) * pow(A // g, -1, step) % step
    return [x0 + t * step for t in range(g)]


def mod_inverse(a: int, M: int) -> Optional[int]:
    if M < 2:
        raise ValueError("modulus must be >= 2")
    if gcd(a, M) != 1:
        return None
    return pow(a, -1, M)
