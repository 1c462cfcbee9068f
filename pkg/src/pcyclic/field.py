"""Arithmetic in GF(p) and GF(p^m) backed by log/antilog tables.

Elements of GF(p^m) are packed integers: the coefficient vector
``(c_0, ..., c_{m-1})`` of the residue class ``c_0 + c_1 x + ...`` modulo the
defining polynomial is stored as ``c_0 + c_1 p + ... + c_{m-1} p^(m-1)``.
The prime subfield is therefore exactly ``range(p)``, and ``alpha`` (the
class of ``x``) is the integer ``p`` when ``m > 1``.

The additive helpers (``add``, ``sub``, ``neg``, ``smul``) accept numpy
arrays as well as Python ints.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional, Sequence

import numpy as np

from . import poly
from .cyclotomic import is_prime, prime_factors
from .errors import (
    DivisionByZero,
    LogOfZero,
    NotIrreducible,
    NotPrime,
    NotPrimitive,
    PCyclicError,
    TableTooLarge,
)

DEFAULT_TABLE_CAP = 2**24


def is_primitive_poly(p: int, f: Sequence[int]) -> bool:
    """True when ``f`` is irreducible and x generates GF(p)[x]/(f)^*."""
    f = poly.normalize(p, f)
    if not poly.is_irreducible(p, f):
        return False
    return _x_has_full_order(p, f)


def _x_has_full_order(p: int, f: poly.Poly) -> bool:
    order = p ** poly.degree(f) - 1
    for r in prime_factors(order):
        if poly.powmod(p, poly.X, order // r, f) == poly.ONE:
            return False
    # m = 1: x is congruent to -f_0, which must not be 0
    return poly.mod(p, poly.X, f) != poly.ZERO


def default_modulus(p: int, m: int) -> poly.Poly:
    """The first monic primitive polynomial of degree ``m``, comparing the
    ascending coefficient sequences lexicographically."""
    for low in itertools.product(range(p), repeat=m):
        f = low + (1,)
        if f[0] and is_primitive_poly(p, f):
            return f
    raise AssertionError(f"no primitive polynomial of degree {m} over GF({p})")


class FieldCtx:
    """A fully tabulated GF(p^m) with a fixed primitive element alpha."""

    def __init__(self, p: int, m: int, modulus: poly.Poly):
        self.p = p
        self.m = m
        self.q = p**m
        self.order = self.q - 1
        self.modulus = modulus
        self._pw = [p**i for i in range(m)]
        self.antilog, self.log = self._build_tables()

    @property
    def key(self) -> tuple:
        return (self.p, self.m, self.modulus)

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={poly.format_poly(self.modulus)})"

    def _build_tables(self):
        p, m, order = self.p, self.m, self.order
        # multiplication by alpha as a matrix acting on coefficient rows
        step = np.zeros((m, m), dtype=np.int64)
        for i in range(m):
            xi = poly.mod(p, (0,) * (i + 1) + (1,), self.modulus)
            step[i, : len(xi)] = xi
        rows = np.zeros((1, m), dtype=np.int64)
        rows[0, 0] = 1
        while len(rows) < order:
            rows = np.vstack([rows, rows @ step % p])
            step = step @ step % p
        rows = rows[:order]
        antilog = rows @ np.array(self._pw, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        log[antilog] = np.arange(order, dtype=np.int64)
        if (log[1:] < 0).any() or log[0] != -1:
            raise NotPrimitive(f"{poly.format_poly(self.modulus)} is not primitive")
        antilog.setflags(write=False)
        log.setflags(write=False)
        return antilog, log

    # representation

    def elem(self, coeffs: Iterable[int]) -> int:
        c = list(coeffs)
        if len(c) > self.m:
            raise PCyclicError(f"element needs at most {self.m} coefficients")
        return sum((a % self.p) * w for a, w in zip(c, self._pw))

    def coeffs(self, z: int) -> tuple[int, ...]:
        return tuple((int(z) // w) % self.p for w in self._pw)

    def elements(self) -> range:
        return range(self.q)

    @property
    def alpha(self) -> int:
        return int(self.antilog[1 % self.order])

    def alpha_pow(self, e: int) -> int:
        return int(self.antilog[e % self.order])

    # additive structure (int or ndarray)

    def add(self, a, b):
        p = self.p
        out = 0
        for w in self._pw:
            out = out + ((a // w + b // w) % p) * w
        return out

    def neg(self, a):
        p = self.p
        out = 0
        for w in self._pw:
            out = out + ((-(a // w)) % p) * w
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def smul(self, c: int, a):
        """Multiply by a scalar of the prime field."""
        p = self.p
        out = 0
        for w in self._pw:
            out = out + ((c * (a // w)) % p) * w
        return out

    # multiplicative structure

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(self.log[a] + self.log[b]) % self.order])

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        prod = self.antilog[(self.log[a] + self.log[b]) % self.order]
        return np.where((a == 0) | (b == 0), 0, prod)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return int(self.antilog[(-self.log[a]) % self.order])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivisionByZero("negative power of 0")
        return int(self.antilog[(int(self.log[a]) * e) % self.order])

    def discrete_log(self, z: int) -> int:
        if z == 0:
            raise LogOfZero("discrete log of 0")
        return int(self.log[z])

    def quadratic_character(self, z: int) -> int:
        if z == 0:
            return 0
        return 1 if self.log[z] % 2 == 0 else -1


def make_field(
    p: int,
    m: int,
    modulus: Optional[Sequence[int]] = None,
    table_cap: int = DEFAULT_TABLE_CAP,
) -> FieldCtx:
    """Validate the inputs and tabulate GF(p^m).

    Without ``modulus`` the deterministic :func:`default_modulus` is used.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise PCyclicError(f"extension degree must be >= 1, got {m}")
    if p**m > table_cap:
        raise TableTooLarge(f"{p}^{m} exceeds the table cap {table_cap}")
    if modulus is None:
        f = default_modulus(p, m)
    else:
        f = tuple(modulus)
        if any(not 0 <= c < p for c in f) or poly.normalize(p, f) != f:
            raise PCyclicError(f"modulus coefficients must be residues mod {p}, no trailing zeros")
        if poly.degree(f) != m or f[-1] != 1:
            raise PCyclicError(f"modulus must be monic of degree {m}")
        if not poly.is_irreducible(p, f):
            raise NotIrreducible(f"{poly.format_poly(f)} is reducible over GF({p})")
        if not _x_has_full_order(p, f):
            raise NotPrimitive(f"{poly.format_poly(f)} is not primitive over GF({p})")
    return FieldCtx(p, m, f)


def legendre(p: int, a: int) -> int:
    """Quadratic character of GF(p) by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1
