"""Dense polynomials over GF(p).

A polynomial a_0 + a_1 x + ... + a_n x^n is a tuple ``(a_0, ..., a_n)`` of
residues in ``range(p)`` with a nonzero last entry; the zero polynomial is
``()``.  Every function takes the characteristic ``p`` explicitly.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import CoefficientNotInBaseField, DivisionByZero

Poly = tuple  # tuple[int, ...], least-degree first

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)


def normalize(p: int, coeffs: Iterable[int]) -> Poly:
    c = [a % p for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    """Degree of ``f``; the zero polynomial gets -1 as a stand-in for -inf."""
    return len(f) - 1


def add(p: int, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return normalize(p, [x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def neg(p: int, a: Poly) -> Poly:
    return normalize(p, [-x for x in a])


def sub(p: int, a: Poly, b: Poly) -> Poly:
    return add(p, a, neg(p, b))


def mul(p: int, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return normalize(p, out)


def scale(p: int, a: Poly, c: int) -> Poly:
    return normalize(p, [c * x for x in a])


def monic(p: int, a: Poly) -> Poly:
    if not a:
        return a
    return scale(p, a, pow(a[-1], -1, p))


def poly_divmod(p: int, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    if len(rem) <= db:
        return ZERO, tuple(rem)
    lead_inv = pow(b[-1], -1, p)
    quot = [0] * (len(rem) - db)
    for shift in range(len(rem) - 1 - db, -1, -1):
        c = rem[shift + db] * lead_inv % p
        quot[shift] = c
        if c:
            for j, y in enumerate(b):
                rem[shift + j] = (rem[shift + j] - c * y) % p
    return normalize(p, quot), normalize(p, rem[:db])


def mod(p: int, a: Poly, b: Poly) -> Poly:
    return poly_divmod(p, a, b)[1]


def gcd(p: int, a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is 0."""
    while b:
        a, b = b, mod(p, a, b)
    return monic(p, a)


def powmod(p: int, base: Poly, e: int, modulus: Poly) -> Poly:
    result = mod(p, ONE, modulus)
    base = mod(p, base, modulus)
    while e > 0:
        if e & 1:
            result = mod(p, mul(p, result, base), modulus)
        base = mod(p, mul(p, base, base), modulus)
        e >>= 1
    return result


def poly_arith(p: int, a: Poly, b: Poly, kind: str):
    """Dispatch one of ``add``, ``sub``, ``mul``, ``divmod`` or ``gcd``."""
    ops = {"add": add, "sub": sub, "mul": mul, "divmod": poly_divmod, "gcd": gcd}
    try:
        op = ops[kind]
    except KeyError:
        raise ValueError(f"unknown polynomial operation {kind!r}") from None
    return op(p, a, b)


def evaluate(p: int, f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def is_irreducible(p: int, f: Sequence[int]) -> bool:
    """Irreducibility over GF(p) via gcd(f, x^(p^d) - x) for d <= deg(f)/2."""
    f = monic(p, normalize(p, f))
    n = degree(f)
    if n < 1:
        raise ValueError("irreducibility needs a polynomial of degree >= 1")
    if n == 1:
        return True
    if f[0] == 0:
        return False
    xp = X
    for _ in range(n // 2):
        xp = powmod(p, xp, p, f)
        if degree(gcd(p, f, sub(p, xp, X))) > 0:
            return False
    return True


def has_root(p: int, f: Sequence[int]) -> bool:
    """Exhaustive root scan over GF(p)."""
    f = normalize(p, f)
    return any(evaluate(p, f, x) == 0 for x in range(p))


def minimal_polynomial(ctx, i: int) -> Poly:
    """Minimal polynomial of alpha^i over GF(p), as the product of (x - alpha^j)
    over the cyclotomic coset of ``i``."""
    n = ctx.order
    if not 0 <= i < n:
        raise ValueError(f"exponent {i} outside [0, {n - 1}]")
    p = ctx.p
    members = [i]
    j = i * p % n
    while j != i:
        members.append(j)
        j = j * p % n

    # coefficients live in GF(p^m) until the end
    acc = [1]
    for j in members:
        root = ctx.alpha_pow(j)
        nxt = [0] * (len(acc) + 1)
        for t, c in enumerate(acc):
            nxt[t + 1] = ctx.add(nxt[t + 1], c)
            nxt[t] = ctx.sub(nxt[t], ctx.mul(c, root))
        acc = nxt
    for c in acc:
        if c >= p:
            raise CoefficientNotInBaseField(
                f"minimal polynomial of alpha^{i} has coefficient {ctx.coeffs(c)}"
            )
    return normalize(p, acc)


def parse_coeffs(text: str) -> Poly:
    """Parse the ascending comma-separated form, e.g. ``"2,4,4,0,1"``."""
    text = text.strip()
    if not text:
        return ZERO
    out = [int(tok) for tok in text.split(",")]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def format_coeffs(f: Poly) -> str:
    return ",".join(str(c) for c in f)


def format_poly(f: Poly, var: str = "x") -> str:
    """Descending monomial form, e.g. ``x^4 + 4x^2 + 4x + 2``."""
    if not f:
        return "0"
    terms = []
    for e in range(len(f) - 1, -1, -1):
        c = f[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
            continue
        mono = var if e == 1 else f"{var}^{e}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms)


def parse_poly(text: str, p: int, var: str = "x") -> Poly:
    """Inverse of :func:`format_poly` (descending monomial form)."""
    coeffs: dict[int, int] = {}
    for term in text.replace(" ", "").replace("-", "+-").split("+"):
        if not term:
            continue
        if var in term:
            head, _, tail = term.partition(var)
            c = 1 if head in ("", "+") else (-1 if head == "-" else int(head))
            e = int(tail[1:]) if tail.startswith("^") else 1
        else:
            c, e = int(term), 0
        coeffs[e] = coeffs.get(e, 0) + c
    if not coeffs:
        return ZERO
    return normalize(p, [coeffs.get(e, 0) for e in range(max(coeffs) + 1)])
