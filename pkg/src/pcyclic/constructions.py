"""The four families of exponents v built around u = (p^m + 1)/2.

Each ``family_*`` function returns :class:`FamilyInstance` objects holding
the derived exponents, a checklist of every hypothesis (tested directly,
never assumed) and the algebraic criterion verdict.  :func:`verify_instance`
then classifies the resulting codes C_p(0, 1, w) end to end so that the
prediction can be compared with what the code actually is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple, Optional

from .code import CodeReport, classify
from .cyclotomic import coset, coset_size, mod_inverse, same_coset, solve_linear_congruence
from .errors import DegenerateDefiningSet, HypothesisFailed, PCyclicError
from .field import FieldCtx, legendre

FAMILIES = ("t1", "t2", "t4c1", "t4c2", "t4c3", "t4c4", "t5")


class UInfo(NamedTuple):
    u: int
    u_inv: Optional[int]
    coset_size: int
    self_inverse: bool


def derive_u(p: int, m: int) -> UInfo:
    if p % 2 == 0:
        raise PCyclicError("u = (p^m+1)/2 needs an odd prime")
    q = p**m
    u = (q + 1) // 2
    return UInfo(u, mod_inverse(u, q - 1), coset_size(p, q - 1, u), q % 4 == 1)


def exponent_for_code(p: int, m: int, u: int, v: int) -> list[tuple[int, str]]:
    """Exponents w of the codes C_p(0, 1, w) attached to (u, v)."""
    n = p**m - 1
    out = []
    u_inv = mod_inverse(u, n)
    if u_inv is not None:
        out.append((u_inv * v % n, "u^{-1}v"))
    v_inv = mod_inverse(v, n)
    if v_inv is not None:
        out.append((u * v_inv % n, "uv^{-1}"))
    return out


@dataclass
class Check:
    name: str
    passed: bool
    note: str = ""
    hypothesis: bool = True  # False: informational, does not gate the prediction


class CriterionResult(NamedTuple):
    has_solution: bool
    witness: Optional[dict]


@dataclass
class FamilyInstance:
    family: str
    p: int
    m: int
    params: dict
    u: int
    u_inv: Optional[int]
    v: int
    v_inv: Optional[int]
    w_candidates: list[tuple[int, str]]
    checks: list[Check] = field(default_factory=list)
    criterion: Optional[CriterionResult] = None
    corollary: Optional[tuple[str, bool]] = None

    @property
    def n(self) -> int:
        return self.p**self.m - 1

    @property
    def hypotheses_pass(self) -> bool:
        return all(c.passed for c in self.checks if c.hypothesis)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if c.hypothesis and not c.passed]

    @property
    def predicted_d(self) -> Optional[int]:
        """4 or 3 as the criterion predicts, None when a hypothesis fails."""
        if not self.hypotheses_pass or not self.w_candidates:
            return None
        if self.criterion is None:
            return 4
        return 3 if self.criterion.has_solution else 4

    @property
    def sort_key(self) -> tuple:
        return (self.family, self.p, self.m, tuple(sorted(self.params.items())), self.v)

    def distinct_w(self) -> list[int]:
        seen: list[int] = []
        for w, _ in self.w_candidates:
            if w not in seen:
                seen.append(w)
        return seen


def _eta_restricted(p: int, m: int, x: int) -> int:
    # the GF(p^m) character restricted to GF(p)
    return 1 if m % 2 == 0 else legendre(p, x)


def criterion_systems(p: int, v_residue: int, m_parity: int) -> CriterionResult:
    """Search GF(p) for a distinct pair (x, y) solving system (i) or (ii).

    (i)  1+b1+b2 = 0, x+b1+b2*y = 0, x^v+b1+b2*y^v = 0, eta(x) = eta(y) = 1
    (ii) 1+b1+b2 = 0, x+b1-b2*y = 0, x^v+b1+b2*y^v = 0, eta(x) = 1, eta(y) = -1

    with x, y in GF(p)^* minus {1} and b1 in GF(p)^* minus {-1}.  ``v`` only
    matters modulo p-1, eta only through the parity of m.
    """
    if p < 5:
        raise PCyclicError("criterion systems need p >= 5")
    e = v_residue % (p - 1)
    eta = {x: _eta_restricted(p, m_parity, x) for x in range(1, p)}
    for system, sign, eta_y in (("i", 1, 1), ("ii", -1, -1)):
        for x in range(2, p):
            if eta[x] != 1:
                continue
            for y in range(2, p):
                if y == x or eta[y] != eta_y:
                    continue
                for b1 in range(1, p - 1):
                    b2 = (-1 - b1) % p
                    if (x + b1 + sign * b2 * y) % p:
                        continue
                    if (pow(x, e, p) + b1 + b2 * pow(y, e, p)) % p == 0:
                        return CriterionResult(True, {"system": system, "x": x, "y": y, "b1": b1, "b2": b2})
    return CriterionResult(False, None)


def theorem5_condition(p: int) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether x^2 + 2(b+1)x + b has no root x in GF(p)^* minus {1, -1} with
    eta(x) = 1 for every b in GF(p)^* minus {-1}; else the first (b, x)."""
    if p % 4 != 1:
        raise PCyclicError("the quadratic condition is stated for p = 1 (mod 4)")
    for b in range(1, p - 1):
        for x in range(2, p - 1):
            if legendre(p, x) == 1 and (x * x + 2 * (b + 1) * x + b) % p == 0:
                return False, (b, x)
    return True, None


_RESIDUE_CLASSES = {
    2: (8, {1, 7}),
    3: (12, {1, 11}),
    5: (5, {1, 4}),
    6: (24, {1, 5, 19, 23}),
    7: (28, {1, 9, 25, 27, 19, 3}),
}


def residue_criteria(p: int, q_small: int) -> bool:
    """eta(q_small) = 1 in GF(p), decided by the congruence class of p."""
    if q_small not in _RESIDUE_CLASSES:
        raise ValueError(f"no congruence rule for {q_small}")
    if p % 2 == 0 or p == q_small:
        raise ValueError("p must be an odd prime different from q_small")
    modulus, classes = _RESIDUE_CLASSES[q_small]
    return p % modulus in classes


def _gcd_check(name: str, a: int, m: int) -> Check:
    g = gcd(a, m)
    return Check(name, g == 1, f"= {g}")


def _structural_checks(p: int, m: int, u: int, v: int) -> list[Check]:
    n = p**m - 1
    gv = gcd(v, n)
    size = coset_size(p, n, v) if v % n else 1
    return [
        Check("p>=5", p >= 5, f"p = {p}"),
        Check("p^m=1 (mod 4) or gcd(v,p^m-1)=1", p**m % 4 == 1 or gv == 1,
              f"p^m mod 4 = {p**m % 4}, gcd(v,p^m-1) = {gv}"),
        Check("v not in C_u", not same_coset(p, n, u, v), f"C_u leader {coset(p, n, u).leader}"),
        Check("|C_v|=m", size == m, f"|C_v| = {size}"),
    ]


def _finish(inst: FamilyInstance) -> FamilyInstance:
    inst.checks.append(Check("w candidates exist", bool(inst.w_candidates),
                             ", ".join(f"{t}={w}" for w, t in inst.w_candidates) or "none",
                             hypothesis=False))
    inst.corollary = corollary_verdict(inst)
    return inst


def _new(family, p, m, params, v) -> FamilyInstance:
    n = p**m - 1
    info = derive_u(p, m)
    v %= n
    return FamilyInstance(family, p, m, params, info.u, info.u_inv, v, mod_inverse(v, n),
                          exponent_for_code(p, m, info.u, v))


def family_T1(p: int, m: int, h: int, k: int) -> list[FamilyInstance]:
    """All v with v(p^k + 1) = p^h + 1 (mod p^m - 1)."""
    if not (0 <= h < m and 0 <= k < m):
        raise PCyclicError("need 0 <= h, k < m")
    n = p**m - 1
    out = []
    for v in solve_linear_congruence(p**k + 1, p**h + 1, n):
        inst = _new("t1", p, m, {"h": h, "k": k}, v)
        inst.checks = [
            _gcd_check("gcd(h-k,m)=1", h - k, m),
            _gcd_check("gcd(h+k,m)=1", h + k, m),
            *_structural_checks(p, m, inst.u, v),
        ]
        if p >= 5:
            inst.criterion = criterion_systems(p, v % (p - 1), m % 2)
        out.append(_finish(inst))
    return out


def family_T2(p: int, m: int, h: int, k: int) -> list[FamilyInstance]:
    """All v with v(p^k - 1) = p^h - 1 (mod p^m - 1)."""
    if not (0 <= h < m and 0 < k < m):
        raise PCyclicError("need 0 <= h < m and 0 < k < m")
    n = p**m - 1
    out = []
    for v in solve_linear_congruence(p**k - 1, p**h - 1, n):
        inst = _new("t2", p, m, {"h": h, "k": k}, v)
        inst.checks = [
            Check("m odd", m % 2 == 1, f"m = {m}"),
            _gcd_check("gcd(h,m)=1", h, m),
            _gcd_check("gcd(h-k,m)=1", h - k, m),
            *_structural_checks(p, m, inst.u, v),
        ]
        if p >= 5:
            inst.criterion = criterion_systems(p, v % (p - 1), m % 2)
        out.append(_finish(inst))
    return out


def t4_exponent(p: int, m: int, case: int, k: Optional[int] = None) -> int:
    q = p**m
    half = (q - 1) // 2
    if case in (1, 2):
        if k is None or not 0 <= k < m:
            raise PCyclicError(f"case {case} needs 0 <= k < m")
        return half + p**k + 1 if case == 1 else half + 2 * p**k
    if case == 3:
        return half + (q - 3) // 2
    if case == 4:
        return half - 1
    raise PCyclicError(f"unknown case {case}")


def family_T4(p: int, m: int, case: int, k: Optional[int] = None) -> FamilyInstance:
    """v = (p^m-1)/2 + r for the four offsets r; a violated case condition is
    recorded as a failed check rather than raised."""
    v = t4_exponent(p, m, case, k)
    n = p**m - 1
    params = {"case": case, "k": k} if case in (1, 2) else {"case": case}
    inst = _new(f"t4c{case}", p, m, params, v)
    if case == 1:
        ratio = m // gcd(k, m)
        cond = Check("m/gcd(k,m)=0 (mod 4)", ratio % 4 == 0, f"m/gcd(k,m) = {ratio}")
    elif case == 2:
        cond = Check("m=0 (mod 4)", m % 4 == 0, f"m = {m}")
    elif case == 3:
        cond = Check("m even", m % 2 == 0, f"m = {m}")
    else:
        cond = Check("p^m=1 (mod 4) or gcd(v,p^m-1)=1", p**m % 4 == 1 or gcd(v, n) == 1,
                     f"p^m mod 4 = {p**m % 4}, gcd(v,p^m-1) = {gcd(v, n)}")
    structural = [c for c in _structural_checks(p, m, inst.u, inst.v)
                  if c.name != "p^m=1 (mod 4) or gcd(v,p^m-1)=1"]
    inst.checks = [cond, *structural]
    return _finish(inst)


def family_T5(p: int, m: int) -> FamilyInstance:
    """v = -2 (mod p^m - 1) for p = 1 (mod 4) and odd m."""
    if p % 4 != 1 or m % 2 == 0:
        raise HypothesisFailed(f"needs p = 1 (mod 4) and m odd, got p={p}, m={m}")
    n = p**m - 1
    inst = _new("t5", p, m, {}, n - 2)
    # only u^{-1}v is claimed; v = -2 is never invertible
    inst.w_candidates = [(w, t) for w, t in inst.w_candidates if t == "u^{-1}v"]
    inst.checks = _structural_checks(p, m, inst.u, inst.v)
    holds, witness = theorem5_condition(p)
    inst.criterion = CriterionResult(not holds, None if holds else {"b": witness[0], "x": witness[1]})
    return _finish(inst)


def corollary_verdict(inst: FamilyInstance) -> Optional[tuple[str, bool]]:
    """Closed-form shortcut for small p: (name, predicts optimal) or None."""
    if not inst.hypotheses_pass:
        return None
    p, m, v = inst.p, inst.m, inst.v
    if inst.family == "t1":
        if p == 5 and ((v % 4 == 1 and m % 2) or (v % 4 == 3 and m % 2 == 0)):
            return ("cor2", True)
        if p >= 7:
            return ("cor3", False)
    elif inst.family == "t2" and m % 2:
        if p == 5:
            return ("cor4", v % 4 in (1, 2))
        if p == 7 and gcd(v, inst.n) == 1:
            return ("cor5", v % 6 == 5)
    elif inst.family == "t5" and p == 5:
        return ("cor7", True)
    return None


@dataclass
class Verification:
    instance: FamilyInstance
    reports: list[CodeReport]
    errors: dict[int, str]  # w -> reason it could not be classified

    @property
    def verified_d(self) -> Optional[int]:
        ds = {r.d for r in self.reports}
        return ds.pop() if len(ds) == 1 else None

    @property
    def agrees(self) -> bool:
        """False only when a prediction exists and some verified d differs."""
        pred = self.instance.predicted_d
        if pred is None:
            return True
        if self.errors:
            return False
        return all(r.d == pred for r in self.reports)


def verify_instance(inst: FamilyInstance, ctx: FieldCtx) -> Verification:
    """Classify every distinct candidate w of ``inst`` in ``ctx``."""
    if (ctx.p, ctx.m) != (inst.p, inst.m):
        raise PCyclicError("field context does not match the instance")
    reports, errors = [], {}
    for w in inst.distinct_w():
        try:
            reports.append(classify(ctx, w))
        except DegenerateDefiningSet as exc:
            errors[w] = str(exc)
    return Verification(inst, reports, errors)
