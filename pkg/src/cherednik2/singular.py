"""Constructors for the catalogued singular polynomials in Delta(lambda).

Three families, by codomain label kind:

* row label:  (a) (x1^r - x2^r)^k with 2*c0 = k a positive odd integer;
              (b) x1^n x2^n with n - d_i + d_{i-n} = 0;
              (c) a binomial-times-falling-factorial pattern supported on
                  x1^(n-lr) x2^(lr) when n - d_i + d_{i-n} - c0 r = 0 and
                  kr < n < (k+1)r.
* col label:  the same three shapes with c0 replaced by -c0.
* pair label: six clauses; 1a/1b solve a redundant recursive linear system
              for the coefficients, 2a/2b/3a/3b use closed product formulas.

Coefficients are always computed through ``CoeffExpr`` (a scalar times a
quotient of linear factors in a single variable v, v = c0 or v = -c0), so
that for integer c0 the common factors cancel exactly and any genuinely
vanishing denominator triggers the documented clearing: the whole polynomial
is multiplied by the offending factor before evaluation.  Likewise the
recursive system is solved over rational functions of a formal deformation
when some s_t vanishes, and the output is the limit of s_t * p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from cherednik2.labels import Label, Params
from cherednik2.standard_module import ModElem


class InapplicableCaseError(ValueError):
    """The case tag's hypotheses do not hold for these parameters."""


class InconsistentSystemError(ArithmeticError):
    """The redundant recursive system failed a cross-check (a finding)."""


ROW_FAMILIES = ("row_a", "row_b", "row_c")
COL_FAMILIES = ("col_a", "col_b", "col_c")
PAIR_FAMILIES = ("pair_1a", "pair_1b", "pair_2a", "pair_2b", "pair_3a", "pair_3b")


@dataclass(frozen=True)
class CaseTag:
    family: str
    n: int = 0
    k: int = 0

    def __str__(self) -> str:
        return f"{self.family}[n={self.n},k={self.k}]"

    @staticmethod
    def parse(s: str) -> "CaseTag":
        # "row_c:n=8,k=2" or "row_a:k=1" or "pair_1a:n=13,k=3"
        fam, _, rest = s.partition(":")
        kv = dict(part.split("=") for part in rest.split(",") if part)
        return CaseTag(fam, int(kv.get("n", 0)), int(kv.get("k", 0)))

    def serialize(self) -> str:
        return f"{self.family}:n={self.n},k={self.k}"


# ---------------------------------------------------------------------------
# coefficient expressions: scalar * prod (v - z_i) / prod (v - w_j)
# ---------------------------------------------------------------------------

@dataclass
class CoeffExpr:
    scalar: Fraction = Fraction(1)
    num: tuple = ()  # shifts z, each factor (v - z)
    den: tuple = ()

    @staticmethod
    def const(q) -> "CoeffExpr":
        return CoeffExpr(Fraction(q), (), ())

    def times_factor(self, z, in_num: bool = True) -> "CoeffExpr":
        z = Fraction(z)
        if in_num:
            return CoeffExpr(self.scalar, self.num + (z,), self.den)
        return CoeffExpr(self.scalar, self.num, self.den + (z,))

    def scaled(self, q) -> "CoeffExpr":
        return CoeffExpr(self.scalar * Fraction(q), self.num, self.den)

    def cancelled(self) -> "CoeffExpr":
        num, den = list(self.num), list(self.den)
        out_num = []
        for z in num:
            if z in den:
                den.remove(z)
            else:
                out_num.append(z)
        return CoeffExpr(self.scalar, tuple(out_num), tuple(den))

    def vanishing_dens(self, v: Fraction) -> list[Fraction]:
        """Denominator shifts equal to v after cancellation (the poles)."""
        return [z for z in self.cancelled().den if z == v]

    def evaluate(self, v: Fraction) -> Fraction:
        c = self.cancelled()
        val = c.scalar
        for z in c.num:
            val *= v - z
        for z in c.den:
            if v == z:
                raise ZeroDivisionError(f"vanishing denominator factor (v - {z})")
            val /= v - z
        return val


def _clear_and_evaluate(coeffs: dict, v: Fraction) -> tuple[dict, bool]:
    """Evaluate a monomial->CoeffExpr map at v, multiplying everything by the
    vanishing denominator factors first when there are any.

    Returns (monomial -> Fraction, cleared?).
    """
    need: dict[Fraction, int] = {}
    for expr in coeffs.values():
        seen: dict[Fraction, int] = {}
        for z in expr.vanishing_dens(v):
            seen[z] = seen.get(z, 0) + 1
        for z, mult in seen.items():
            need[z] = max(need.get(z, 0), mult)
    cleared = bool(need)
    out = {}
    for key, expr in coeffs.items():
        for z, mult in need.items():
            for _ in range(mult):
                expr = expr.times_factor(z, in_num=True)
        q = expr.evaluate(v)
        if q != 0:
            out[key] = q
    return out, cleared


# ---------------------------------------------------------------------------
# univariate rational functions for the deformed recursive solve
# ---------------------------------------------------------------------------

def _ptrim(p: list[Fraction]) -> tuple[Fraction, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(a, b, sign=1):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += sign * c
    return _ptrim(out)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _ptrim(out)


def _pdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(_ptrim(a)) >= len(b):
        a = list(_ptrim(a))
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] += c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
    return _ptrim(q), _ptrim(a)


def _pgcd(a, b):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


class RatFunc:
    """Rational function of one formal variable over Q, kept reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)) -> None:
        num, den = _ptrim(list(map(Fraction, num))), _ptrim(list(map(Fraction, den)))
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = _pgcd(num, den) if num else ()
        if g and len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        if den:
            lead = den[-1]
            den = tuple(c / lead for c in den)
            num = tuple(c / lead for c in num)
        self.num, self.den = num, den

    @staticmethod
    def const(q) -> "RatFunc":
        return RatFunc((Fraction(q),))

    @staticmethod
    def linear(const, slope=1) -> "RatFunc":
        return RatFunc((Fraction(const), Fraction(slope)))

    def __add__(self, other):
        return RatFunc(_padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
                       _pmul(self.den, other.den))

    def __sub__(self, other):
        return RatFunc(_padd(_pmul(self.num, other.den), _pmul(other.num, self.den), -1),
                       _pmul(self.den, other.den))

    def __mul__(self, other):
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("dividing by the zero rational function")
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def order_at_zero(self) -> int:
        """Vanishing order at 0 (negative for a pole); 10**9 for the zero function."""
        if not self.num:
            return 10 ** 9
        zn = next(i for i, c in enumerate(self.num) if c != 0)
        zd = next(i for i, c in enumerate(self.den) if c != 0)
        return zn - zd

    def shifted_value(self, shift: int) -> Fraction:
        """Value of eps^shift * self at eps -> 0 (shift must kill any pole)."""
        if not self.num:
            return Fraction(0)
        order = self.order_at_zero()
        if order + shift < 0:
            raise ZeroDivisionError("pole not cleared")
        if order + shift > 0:
            return Fraction(0)
        zn = next(i for i, c in enumerate(self.num) if c != 0)
        zd = next(i for i, c in enumerate(self.den) if c != 0)
        return self.num[zn] / self.den[zd]


# ---------------------------------------------------------------------------
# case enumeration
# ---------------------------------------------------------------------------

def _half_integer_k(c0: Fraction, sign: int) -> int | None:
    """k with sign*c0 = k/2, k a positive odd integer, else None."""
    two = 2 * sign * c0
    if two.denominator == 1 and two > 0 and two.numerator % 2 == 1:
        return int(two)
    return None


def applicable_cases(p: Params, label: Label, max_n: int = 30) -> list[CaseTag]:
    """All case tags whose hypotheses hold exactly, with n bounded by max_n."""
    tags: list[CaseTag] = []
    r = p.r
    if label.kind in ("row", "col"):
        i = label.i
        sign = 1 if label.kind == "row" else -1
        fam = ROW_FAMILIES if label.kind == "row" else COL_FAMILIES
        k_half = _half_integer_k(p.c0, sign)
        if k_half is not None:
            tags.append(CaseTag(fam[0], n=k_half * r, k=k_half))
        for n in range(1, max_n + 1):
            base = n - p.d(i) + p.d(i - n)
            if base == 0:
                tags.append(CaseTag(fam[1], n=n, k=0))
            if n % r != 0 and base - sign * p.c0r == 0:
                tags.append(CaseTag(fam[2], n=n, k=n // r))
    else:
        i, j = label.i, label.j
        for n in range(1, max_n + 1):
            if n - p.d(i) + p.d(i - n) == 0 and (n + j - i) % r != 0:
                tags.append(CaseTag("pair_1a", n=n, k=(n + j - i) // r))
            if n - p.d(j) + p.d(j - n) == 0 and (n + i - j) % r != 0:
                tags.append(CaseTag("pair_1b", n=n, k=(n + i - j) // r + 1))
        for fam, val in (("pair_2a", p.d(i) - p.d(j) + p.c0r),
                         ("pair_2b", p.d(j) - p.d(i) + p.c0r),
                         ("pair_3a", p.d(i) - p.d(j) - p.c0r),
                         ("pair_3b", p.d(j) - p.d(i) - p.c0r)):
            if val.denominator != 1 or val < 1 or val > max_n:
                continue
            n = int(val)
            if fam.endswith("a"):
                if (n + j - i) % r == 0 and (n + j - i) // r >= 1:
                    tags.append(CaseTag(fam, n=n, k=(n + j - i) // r - 1))
            else:
                if (n + i - j) % r == 0 and (n + i - j) // r >= 0:
                    tags.append(CaseTag(fam, n=n, k=(n + i - j) // r))
    return tags


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InapplicableCaseError(msg)


# ---------------------------------------------------------------------------
# row / col constructors
# ---------------------------------------------------------------------------

def _beta(l: int, k: int) -> CoeffExpr:
    # v(v-1)...(v-l) / (v-k)(v-(k-1))...(v-(k-l)), l+1 factors each
    e = CoeffExpr.const(1)
    for t in range(l + 1):
        e = e.times_factor(t, in_num=True)
    for t in range(l + 1):
        e = e.times_factor(k - t, in_num=False)
    return e


def _sing_one_dim(p: Params, i: int, tag: CaseTag, kind: str) -> ModElem:
    label = Label(kind, i)
    sign = 1 if kind == "row" else -1
    v = sign * p.c0  # the variable the beta factors live in
    r = p.r
    fam = tag.family
    base_fams = ROW_FAMILIES if kind == "row" else COL_FAMILIES
    _require(fam in base_fams, f"{fam} is not a {kind} case")
    if fam == base_fams[0]:
        k = tag.k
        _require(_half_integer_k(p.c0, sign) == k, "2*c0 = +-k fails or k not odd")
        terms = {}
        for l in range(k + 1):
            terms[(r * (k - l), r * l, 0)] = Fraction(math.comb(k, l) * (-1) ** l)
        return ModElem(label, p, terms)
    n = tag.n
    base = n - p.d(i) + p.d(i - n)
    if fam == base_fams[1]:
        _require(n >= 1 and base == 0, "n - d_i + d_{i-n} != 0")
        return ModElem(label, p, {(n, n, 0): Fraction(1)})
    # the third clause: falling-factorial coefficients
    k = tag.k
    _require(n % r != 0 and n // r == k, "n outside the strict window (kr, (k+1)r)")
    _require(base - sign * p.c0r == 0, "defining scalar condition fails")
    if k == 0:
        return ModElem(label, p, {(n, 0, 0): Fraction(1)})
    coeffs: dict[tuple, CoeffExpr] = {(n, 0): CoeffExpr.const(1)}
    for l in range(0, k // 2 + 1):
        key = (n - (k - l) * r, (k - l) * r)
        coeffs[key] = _beta(l, k).scaled(math.comb(k, l))
    for l in range(1, (k - 1) // 2 + 1):
        key = (n - l * r, l * r)
        coeffs[key] = _beta(l - 1, k).scaled(math.comb(k, l))
    values, _cleared = _clear_and_evaluate(coeffs, v)
    return ModElem(label, p, {(a, b, 0): q for (a, b), q in values.items()})


def sing_row(p: Params, i: int, tag: CaseTag) -> ModElem:
    """Singular polynomial in Delta(row:i) for an applicable case tag."""
    return _sing_one_dim(p, i, tag, "row")


def sing_col(p: Params, i: int, tag: CaseTag) -> ModElem:
    """Singular polynomial in Delta(col:i); mirror of sing_row with c0 -> -c0."""
    return _sing_one_dim(p, i, tag, "col")


# ---------------------------------------------------------------------------
# pair constructors
# ---------------------------------------------------------------------------

@dataclass
class RecSystem:
    """Solved coefficients of the recursive system for the pair 1a/1b clauses.

    ``s`` has entries s_1..s_k, ``a`` entries a_1..a_k, ``b`` entries
    b_1..b_{k-1}.  When some s_t = 0 the values are those of the limit of
    s_t * p under the one-parameter deformation shifting every s_t together
    (the only direction the parameter space allows), and ``cleared`` is set.
    """

    k: int
    s: list[Fraction]
    a: list[Fraction]
    b: list[Fraction]
    cleared: bool = False
    lead: Fraction = Fraction(1)  # coefficient of the leading monomial


def _solve_system_generic(k: int, s: dict, c0r, c0, r: int, const):
    """Solve the redundant coefficient system over any field.

    ``s`` maps 1..k to field elements; c0r, c0 are field elements; ``const``
    lifts a Fraction into the field.  Returns (a, b) as 1-indexed dicts with
    a over 1..k and b over 1..k-1.  The five relation families are solved in
    the alternating order (b_l, b_{k-l}, a_{l+1}, a_{k-l+1}) and then all of
    them are re-verified; any disagreement raises InconsistentSystemError.
    """
    a: dict[int, object] = {}
    b: dict[int, object] = {}

    def a_from_formula(l):
        acc = const(Fraction(1))
        for jj in range(1, l):
            acc = acc + b[k - jj] * const(Fraction(k - 2 * jj, jj))
        return (c0r / s[l]) * acc

    def b_from_formula(l):
        acc = const(Fraction(0))
        for jj in range(0, l):
            acc = acc + (a[jj + 1] / s[k - jj]) * const(Fraction((k - 2 * jj - 1) * r))
        return (c0 * acc) * const(Fraction(1, l))

    def assign(store, idx, val, what):
        if idx in store:
            if store[idx] != val:
                raise InconsistentSystemError(f"{what}[{idx}] disagrees between routes")
        else:
            store[idx] = val

    assign(a, 1, c0r / s[1], "a")
    for l in range(1, k + 1):
        if l <= k - 1:
            assign(b, l, b_from_formula(l), "b")
            if 1 <= k - l <= k - 1:
                assign(b, k - l, b[l] * const(Fraction(l, k - l)), "b")
        if l + 1 <= k:
            assign(a, l + 1, a_from_formula(l + 1), "a")
        if 1 <= k - l + 1 <= k:
            assign(a, k - l + 1, (s[l] * a[l]) / s[k - l + 1], "a")

    if a[1] * s[1] != c0r:
        raise InconsistentSystemError("s1*a1 != c0*r")
    for l in range(1, k + 1):
        if s[l] * a[l] != s[k - l + 1] * a[k - l + 1]:
            raise InconsistentSystemError(f"s_l a_l mirror fails at l={l}")
        if a[l] != a_from_formula(l):
            raise InconsistentSystemError(f"a-formula fails at l={l}")
    for l in range(1, k):
        if b[l] * const(Fraction(l)) != b[k - l] * const(Fraction(k - l)):
            raise InconsistentSystemError(f"b mirror fails at l={l}")
        if b[l] != b_from_formula(l):
            raise InconsistentSystemError(f"b-formula fails at l={l}")
    return a, b


def solve_rec_system(p: Params, i: int, j: int, variant: str, n: int, k: int) -> RecSystem:
    """Solve the coefficient system for the pair 1a/1b clauses (i < j).

    1a: kr < n + j - i < (k+1)r,   n - d_i + d_{i-n} = 0,  s_t = j-i-d_j+d_i-tr
    1b: (k-1)r < n + i - j < kr,   n - d_j + d_{j-n} = 0,  s_t = i-j-d_i+d_j-(t-1)r
    """
    _require(i < j, "pair indices must be stored with i < j")
    r = p.r
    if variant == "1a":
        _require(n - p.d(i) + p.d(i - n) == 0, "1a scalar condition fails")
        _require(k * r < n + j - i < (k + 1) * r, "1a window fails")
        s_vals = [Fraction(j - i) - p.d(j) + p.d(i) - t * r for t in range(0, k + 1)]
    elif variant == "1b":
        _require(n - p.d(j) + p.d(j - n) == 0, "1b scalar condition fails")
        _require((k - 1) * r < n + i - j < k * r, "1b window fails")
        s_vals = [Fraction(i - j) - p.d(i) + p.d(j) - (t - 1) * r for t in range(0, k + 1)]
    else:
        raise InapplicableCaseError(f"unknown variant {variant!r}")
    s_list = s_vals[1:]  # s_1..s_k
    if k == 0:
        return RecSystem(k=0, s=[], a=[], b=[])

    if all(sv != 0 for sv in s_list):
        s = {t: s_vals[t] for t in range(1, k + 1)}
        a, b = _solve_system_generic(k, s, p.c0r, p.c0, r, Fraction)
        return RecSystem(k=k, s=s_list,
                         a=[a[l] for l in range(1, k + 1)],
                         b=[b[l] for l in range(1, k)])

    # some s_t vanishes: deform every s_t by the same formal eps (the only
    # deformation the parameter space admits), solve over Q(eps), and return
    # the limit of s_t * p -- or of p itself when no coefficient has a pole.
    s = {t: RatFunc.linear(s_vals[t]) for t in range(1, k + 1)}
    c0r_f, c0_f = RatFunc.const(p.c0r), RatFunc.const(p.c0)
    a, b = _solve_system_generic(k, s, c0r_f, c0_f, r, RatFunc.const)
    worst = min([a[l].order_at_zero() for l in range(1, k + 1)]
                + [b[l].order_at_zero() for l in range(1, k)] + [0])
    shift = -worst
    lead = Fraction(1 if shift == 0 else 0)  # eps^shift * 1 -> 0 when clearing
    return RecSystem(
        k=k, s=s_list,
        a=[a[l].shifted_value(shift) for l in range(1, k + 1)],
        b=[b[l].shifted_value(shift) for l in range(1, k)],
        cleared=shift > 0, lead=lead)


def _closed_pair_coeffs(k: int) -> dict[int, CoeffExpr]:
    """Closed-form a_1..a_k for the pair 2/3 clauses, in the variable v.

    a_l   = (1/l!) * v(v-1)...(v-(l-1)) * k(k-1)...(k-(l-1))
                   / ((v-k)(v-(k-1))...(v-(k-(l-1))))       for l <= [(k+1)/2]
    a_{k-l} has one more factor (v-l) upstairs and (v-(k-l)) downstairs;
    a_k = v/(v-k).  Even k takes the middle coefficient from the a_l form.
    """
    out: dict[int, CoeffExpr] = {}
    for idx in range(1, k + 1):
        if idx == k:
            out[idx] = CoeffExpr.const(1).times_factor(0, True).times_factor(k, False)
            continue
        if idx <= (k + 1) // 2:
            l = idx
            e = CoeffExpr.const(Fraction(math.perm(k, l), math.factorial(l)))
            for t in range(l):
                e = e.times_factor(t, True)
            for t in range(l):
                e = e.times_factor(k - t, False)
        else:
            l = k - idx
            e = CoeffExpr.const(Fraction(math.perm(k, l), math.factorial(l)))
            for t in range(l + 1):
                e = e.times_factor(t, True)
            for t in range(l + 1):
                e = e.times_factor(k - t, False)
        out[idx] = e
    return out


def sing_pair(p: Params, i: int, j: int, tag: CaseTag) -> ModElem:
    """Singular polynomial in Delta(pair:i,j) for an applicable case tag."""
    _require(i < j, "pair indices must be stored with i < j")
    label = Label.pair(i, j)
    r, n, k = p.r, tag.n, tag.k
    fam = tag.family
    _require(fam in PAIR_FAMILIES, f"{fam} is not a pair case")

    if fam in ("pair_1a", "pair_1b"):
        sys = solve_rec_system(p, i, j, fam[-2:], n, k)
        terms: dict = {}
        if fam == "pair_1a":
            terms[(n, 0, 0)] = sys.lead if k > 0 else Fraction(1)
            for l in range(1, k):
                terms[(n - l * r, l * r, 0)] = sys.b[l - 1]
            for l in range(1, k + 1):
                terms[(n - l * r + j - i, l * r - j + i, 1)] = sys.a[l - 1]
        else:
            terms[(0, n, 0)] = sys.lead if k > 0 else Fraction(1)
            for l in range(1, k):
                terms[(l * r, n - l * r, 0)] = sys.b[l - 1]
            for l in range(0, k):
                terms[(l * r + j - i, n - l * r - j + i, 1)] = sys.a[l]
        return ModElem(label, p, {key: c for key, c in terms.items() if c != 0})

    # closed-coefficient families
    family2 = fam in ("pair_2a", "pair_2b")
    v = p.c0 if family2 else -p.c0
    mirror_sign = Fraction(-1 if family2 else 1)
    if fam.endswith("a"):
        _require(n == i - j + (k + 1) * r, "degree equation fails")
        _require(n == p.d(i) - p.d(j) + (p.c0r if family2 else -p.c0r),
                 "scalar condition fails")
        lead_slot, other_slot = 0, 1
    else:
        _require(n == j - i + k * r, "degree equation fails")
        _require(n == p.d(j) - p.d(i) + (p.c0r if family2 else -p.c0r),
                 "scalar condition fails")
        lead_slot, other_slot = 1, 0

    coeffs: dict[tuple, CoeffExpr] = {
        (n, 0, lead_slot): CoeffExpr.const(1),
        (0, n, other_slot): CoeffExpr.const(mirror_sign),
    }
    acoef = _closed_pair_coeffs(k)
    for l in range(1, k + 1):
        coeffs[(n - r * l, r * l, lead_slot)] = acoef[l]
        coeffs[(r * l, n - r * l, other_slot)] = acoef[l].scaled(mirror_sign)
    values, _cleared = _clear_and_evaluate(coeffs, v)
    return ModElem(label, p, values)


def construct(p: Params, label: Label, tag: CaseTag) -> ModElem:
    """Dispatch a case tag to the right constructor for this label."""
    if label.kind == "row":
        return sing_row(p, label.i, tag)
    if label.kind == "col":
        return sing_col(p, label.i, tag)
    return sing_pair(p, label.i, label.j, tag)


def coefficient_ledger(p: Params, label: Label, tag: CaseTag) -> dict:
    """The intermediate coefficients behind a constructed polynomial (for reports)."""
    if tag.family in ("pair_1a", "pair_1b"):
        sys = solve_rec_system(p, label.i, label.j, tag.family[-2:], tag.n, tag.k)
        return {
            "s": [str(x) for x in sys.s],
            "a": [str(x) for x in sys.a],
            "b": [str(x) for x in sys.b],
            "cleared": sys.cleared,
        }
    if tag.family in ("pair_2a", "pair_2b", "pair_3a", "pair_3b"):
        v = p.c0 if tag.family.startswith("pair_2") else -p.c0
        out = {}
        for idx, e in _closed_pair_coeffs(tag.k).items():
            try:
                out[f"a_{idx}"] = str(e.evaluate(v))
            except ZeroDivisionError:
                out[f"a_{idx}"] = "pole"
        return out
    if tag.family in ("row_c", "col_c"):
        v = p.c0 if tag.family == "row_c" else -p.c0
        out = {}
        for l in range(0, tag.k + 1):
            out[f"alpha_{l}"] = str(math.comb(tag.k, l))
            try:
                out[f"beta_{l}"] = str(_beta(l, tag.k).evaluate(v))
            except ZeroDivisionError:
                out[f"beta_{l}"] = "pole"
        return out
    return {}
