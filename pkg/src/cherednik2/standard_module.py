"""Elements of the standard module Delta(lambda) and the operator actions on them.

As a vector space Delta(lambda) is C[x1,x2] tensor S^lambda, so an element is
a finite map (n, m, slot) -> coefficient with n, m the exponents of x1, x2 and
slot indexing the tableau basis of S^lambda.  Polynomials act by
multiplication, the group acts diagonally on both tensor factors, and the
Dunkl operators y1, y2 act by the closed formulas implemented in ``y_act``.

Convention for the group action on monomials (the x's are the dual basis):
diag(zeta^a, zeta^b) sends x1^n x2^m to zeta^(-an-bm) x1^n x2^m, and the
anti-diagonal element [[0, z^a], [z^b, 0]] sends it to
zeta^(-bn-am) x1^m x2^n.  This is the unique sign choice under which the
closed y-action agrees with the first-principles commutation rules and the
equivariance s y1 s = y2 holds; the test suite enforces both.
"""

from __future__ import annotations

import re
from fractions import Fraction

from cherednik2.cyclo import CycloNum, NotRationalError, to_rational
from cherednik2.labels import GroupElement, Label, Params, rep_matrix

SLOT_NAMES = {0: "T", 1: "T1", 2: "T2"}
# slot encoding inside terms: 0 for the single tableau of row/col labels,
# 0/1 for the two tableaux of a pair label.


def _slot_text(label: Label, t: int) -> str:
    return "vT" if label.kind != "pair" else ("vT1" if t == 0 else "vT2")


class ModElem:
    """Element of Delta(label) with exact rational coefficients.  Immutable."""

    __slots__ = ("label", "params", "terms")

    def __init__(self, label: Label, params: Params, terms: dict | None = None) -> None:
        self.label = label
        self.params = params
        clean = {}
        for key, c in (terms or {}).items():
            n, m, t = key
            c = Fraction(c)
            if c == 0:
                continue
            if n < 0 or m < 0:
                raise ValueError(f"negative exponent in term {key}")
            if t not in (0, 1) or (t == 1 and label.kind != "pair"):
                raise ValueError(f"bad slot {t} for label {label}")
            clean[(n, m, t)] = c
        self.terms = clean

    # -- basic structure ------------------------------------------------
    @staticmethod
    def zero(label: Label, params: Params) -> "ModElem":
        return ModElem(label, params, {})

    @staticmethod
    def generator(label: Label, params: Params, t: int = 0) -> "ModElem":
        return ModElem(label, params, {(0, 0, t): Fraction(1)})

    @staticmethod
    def monomial(label: Label, params: Params, n: int, m: int, t: int = 0,
                 coeff=1) -> "ModElem":
        return ModElem(label, params, {(n, m, t): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        if not self.terms:
            return None
        return max(n + m for (n, m, _t) in self.terms)

    def _compatible(self, other: "ModElem") -> None:
        if self.label != other.label or self.params != other.params:
            raise ValueError("elements live in different standard modules")

    def __add__(self, other: "ModElem") -> "ModElem":
        self._compatible(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return ModElem(self.label, self.params, terms)

    def __sub__(self, other: "ModElem") -> "ModElem":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "ModElem":
        q = Fraction(scalar)
        return ModElem(self.label, self.params,
                       {k: q * c for k, c in self.terms.items()})

    def __neg__(self) -> "ModElem":
        return (-1) * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModElem):
            return NotImplemented
        return (self.label == other.label and self.params == other.params
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.label, self.params, frozenset(self.terms.items())))

    # -- module operations -----------------------------------------------
    def x_mul(self, shift: tuple[int, int], coeff=1) -> "ModElem":
        """Multiply by coeff * x1^a * x2^b."""
        a, b = shift
        q = Fraction(coeff)
        if q == 0:
            return ModElem.zero(self.label, self.params)
        return ModElem(self.label, self.params,
                       {(n + a, m + b, t): q * c for (n, m, t), c in self.terms.items()})

    def homogeneous_component(self, d: int) -> "ModElem":
        return ModElem(self.label, self.params,
                       {k: c for k, c in self.terms.items() if k[0] + k[1] == d})

    def degrees(self) -> list[int]:
        return sorted({n + m for (n, m, _t) in self.terms})

    def w_act(self, g: GroupElement) -> "ModElem":
        """Apply a group element; raises NotRationalError if a coefficient
        fails to collapse to a rational (use ``w_act_cyclo`` for those)."""
        out = {}
        for (key, val) in w_act_cyclo(self.label, self.params, g,
                                      {k: CycloNum.from_rational(self.params.r, c)
                                       for k, c in self.terms.items()}).items():
            q = to_rational(val)
            if q != 0:
                out[key] = out.get(key, Fraction(0)) + q
        return ModElem(self.label, self.params, out)

    def y_act(self, axis: int) -> "ModElem":
        return y_act(self, axis)

    def is_singular(self) -> bool:
        """True iff both Dunkl operators annihilate the element."""
        return y_act(self, 1).is_zero() and y_act(self, 2).is_zero()

    # -- I/O ----------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple[int, int, int], Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1], kv[0][2]))

    def text(self) -> str:
        """Canonical text form, terms ordered by (n desc, m asc, slot asc)."""
        if not self.terms:
            return "0"
        parts = []
        for (n, m, t), c in self.sorted_terms():
            mono = "*".join(
                ([f"x1^{n}"] if n else []) + ([f"x2^{m}"] if m else [])) or "1"
            parts.append(f"({c})*{mono} (x) {_slot_text(self.label, t)}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "label": self.label.serialize(),
            "terms": [
                {"n": n, "m": m, "slot": _slot_text(self.label, t), "coeff": str(c)}
                for (n, m, t), c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: dict, params: Params) -> "ModElem":
        label = Label.parse(data["label"])
        terms = {}
        for item in data["terms"]:
            t = 0 if item["slot"] in ("vT", "vT1", "T", "T1") else 1
            key = (int(item["n"]), int(item["m"]), t)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(item["coeff"])
        return ModElem(label, params, terms)

    _TERM_RE = re.compile(
        r"^(?P<coeff>[+-]?\d+(?:/\d+)?)?(?P<stars>\*?)"
        r"(?:x1\^(?P<n>\d+))?\*?(?:x2\^(?P<m>\d+))?"
        r"(?:@(?P<slot>T1|T2|T))?$")

    @staticmethod
    def parse(label: Label, params: Params, text: str) -> "ModElem":
        """Parse the CLI element syntax: '+'-joined terms c*x1^n*x2^m@t."""
        terms: dict = {}
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty element")
        for chunk in text.split("+"):
            m = ModElem._TERM_RE.match(chunk)
            if not m or not chunk:
                raise ValueError(f"bad term {chunk!r}")
            coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
            n = int(m.group("n") or 0)
            mm = int(m.group("m") or 0)
            slot = m.group("slot") or ("T1" if label.kind == "pair" else "T")
            t = 1 if slot == "T2" else 0
            if t == 1 and label.kind != "pair":
                raise ValueError("slot T2 only exists for pair labels")
            key = (n, mm, t)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return ModElem(label, params, terms)

    def __repr__(self) -> str:
        return f"ModElem({self.label}, {self.text()})"


def w_act_cyclo(label: Label, params: Params, g: GroupElement,
                terms: dict) -> dict:
    """Group action on cyclotomic-coefficient term maps (the general case).

    diag part multiplies x1^n x2^m by zeta^(-an-bm); a swap exchanges the
    exponents with the twist zeta^(-bn-am); the slot transforms by the
    representation matrix.
    """
    r = params.r
    mat = rep_matrix(label, g, r)
    out: dict = {}
    for (n, m, t), c in terms.items():
        if g.swap:
            mono_phase = CycloNum.zeta_pow(r, -(g.b * n + g.a * m))
            new_nm = (m, n)
        else:
            mono_phase = CycloNum.zeta_pow(r, -(g.a * n + g.b * m))
            new_nm = (n, m)
        for t_out in range(label.dim):
            entry = mat[t_out][t]
            if entry.is_zero():
                continue
            key = (new_nm[0], new_nm[1], t_out)
            add = mono_phase * entry * c
            acc = out.get(key)
            out[key] = add if acc is None else acc + add
    return {k: v for k, v in out.items() if not v.is_zero()}


def _emit(out: dict, n: int, m: int, t: int, c: Fraction) -> None:
    if c == 0:
        return
    if n < 0 or m < 0:
        raise AssertionError("closed-form action produced a negative exponent")
    key = (n, m, t)
    out[key] = out.get(key, Fraction(0)) + c


def _y_one_dim(p: Params, i: int, sign: int, n: int, m: int, c: Fraction,
               axis: int, out: dict) -> None:
    # Shared closed formula for the two one-dimensional families: sign=+1 for
    # a row label, -1 for a column label (which flips every c0*r term).
    scr = sign * p.c0r
    if axis == 1:
        if n > m:
            _emit(out, n - 1, m, 0, c * (n - p.d(i) + p.d(i - n) - scr))
            for k in range(1, (n - m - 1) // p.r + 1):
                _emit(out, n - k * p.r - 1, m + k * p.r, 0, -c * scr)
        else:
            coeff = n - p.d(i) + p.d(i - n)
            if coeff != 0:
                _emit(out, n - 1, m, 0, c * coeff)
            for k in range(1, (m - n) // p.r + 1):
                _emit(out, n + k * p.r - 1, m - k * p.r, 0, c * scr)
    else:
        if n >= m:
            coeff = m - p.d(i) + p.d(i - m)
            if coeff != 0:
                _emit(out, n, m - 1, 0, c * coeff)
            for k in range(1, (n - m) // p.r + 1):
                _emit(out, n - k * p.r, m + k * p.r - 1, 0, c * scr)
        else:
            _emit(out, n, m - 1, 0, c * (m - p.d(i) + p.d(i - m) - scr))
            for k in range(1, (m - n - 1) // p.r + 1):
                _emit(out, n + k * p.r, m - k * p.r - 1, 0, -c * scr)


def _y_pair(p: Params, i: int, j: int, n: int, m: int, t: int, c: Fraction,
            axis: int, out: dict) -> None:
    # Pair label with stored i < j.  The cross-slot tails shift exponents by
    # j - i; every summation bound below its start is empty.
    r, rc0 = p.r, p.c0r
    dji = j - i
    if axis == 1:
        if t == 0:
            coeff = n - p.d(i) + p.d(i - n)
            if coeff != 0:
                _emit(out, n - 1, m, 0, c * coeff)
            if n > m:
                for k in range(1, (n - m - 1 + dji) // r + 1):
                    _emit(out, n - k * r + dji - 1, m + k * r - dji, 1, -c * rc0)
            elif n < m:
                for k in range(0, (m - n - dji) // r + 1):
                    _emit(out, n + k * r + dji - 1, m - k * r - dji, 1, c * rc0)
        else:
            coeff = n - p.d(j) + p.d(j - n)
            if coeff != 0:
                _emit(out, n - 1, m, 1, c * coeff)
            if n > m:
                for k in range(0, (n - m - 1 - dji) // r + 1):
                    _emit(out, n - k * r - dji - 1, m + k * r + dji, 0, -c * rc0)
            elif n < m:
                for k in range(1, (m - n + dji) // r + 1):
                    _emit(out, n + k * r - dji - 1, m - k * r + dji, 0, c * rc0)
    else:
        if t == 0:
            coeff = m - p.d(j) + p.d(j - m)
            if coeff != 0:
                _emit(out, n, m - 1, 0, c * coeff)
            if n > m:
                for k in range(1, (n - m + dji) // r + 1):
                    _emit(out, n - k * r + dji, m + k * r - dji - 1, 1, c * rc0)
            elif n < m:
                for k in range(0, (m - n - dji - 1) // r + 1):
                    _emit(out, n + k * r + dji, m - k * r - dji - 1, 1, -c * rc0)
        else:
            coeff = m - p.d(i) + p.d(i - m)
            if coeff != 0:
                _emit(out, n, m - 1, 1, c * coeff)
            if n > m:
                for k in range(0, (n - m - dji) // r + 1):
                    _emit(out, n - k * r - dji, m + k * r + dji - 1, 0, c * rc0)
            elif n < m:
                for k in range(1, (m - n + dji - 1) // r + 1):
                    _emit(out, n + k * r - dji, m - k * r + dji - 1, 0, -c * rc0)


def y_act(e: ModElem, axis: int) -> ModElem:
    """Closed-form action of the Dunkl operator y1 or y2 on an element.

    Linear extension of the per-monomial formulas: a "derivative" term whose
    coefficient is n - d_i + d_{i-n} possibly shifted by +-c0*r, plus a tail
    of monomials stepped by r coming from the reflection sum collapsing over
    the r-th roots of unity.  Homogeneous input of degree d maps to degree
    d-1 (or to zero).
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    p = e.params
    out: dict = {}
    lab = e.label
    for (n, m, t), c in e.terms.items():
        if lab.kind == "row":
            _y_one_dim(p, lab.i, +1, n, m, c, axis, out)
        elif lab.kind == "col":
            _y_one_dim(p, lab.i, -1, n, m, c, axis, out)
        else:
            _y_pair(p, lab.i, lab.j, n, m, t, c, axis, out)
    return ModElem(lab, p, out)
