"""Ground-truth Dunkl action evaluated from the defining commutation rules.

This module never uses the collapsed closed formulas of ``standard_module``:
it evaluates, entirely over Q(zeta_r),

    y1 (x1^n x2^m  (x) v)
        = x1^(n-1) x2^m (x) [n - sum_j (d_j/r) sum_l zeta^(-lj)(1-zeta^(-ln))
                                  diag(zeta^l, 1)] v
          - c0 sum_l [(f - s_l f)/(x1 - zeta^l x2)] (x) s_l v,

with s_l the anti-diagonal reflection [[0, zeta^l], [zeta^-l, 0]], and the
mirrored expression for y2 (reflections [[0, zeta^-l], [zeta^l, 0]] and the
denominator x2 - zeta^l x1).  Every coefficient is then collapsed back to a
rational; a failure to collapse signals a bug, not bad input.

It also checks the defining relations y_i x_j - x_j y_i against the
group-algebra commutators, with the idempotents
e_ij = (1/r) sum_l zeta^(-lj) zeta_i^l built from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cherednik2.cyclo import CycloNum, to_rational
from cherednik2.labels import GroupElement, Label, Params, w_act_on_rep
from cherednik2.standard_module import ModElem, w_act_cyclo, y_act


class NonDivisibleError(ArithmeticError):
    """The reflected difference was not divisible by its linear form (a bug)."""


# A bivariate polynomial over Q(zeta_r) is a dict (n, m) -> CycloNum.

def _reflect_poly(f: dict, l: int, axis: int, r: int) -> dict:
    """Apply the axis-appropriate reflection to a polynomial.

    axis 1 uses s_l = [[0, z^l], [z^-l, 0]]:   x1^n x2^m -> z^(l(n-m)) x1^m x2^n
    axis 2 uses t_l = [[0, z^-l], [z^l, 0]]:   x1^n x2^m -> z^(l(m-n)) x1^m x2^n
    """
    out: dict = {}
    for (n, m), c in f.items():
        phase = CycloNum.zeta_pow(r, l * (n - m) if axis == 1 else l * (m - n))
        key = (m, n)
        add = phase * c
        out[key] = out[key] + add if key in out else add
    return out


def divided_diff(f: dict, l: int, axis: int, r: int) -> dict:
    """Exact quotient (f - s_l f) / (x1 - zeta^l x2) (axis 1), or the axis-2
    analogue with denominator x2 - zeta^l x1."""
    num: dict = dict(f)
    for key, c in _reflect_poly(f, l, axis, r).items():
        num[key] = num[key] - c if key in num else -c
    num = {k: v for k, v in num.items() if not v.is_zero()}
    zl = CycloNum.zeta_pow(r, l)
    quot: dict = {}
    # synthetic long division by the binomial; main variable is x1 for axis 1
    # and x2 for axis 2.
    main = 0 if axis == 1 else 1
    while num:
        key = max(num, key=lambda k: (k[main], k[1 - main]))
        if key[main] == 0:
            raise NonDivisibleError("remainder left after dividing reflected difference")
        c = num.pop(key)
        n, m = key
        if axis == 1:
            qkey, rkey = (n - 1, m), (n - 1, m + 1)
        else:
            qkey, rkey = (n, m - 1), (n + 1, m - 1)
        quot[qkey] = quot[qkey] + c if qkey in quot else c
        add = zl * c
        if rkey in num:
            num[rkey] = num[rkey] + add
            if num[rkey].is_zero():
                del num[rkey]
        elif not add.is_zero():
            num[rkey] = add
    return quot


def _diag_bracket(label: Label, p: Params, exp: int, axis: int, t: int) -> list[CycloNum]:
    """[exp - sum_j (d_j/r) sum_l zeta^(-lj)(1 - zeta^(-l*exp)) diag_l] e_t

    where diag_l is diag(zeta^l, 1) for axis 1 and diag(1, zeta^l) for axis 2,
    applied to the slot-t basis vector of S^label.
    """
    r = p.r
    unit = [Fraction(1) if s == t else Fraction(0) for s in range(label.dim)]
    acc = [CycloNum.from_rational(r, exp * u) for u in unit]
    for jj in range(r):
        dj = p.d(jj) / r
        if dj == 0:
            continue
        for l in range(r):
            phase = CycloNum.zeta_pow(r, -l * jj) * (
                CycloNum.one(r) - CycloNum.zeta_pow(r, -l * exp))
            if phase.is_zero():
                continue
            g = GroupElement(l, 0, False) if axis == 1 else GroupElement(0, l, False)
            gv = w_act_on_rep(label, g, unit, r)
            for s in range(label.dim):
                acc[s] = acc[s] - dj * phase * gv[s]
    return acc


def y_act_oracle(e: ModElem, axis: int) -> ModElem:
    """Evaluate the Dunkl operator directly from the commutation rules."""
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    p, label, r = e.params, e.label, e.params.r
    acc: dict = {}  # (n, m, t) -> CycloNum

    def add(key, val) -> None:
        if val.is_zero():
            return
        acc[key] = acc[key] + val if key in acc else val

    for (n, m, t), c in e.terms.items():
        cf = Fraction(c)
        exp = n if axis == 1 else m
        # polynomial-degree part
        vec = _diag_bracket(label, p, exp, axis, t)
        if any(not v.is_zero() for v in vec):
            if exp == 0:
                raise AssertionError("degree part should vanish at exponent 0")
            key_nm = (n - 1, m) if axis == 1 else (n, m - 1)
            for s, v in enumerate(vec):
                add((key_nm[0], key_nm[1], s), cf * v)
        # reflection part
        if p.c0 != 0:
            unit = [Fraction(1) if s == t else Fraction(0) for s in range(label.dim)]
            for l in range(r):
                quot = divided_diff({(n, m): CycloNum.one(r)}, l, axis, r)
                if not quot:
                    continue
                refl = (GroupElement(l % r, (-l) % r, True) if axis == 1
                        else GroupElement((-l) % r, l % r, True))
                gv = w_act_on_rep(label, refl, unit, r)
                for (qn, qm), qc in quot.items():
                    for s, v in enumerate(gv):
                        if v.is_zero():
                            continue
                        add((qn, qm, s), (-p.c0 * cf) * (qc * v))

    out = {}
    for key, val in acc.items():
        q = to_rational(val)  # raises NotRationalError on a failed collapse
        if q != 0:
            out[key] = q
    return ModElem(label, p, out)


def _cyclo_terms(e: ModElem) -> dict:
    return {k: CycloNum.from_rational(e.params.r, c) for k, c in e.terms.items()}


def _apply_group_algebra(e: ModElem, elems: list[tuple[GroupElement, CycloNum]]) -> dict:
    """Apply sum_k coeff_k * g_k to e, over Q(zeta).  Returns cyclo terms."""
    out: dict = {}
    base = _cyclo_terms(e)
    for g, coeff in elems:
        if coeff.is_zero():
            continue
        for key, val in w_act_cyclo(e.label, e.params, g, base).items():
            add = coeff * val
            out[key] = out[key] + add if key in out else add
    return {k: v for k, v in out.items() if not v.is_zero()}


def _idempotent(p: Params, i: int, j: int) -> list[tuple[GroupElement, CycloNum]]:
    """e_ij = (1/r) sum_l zeta^(-lj) zeta_i^l as a formal group-algebra element."""
    one_over_r = Fraction(1, p.r)
    out = []
    for l in range(p.r):
        g = GroupElement(l, 0, False) if i == 1 else GroupElement(0, l, False)
        out.append((g, CycloNum.zeta_pow(p.r, -l * j) * one_over_r))
    return out


def commutator_element(p: Params, i: int, jx: int,
                       kappa: Fraction = Fraction(1)) -> list[tuple[GroupElement, CycloNum]]:
    """The group-algebra value of y_i x_jx - x_jx y_i.

    For i != jx it is c0 sum_l zeta^(-l) w_l with w_l the conjugated
    reflection zeta_i^l s zeta_i^(-l); for i = jx it is
    kappa - sum_j (d_j - d_{j-1}) e_ij - c0 sum_l w_l, the d-sum running over
    all residues j mod r.
    """
    r = p.r

    def refl(l: int) -> GroupElement:
        # zeta_i^l s zeta_i^(-l): [[0, z^l], [z^-l, 0]] for i=1, mirrored for i=2
        return (GroupElement(l % r, (-l) % r, True) if i == 1
                else GroupElement((-l) % r, l % r, True))

    if i != jx:
        return [(refl(l), CycloNum.zeta_pow(r, -l) * p.c0) for l in range(r)]
    out: list[tuple[GroupElement, CycloNum]] = [
        (GroupElement.identity(), CycloNum.from_rational(r, kappa))]
    for j in range(r):
        coeff = p.d(j) - p.d(j - 1)
        if coeff == 0:
            continue
        for g, c in _idempotent(p, i, j):
            out.append((g, -coeff * c))
    for l in range(r):
        out.append((refl(l), CycloNum.from_rational(r, -p.c0)))
    return out


@dataclass
class RelationSample:
    monomial: tuple[int, int, int]
    axis: int
    x_index: int
    ok: bool
    detail: str = ""


def relation_check(p: Params, label: Label,
                   samples: list[tuple[tuple[int, int, int], int, int]],
                   use_oracle: bool = True) -> list[RelationSample]:
    """Verify y_i(x_j e) - x_j(y_i e) == (commutator element) . e per sample.

    Each sample is ((n, m, t), axis i, x index j).  The left side is evaluated
    through the Dunkl engine (brute-force one by default), the right side by
    applying the formal group-algebra commutator over Q(zeta).
    """
    act = y_act_oracle if use_oracle else y_act
    results = []
    for (key, axis, xj) in samples:
        n, m, t = key
        e = ModElem(label, p, {key: Fraction(1)})
        shift = (1, 0) if xj == 1 else (0, 1)
        lhs = act(e.x_mul(shift), axis) - act(e, axis).x_mul(shift)
        rhs_cyclo = _apply_group_algebra(e, commutator_element(p, axis, xj))
        rhs = {}
        for k, v in rhs_cyclo.items():
            q = to_rational(v)
            if q != 0:
                rhs[k] = q
        ok = lhs.terms == rhs
        detail = "" if ok else f"lhs={lhs.terms} rhs={rhs}"
        results.append(RelationSample(key, axis, xj, ok, detail))
    return results
