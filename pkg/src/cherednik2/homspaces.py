"""Classification and construction of homomorphisms between standard modules.

A nonzero map Delta(lambda) -> Delta(mu) is the same thing as a copy of
S^lambda inside the singular vectors of Delta(mu) (restriction to the
generating representation is a bijection).  This module provides:

* the necessary condition coming from charged tableau contents,
* the sixteen directed existence rules in terms of atomic integrality
  conditions on the parameters, with explicit constructors for each,
* a brute-force check: exact kernels of the stacked Dunkl operators degree
  by degree, plus isotypic multiplicities via character projections,
* the dimension-two criterion for pair-to-pair spaces,
* the morphism diagram with DOT export and transitive reduction.

Rule orientation: the condition for Delta(lambda_a) -> Delta(lambda_b)
involves d_b - d_a (the brute-force sweep in ``sweep.py`` is the arbiter of
this orientation).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from cherednik2.cyclo import CycloNum
from cherednik2.labels import (GroupElement, Label, Params, all_group_elements,
                               character, charged_content, enumerate_labels)
from cherednik2.linalg import (cyclo_rank, in_rational_span, rational_kernel,
                               rational_rank)
from cherednik2.singular import CaseTag, construct
from cherednik2.standard_module import ModElem, w_act_cyclo, y_act


class ZeroCompositeError(ArithmeticError):
    """A composite morphism vanished; the construction arguments forbid this."""


class SlotMatchError(ArithmeticError):
    """A constructed singular vector does not transform like the domain label."""


DEFAULT_MAX_DEGREE = int(os.environ.get("CHEREDNIK2_MAX_DEGREE", "25"))


# ---------------------------------------------------------------------------
# atomic conditions and the sixteen rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AtomicCondition:
    """INT(a, b, sigma): D = d_a - d_b + sigma*c0*r is a non-negative integer
    congruent to a - b mod r.  HALF(sign): sign*2*c0 is a positive odd integer."""

    kind: str  # "int" | "half"
    a: int = 0
    b: int = 0
    sigma: int = 0
    sign: int = 0

    def holds(self, p: Params) -> bool:
        if self.kind == "half":
            two = 2 * self.sign * p.c0
            return two.denominator == 1 and two > 0 and two.numerator % 2 == 1
        d = self.value(p)
        return d is not None and d >= 0 and (d - (self.a - self.b)) % p.r == 0

    def value(self, p: Params) -> int | None:
        if self.kind == "half":
            two = 2 * self.sign * p.c0
            return int(two) if two.denominator == 1 else None
        v = p.d(self.a) - p.d(self.b) + self.sigma * p.c0r
        return int(v) if v.denominator == 1 else None

    def describe(self) -> str:
        if self.kind == "half":
            return f"2*c0 = {'+' if self.sign > 0 else '-'}k, k positive odd"
        s = {1: "+c0*r", -1: "-c0*r", 0: ""}[self.sigma]
        return f"d_{self.a}-d_{self.b}{s}"


def INT(a: int, b: int, sigma: int) -> AtomicCondition:
    return AtomicCondition("int", a=a, b=b, sigma=sigma)


def HALF(sign: int) -> AtomicCondition:
    return AtomicCondition("half", sign=sign)


@dataclass
class RuleInstance:
    rule: int
    domain: Label
    codomain: Label
    atoms: list[AtomicCondition]
    assignment: dict
    degree: int  # degree of the constructed generator image

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "from": self.domain.serialize(),
            "to": self.codomain.serialize(),
            "atoms": [a.describe() for a in self.atoms],
            "degree": self.degree,
        }


@dataclass
class ConditionReport:
    domain: Label
    codomain: Label
    fired: list[RuleInstance]
    exists: bool

    def predicted_degrees(self) -> list[int]:
        return sorted({inst.degree for inst in self.fired})

    def single_condition_instances(self) -> list[RuleInstance]:
        return [inst for inst in self.fired if inst.rule <= 9]

    def to_json(self) -> dict:
        return {
            "from": self.domain.serialize(),
            "to": self.codomain.serialize(),
            "exists": self.exists,
            "rules": [inst.to_json() for inst in self.fired],
            "degrees": self.predicted_degrees(),
        }


def _ival(p: Params, atom: AtomicCondition) -> int:
    v = atom.value(p)
    assert v is not None
    return v


def hom_conditions(lam: Label, mu: Label, p: Params) -> ConditionReport:
    """Evaluate the sixteen directed existence rules for Delta(lam) -> Delta(mu).

    Rules 1..9 carry a single atomic condition and map one-to-one onto the
    direct singular-polynomial constructors; rules 10..16 are conjunctions
    whose morphisms arise as two-step composites.  Pair labels are matched in
    both index orders.
    """
    fired: list[RuleInstance] = []

    def try_rule(rule, atoms, assignment, degree_fn):
        if all(a.holds(p) for a in atoms):
            fired.append(RuleInstance(rule, lam, mu, atoms, assignment,
                                      degree_fn()))

    lk, mk = lam.kind, mu.kind
    if lk == "row" and mk == "row":
        a, b = lam.i, mu.i
        atom = INT(b, a, 0)
        try_rule(1, [atom], {"a": a, "b": b}, lambda: 2 * _ival(p, atom))
    if lk == "row" and mk == "col" and lam.i == mu.i:
        atom = HALF(-1)
        try_rule(2, [atom], {"a": lam.i}, lambda: _ival(p, atom) * p.r)
    if lk == "row" and mk == "pair" and lam.i in (mu.i, mu.j):
        a = lam.i
        b = mu.j if a == mu.i else mu.i
        atom = INT(b, a, -1)
        try_rule(3, [atom], {"a": a, "b": b}, lambda: _ival(p, atom))
    if lk == "col" and mk == "row" and lam.i == mu.i:
        atom = HALF(+1)
        try_rule(4, [atom], {"a": lam.i}, lambda: _ival(p, atom) * p.r)
    if lk == "col" and mk == "col":
        a, b = lam.i, mu.i
        atom = INT(b, a, 0)
        try_rule(5, [atom], {"a": a, "b": b}, lambda: 2 * _ival(p, atom))
    if lk == "col" and mk == "pair" and lam.i in (mu.i, mu.j):
        a = lam.i
        b = mu.j if a == mu.i else mu.i
        atom = INT(b, a, +1)
        try_rule(6, [atom], {"a": a, "b": b}, lambda: _ival(p, atom))
    if lk == "pair" and mk == "row" and mu.i in (lam.i, lam.j):
        a = mu.i
        b = lam.j if a == lam.i else lam.i
        atom = INT(a, b, +1)
        try_rule(7, [atom], {"a": a, "b": b}, lambda: _ival(p, atom))
    if lk == "pair" and mk == "col" and mu.i in (lam.i, lam.j):
        a = mu.i
        b = lam.j if a == lam.i else lam.i
        atom = INT(a, b, -1)
        try_rule(8, [atom], {"a": a, "b": b}, lambda: _ival(p, atom))
    if lk == "pair" and mk == "pair":
        shared = sorted(set((lam.i, lam.j)) & set((mu.i, mu.j)))
        for a in shared:
            b = lam.i + lam.j - a
            c = mu.i + mu.j - a
            if b == c:
                continue
            atom = INT(c, b, 0)
            try_rule(9, [atom], {"a": a, "b": b, "c": c}, lambda at=atom: _ival(p, at))

    # two-condition (composite) rules
    if lk == "row" and mk == "col" and lam.i != mu.i:
        a, b = lam.i, mu.i
        atoms = [INT(b, a, 0), HALF(-1)]
        try_rule(10, atoms, {"a": a, "b": b},
                 lambda: 2 * _ival(p, atoms[0]) + _ival(p, atoms[1]) * p.r)
    if lk == "col" and mk == "row" and lam.i != mu.i:
        a, b = lam.i, mu.i
        atoms = [INT(b, a, 0), HALF(+1)]
        try_rule(11, atoms, {"a": a, "b": b},
                 lambda: 2 * _ival(p, atoms[0]) + _ival(p, atoms[1]) * p.r)
    if lk in ("row", "col") and mk == "pair" and lam.i not in (mu.i, mu.j):
        a = lam.i
        sigma = -1 if lk == "row" else +1
        rule = 12 if lk == "row" else 13
        for b, c in ((mu.i, mu.j), (mu.j, mu.i)):
            atoms = [INT(b, a, 0), INT(c, b, sigma)]
            try_rule(rule, atoms, {"a": a, "b": b, "c": c},
                     lambda at=atoms: 2 * _ival(p, at[0]) + _ival(p, at[1]))
    if lk == "pair" and mk in ("row", "col") and mu.i not in (lam.i, lam.j):
        c = mu.i
        sigma = +1 if mk == "row" else -1
        rule = 14 if mk == "row" else 15
        for a, b in ((lam.i, lam.j), (lam.j, lam.i)):
            atoms = [INT(c, a, 0), INT(c, b, sigma)]
            try_rule(rule, atoms, {"a": a, "b": b, "c": c},
                     lambda at=atoms: _ival(p, at[0]) + _ival(p, at[1]))
    if lk == "pair" and mk == "pair" and lam != mu:
        a, b = lam.i, lam.j
        for c, s in ((mu.i, mu.j), (mu.j, mu.i)):
            atoms = [INT(c, a, 0), INT(s, b, 0)]
            try_rule(16, atoms, {"a": a, "b": b, "c": c, "s": s},
                     lambda at=atoms: _ival(p, at[0]) + _ival(p, at[1]))

    return ConditionReport(lam, mu, fired, bool(fired))


def necessary_condition(lam: Label, mu: Label, p: Params) -> bool:
    """Charged-content test: some tableau pair (T, U) has, for both entries,
    c(U(i)) - c(T(i)) a non-negative integer congruent to the component shift."""
    for T in lam.tableaux():
        for U in mu.tableaux():
            ok = True
            for idx in range(2):
                diff = charged_content(U[idx], p) - charged_content(T[idx], p)
                beta = U[idx].component - T[idx].component
                if diff.denominator != 1 or diff < 0 or (int(diff) - beta) % p.r != 0:
                    ok = False
                    break
            if ok:
                return True
    return False


# ---------------------------------------------------------------------------
# construction of the morphisms
# ---------------------------------------------------------------------------

@dataclass
class HomMap:
    """A module map stored by generator images.

    ``gen_images[0]`` is the image of 1 (x) v_T (slot T1 for a pair domain);
    for pair domains the second generator image is the transposition image of
    the first, which ``images()`` materializes.
    """

    domain: Label
    codomain: Label
    params: Params
    gen_image: ModElem

    def images(self) -> list[ModElem]:
        if self.domain.kind != "pair":
            return [self.gen_image]
        return [self.gen_image, self.gen_image.w_act(GroupElement.transposition())]

    def apply(self, e: ModElem) -> ModElem:
        return apply_hom(self, e)

    def is_zero(self) -> bool:
        return self.gen_image.is_zero()


def apply_hom(h: HomMap, e: ModElem) -> ModElem:
    """Linear extension: x1^n x2^m (x) v_t maps to x1^n x2^m * image(v_t)."""
    if e.label != h.domain or e.params != h.params:
        raise ValueError("element is not in the domain module")
    images = h.images()
    out = ModElem.zero(h.codomain, h.params)
    for (n, m, t), c in e.terms.items():
        out = out + images[t].x_mul((n, m), c)
    return out


def _diag_weight(e: ModElem) -> tuple[int, int] | None:
    """The (zeta1, zeta2)-weight of a diagonal-equivariant element, or None.

    The weight of x1^n x2^m (x) v_t is (i_t - n, j_t - m) mod r where
    (i_t, j_t) are the component indices of slot t.
    """
    r = e.params.r
    w = None
    for (n, m, t), _c in e.terms.items():
        wt = ((e.label.slot_component(t, 1) - n) % r,
              (e.label.slot_component(t, 2) - m) % r)
        if w is None:
            w = wt
        elif w != wt:
            return None
    return w


def _match_domain_slot(img: ModElem, domain: Label) -> ModElem:
    """Return the image of the domain's first generator, pinned by equivariance.

    The constructed singular vector carries a definite diagonal weight; it is
    the image of whichever domain basis vector has the same weight, and the
    other generator image follows by the transposition.  Row/col domains also
    need the right sign under the transposition.
    """
    r = img.params.r
    w = _diag_weight(img)
    if w is None:
        raise SlotMatchError("constructed vector is not weight-homogeneous")
    if domain.kind == "pair":
        if w == (domain.i % r, domain.j % r):
            return img
        if w == (domain.j % r, domain.i % r):
            return img.w_act(GroupElement.transposition())
        raise SlotMatchError(f"weight {w} does not match domain {domain}")
    if w != (domain.i % r, domain.i % r):
        raise SlotMatchError(f"weight {w} does not match domain {domain}")
    s_img = img.w_act(GroupElement.transposition())
    want = img if domain.kind == "row" else (-1) * img
    if s_img != want:
        raise SlotMatchError("transposition sign does not match the domain kind")
    return img


def build_hom(lam: Label, mu: Label, p: Params, inst: RuleInstance) -> HomMap:
    """Construct the morphism attached to a fired rule instance.

    Single-condition rules place a singular polynomial in the codomain and
    assign it to the generator with matching equivariance; two-condition
    rules compose the two single-condition maps.
    """
    asg = inst.assignment
    rule = inst.rule
    if rule <= 9:
        if rule == 1:
            n = _ival(p, inst.atoms[0])
            img = construct(p, mu, CaseTag("row_b", n=n))
        elif rule == 2:
            k = _ival(p, inst.atoms[0])
            img = construct(p, mu, CaseTag("col_a", n=k * p.r, k=k))
        elif rule == 3:
            n = _ival(p, inst.atoms[0])
            a, b = asg["a"], asg["b"]
            fam = "pair_3b" if a < b else "pair_3a"
            k = ((n + a - b) // p.r) if a < b else ((n + a - b) // p.r - 1)
            img = construct(p, mu, CaseTag(fam, n=n, k=k))
        elif rule == 4:
            k = _ival(p, inst.atoms[0])
            img = construct(p, mu, CaseTag("row_a", n=k * p.r, k=k))
        elif rule == 5:
            n = _ival(p, inst.atoms[0])
            img = construct(p, mu, CaseTag("col_b", n=n))
        elif rule == 6:
            n = _ival(p, inst.atoms[0])
            a, b = asg["a"], asg["b"]
            fam = "pair_2b" if a < b else "pair_2a"
            k = ((n + a - b) // p.r) if a < b else ((n + a - b) // p.r - 1)
            img = construct(p, mu, CaseTag(fam, n=n, k=k))
        elif rule == 7:
            n = _ival(p, inst.atoms[0])
            img = construct(p, mu, CaseTag("row_c", n=n, k=n // p.r))
        elif rule == 8:
            n = _ival(p, inst.atoms[0])
            img = construct(p, mu, CaseTag("col_c", n=n, k=n // p.r))
        else:  # rule 9
            n = _ival(p, inst.atoms[0])
            a, c = asg["a"], asg["c"]
            if a > c:
                fam, k = "pair_1a", (n + a - c) // p.r
            else:
                fam, k = "pair_1b", (n + a - c) // p.r + 1
            img = construct(p, mu, CaseTag(fam, n=n, k=k))
        gen = _match_domain_slot(img, lam)
        return HomMap(lam, mu, p, gen)

    # composite rules: build the two legs and compose
    mid = _composite_route(lam, mu, inst)
    if mid == lam:
        return _build_single(lam, mu, p)
    if mid == mu:
        return _build_single(lam, mu, p)
    h1 = _build_single(lam, mid, p)
    h2 = _build_single(mid, mu, p)
    gen = apply_hom(h2, h1.gen_image)
    if gen.is_zero():
        raise ZeroCompositeError(f"composite through {mid} vanished")
    return HomMap(lam, mu, p, gen)


def _composite_route(lam: Label, mu: Label, inst: RuleInstance) -> Label:
    asg = inst.assignment
    if inst.rule == 10:
        return Label.col(asg["a"])
    if inst.rule == 11:
        return Label.row(asg["a"])
    if inst.rule in (12, 13):
        kind = "row" if inst.rule == 12 else "col"
        return Label(kind, asg["b"])
    if inst.rule in (14, 15):
        return Label.pair(asg["c"], asg["b"])
    if inst.rule == 16:
        # replace a -> c first when that leaves a genuine pair, else b -> s
        c, s, a, b = asg["c"], asg["s"], asg["a"], asg["b"]
        if c == a and s == b:
            return lam  # both replacements trivial (cannot happen for lam != mu)
        if c != b and c != a:
            return Label.pair(c, b)
        if s != a and s != b:
            return Label.pair(a, s)
        # one replacement is trivial: the instance degenerates to a direct map
        return lam
    raise ValueError(f"rule {inst.rule} is not composite")


def _build_single(lam: Label, mu: Label, p: Params) -> HomMap:
    report = hom_conditions(lam, mu, p)
    singles = report.single_condition_instances()
    if not singles:
        raise ZeroCompositeError(f"no single-condition rule for {lam} -> {mu}")
    return build_hom(lam, mu, p, min(singles, key=lambda i: i.degree))


def build_all_homs(lam: Label, mu: Label, p: Params) -> list[HomMap]:
    """One morphism per fired rule instance (may be linearly dependent)."""
    report = hom_conditions(lam, mu, p)
    return [build_hom(lam, mu, p, inst) for inst in report.fired]


# ---------------------------------------------------------------------------
# brute force: singular spaces, isotypic multiplicities
# ---------------------------------------------------------------------------

def _degree_basis(mu: Label, d: int) -> list[tuple[int, int, int]]:
    return [(n, d - n, t) for n in range(d, -1, -1) for t in mu.slots()]


def singular_space(mu: Label, p: Params, d: int,
                   basis_order: list[tuple[int, int, int]] | None = None
                   ) -> list[ModElem]:
    """Basis of the singular vectors in the degree-d slice of Delta(mu).

    Exact rational kernel of the stacked maps y1, y2 restricted to the
    homogeneous component (dimension (d+1) * dim S^mu).
    """
    basis = basis_order if basis_order is not None else _degree_basis(mu, d)
    if d == 0:
        return [ModElem(mu, p, {key: Fraction(1)}) for key in basis]
    target = _degree_basis(mu, d - 1)
    index = {key: i for i, key in enumerate(target)}
    rows: list[list[Fraction]] = [[Fraction(0)] * len(basis)
                                  for _ in range(2 * len(target))]
    for col, key in enumerate(basis):
        e = ModElem(mu, p, {key: Fraction(1)})
        for axis in (1, 2):
            img = y_act(e, axis)
            off = 0 if axis == 1 else len(target)
            for k2, c in img.terms.items():
                rows[off + index[k2]][col] = c
    kernel = rational_kernel(rows, len(basis))
    out = []
    for vec in kernel:
        terms = {basis[i]: c for i, c in enumerate(vec) if c != 0}
        out.append(ModElem(mu, p, terms))
    return [_normalize(e) for e in out]


def _normalize(e: ModElem) -> ModElem:
    if e.is_zero():
        return e
    lead = e.sorted_terms()[0][1]
    return (1 / lead) * e


def isotypic_multiplicity(basis: list[ModElem], lam: Label,
                          check_stable: bool = False) -> int:
    """Multiplicity of S^lam in the span of ``basis``.

    Applies the isotypic projector (dim/|W|) sum_w conj(chi(w)) w over
    Q(zeta_r) to every basis vector, and divides the rank of the projected
    family by dim S^lam.
    """
    if not basis:
        return 0
    p = basis[0].params
    r = p.r
    mu = basis[0].label
    if check_stable and not _is_w_stable(basis):
        raise ValueError("input span is not W-stable")
    order = 2 * r * r
    scale = Fraction(lam.dim, order)
    projected = []
    key_index: dict = {}
    rows: list[dict] = []
    for e in basis:
        acc: dict = {}
        base = {k: CycloNum.from_rational(r, c) for k, c in e.terms.items()}
        for g in all_group_elements(r):
            coeff = character(lam, g, r).conj() * scale
            if coeff.is_zero():
                continue
            for key, val in w_act_cyclo(mu, p, g, base).items():
                add = coeff * val
                acc[key] = acc[key] + add if key in acc else add
        acc = {k: v for k, v in acc.items() if not v.is_zero()}
        rows.append(acc)
        for k in acc:
            key_index.setdefault(k, len(key_index))
    if not key_index:
        return 0
    mat = []
    for acc in rows:
        row = [CycloNum.zero(r) for _ in range(len(key_index))]
        for k, v in acc.items():
            row[key_index[k]] = v
        mat.append(row)
    rank = cyclo_rank(mat, r)
    if rank % lam.dim != 0:
        raise ArithmeticError("projected rank not divisible by dim (bug)")
    return rank // lam.dim


def _is_w_stable(basis: list[ModElem]) -> bool:
    p = basis[0].params
    mu = basis[0].label
    r = p.r
    key_index: dict = {}
    vecs = []
    images = []
    gens = [GroupElement.zeta1(), GroupElement.zeta2(), GroupElement.transposition()]
    for e in basis:
        base = {k: CycloNum.from_rational(r, c) for k, c in e.terms.items()}
        vecs.append(base)
        for g in gens:
            images.append(w_act_cyclo(mu, p, g, base))
    for d in vecs + images:
        for k in d:
            key_index.setdefault(k, len(key_index))

    def densify(d):
        row = [CycloNum.zero(r) for _ in range(len(key_index))]
        for k, v in d.items():
            row[key_index[k]] = v
        return row

    base_rank = cyclo_rank([densify(v) for v in vecs], r)
    full_rank = cyclo_rank([densify(v) for v in vecs + images], r)
    return base_rank == full_rank


def hom_dim_bruteforce(lam: Label, mu: Label, p: Params,
                       max_degree: int = DEFAULT_MAX_DEGREE) -> int:
    """dim Hom(Delta(lam), Delta(mu)) restricted to generators of degree <= cap.

    Sums the multiplicity of S^lam inside the singular space of every degree;
    degree 0 contributes exactly the identity when lam == mu.
    """
    total = 1 if lam == mu else 0
    for d in range(1, max_degree + 1):
        basis = singular_space(mu, p, d)
        if basis:
            total += isotypic_multiplicity(basis, lam)
    return total


def dimension_two_criterion(p: Params, i: int, j: int, k: int) -> bool:
    """Four-atom sufficient condition for dim Hom(Delta(pair i,k),
    Delta(pair i,j)) = 2; requires c0 to be a nonzero integer."""
    if p.c0.denominator != 1 or p.c0 == 0:
        return False
    atoms = [INT(i, k, +1), INT(i, k, -1), INT(j, i, +1), INT(j, i, -1)]
    return all(a.holds(p) for a in atoms)


# ---------------------------------------------------------------------------
# the morphism diagram
# ---------------------------------------------------------------------------

@dataclass
class DiagramEdge:
    domain: Label
    codomain: Label
    rule: int
    degree: int
    hom: HomMap


@dataclass
class Diagram:
    params: Params
    nodes: list[Label]
    edges: list[DiagramEdge]
    removed: list[DiagramEdge] = field(default_factory=list)

    def edge_pairs(self) -> set[tuple[Label, Label]]:
        return {(e.domain, e.codomain) for e in self.edges}


def morphism_diagram(p: Params) -> Diagram:
    """Nodes are all labels; edges are the fired single-condition rules
    (the two-condition morphisms factor as paths through these edges)."""
    nodes = enumerate_labels(p.r)
    edges = []
    for lam in nodes:
        for mu in nodes:
            if lam == mu:
                continue
            report = hom_conditions(lam, mu, p)
            for inst in report.single_condition_instances():
                hom = build_hom(lam, mu, p, inst)
                edges.append(DiagramEdge(lam, mu, inst.rule, inst.degree, hom))
    edges.sort(key=lambda e: (e.domain.serialize(), e.codomain.serialize(), e.rule))
    return Diagram(p, nodes, edges)


def _path_composites(diagram: Diagram, src: Label, dst: Label,
                     skip: DiagramEdge | None) -> list[HomMap]:
    """Composites along every directed path of length >= 2 from src to dst."""
    adj: dict[Label, list[DiagramEdge]] = {}
    for e in diagram.edges:
        if skip is not None and e is skip:
            continue
        adj.setdefault(e.domain, []).append(e)
    out: list[HomMap] = []

    def walk(node: Label, hom: HomMap | None, length: int) -> None:
        if node == dst and length >= 2:
            assert hom is not None
            out.append(hom)
            return
        for e in adj.get(node, []):
            nxt = e.hom if hom is None else HomMap(
                src, e.codomain, diagram.params, apply_hom(e.hom, hom.gen_image))
            walk(e.codomain, nxt, length + 1)

    walk(src, None, 0)
    return out


def transitive_reduction(diagram: Diagram) -> Diagram:
    """Drop every edge whose map lies in the span of composites of paths of
    length >= 2 between the same nodes (composites may use any edges)."""
    kept, removed = [], []
    for e in diagram.edges:
        composites = _path_composites(diagram, e.domain, e.codomain, skip=None)
        composites = [h for h in composites if not h.is_zero()]
        if not composites:
            kept.append(e)
            continue
        key_index: dict = {}
        for h in composites + [e.hom]:
            for k in h.gen_image.terms:
                key_index.setdefault(k, len(key_index))

        def dense(h):
            vec = [Fraction(0)] * len(key_index)
            for k, c in h.gen_image.terms.items():
                vec[key_index[k]] = c
            return vec

        span = [dense(h) for h in composites]
        if in_rational_span(span, dense(e.hom)):
            removed.append(e)
        else:
            kept.append(e)
    return Diagram(diagram.params, diagram.nodes, kept, removed)


def to_dot(diagram: Diagram) -> str:
    lines = ["digraph standard_module_homs {"]
    for node in diagram.nodes:
        lines.append(f'  "{node.serialize()}";')
    for e in diagram.edges:
        lines.append(
            f'  "{e.domain.serialize()}" -> "{e.codomain.serialize()}"'
            f' [label="rule={e.rule}, deg={e.degree}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
