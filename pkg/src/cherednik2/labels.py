"""Combinatorics of G(r,1,2): group elements, the three label families, tableaux.

G(r,1,2) is the group of 2x2 monomial matrices whose nonzero entries are r-th
roots of unity (order 2r^2).  Its irreducibles are indexed by r-partitions of
2, which come in three families:

* ``row:i``  -- the two-box row in component i (1-dimensional),
* ``col:i``  -- the two-box column in component i (1-dimensional),
* ``pair:i,j`` -- single boxes in components i != j (2-dimensional),
  stored with i < j; its two standard tableaux are T1 (entry 1 in
  component i) and T2 (the swap).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cherednik2.cyclo import CycloNum


class ParamsError(ValueError):
    def __init__(self, kind: str, message: str) -> None:
        super().__init__(message)
        self.kind = kind


@dataclass(frozen=True)
class Params:
    """Algebra parameters (r, c0, d_0..d_{r-1}) with sum(d) = 0, all exact.

    The d-index extends to all integers with period r: ``d(k)`` uses the
    non-negative residue of k.
    """

    r: int
    c0: Fraction
    d_vec: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ParamsError("BadArity", "r must be a positive integer")
        if len(self.d_vec) != self.r:
            raise ParamsError("BadArity", f"expected {self.r} d-values, got {len(self.d_vec)}")
        if sum(self.d_vec, Fraction(0)) != 0:
            raise ParamsError("SumNonZero", "the d parameters must sum to zero")

    @staticmethod
    def make(r: int, c0, d) -> "Params":
        return Params(r, Fraction(c0), tuple(Fraction(x) for x in d))

    def d(self, k: int) -> Fraction:
        return self.d_vec[k % self.r]

    @property
    def c0r(self) -> Fraction:
        return self.c0 * self.r


@dataclass(frozen=True, order=True)
class Label:
    """One of row:i, col:i, pair:i,j (pair canonicalized so i < j)."""

    kind: str  # "row" | "col" | "pair"
    i: int
    j: int = -1  # only meaningful for pairs

    def __post_init__(self) -> None:
        if self.kind not in ("row", "col", "pair"):
            raise ValueError(f"bad label kind {self.kind!r}")
        if self.kind == "pair":
            if self.i == self.j:
                raise ValueError("pair label needs two distinct component indices")
            if self.i > self.j:
                object.__setattr__(self, "i", self.j)
                object.__setattr__(self, "j", self.i)

    @staticmethod
    def row(i: int) -> "Label":
        return Label("row", i)

    @staticmethod
    def col(i: int) -> "Label":
        return Label("col", i)

    @staticmethod
    def pair(i: int, j: int) -> "Label":
        return Label("pair", min(i, j), max(i, j))

    @property
    def dim(self) -> int:
        return 2 if self.kind == "pair" else 1

    def slots(self) -> tuple[int, ...]:
        return (0, 1) if self.kind == "pair" else (0,)

    def slot_component(self, t: int, which: int) -> int:
        """Component index attached to coordinate ``which`` (1 or 2) of slot t.

        For a pair, slot T1 has entry 1 in component i and entry 2 in
        component j; slot T2 is the swap.  For row/col both coordinates sit
        in component i.  This is exactly the eigenvalue data of the diagonal
        subgroup on the basis vector v_T.
        """
        if self.kind != "pair":
            return self.i
        if t == 0:
            return self.i if which == 1 else self.j
        return self.j if which == 1 else self.i

    def tableaux(self) -> list[list["Box"]]:
        """Standard Young tableaux as box lists: entry k sits at index k-1."""
        if self.kind == "row":
            return [[Box(self.i, 0, 0), Box(self.i, 0, 1)]]
        if self.kind == "col":
            return [[Box(self.i, 0, 0), Box(self.i, 1, 0)]]
        return [
            [Box(self.i, 0, 0), Box(self.j, 0, 0)],
            [Box(self.j, 0, 0), Box(self.i, 0, 0)],
        ]

    def serialize(self) -> str:
        if self.kind == "pair":
            return f"pair:{self.i},{self.j}"
        return f"{self.kind}:{self.i}"

    @staticmethod
    def parse(s: str) -> "Label":
        kind, _, rest = s.partition(":")
        if kind == "pair":
            a, _, b = rest.partition(",")
            return Label.pair(int(a), int(b))
        if kind in ("row", "col"):
            return Label(kind, int(rest))
        raise ValueError(f"bad label string {s!r}")

    def __str__(self) -> str:
        return self.serialize()


@dataclass(frozen=True)
class Box:
    component: int
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


def charged_content(box: Box, p: Params) -> Fraction:
    """ct(b) * r * c0 + d_{beta(b)} where beta(b) is the component holding b."""
    return box.content * p.c0r + p.d(box.component)


def enumerate_labels(r: int) -> list[Label]:
    """All 2r + r(r-1)/2 labels, rows then columns then pairs, in index order."""
    out = [Label.row(i) for i in range(r)]
    out += [Label.col(i) for i in range(r)]
    out += [Label.pair(i, j) for i in range(r) for j in range(i + 1, r)]
    return out


@dataclass(frozen=True)
class GroupElement:
    """diag(zeta^a, zeta^b) followed by the coordinate swap when ``swap``.

    As a matrix this is [[z^a, 0], [0, z^b]] * P^swap, i.e. the swap case is
    the anti-diagonal matrix with z^a top-right and z^b bottom-left.
    """

    a: int
    b: int
    swap: bool = False

    def compose(self, other: "GroupElement", r: int) -> "GroupElement":
        """self * other as matrices (apply ``other`` first)."""
        if self.swap:
            return GroupElement((self.a + other.b) % r, (self.b + other.a) % r,
                                self.swap != other.swap)
        return GroupElement((self.a + other.a) % r, (self.b + other.b) % r,
                            self.swap != other.swap)

    def inverse(self, r: int) -> "GroupElement":
        if self.swap:
            return GroupElement((-self.b) % r, (-self.a) % r, True)
        return GroupElement((-self.a) % r, (-self.b) % r, False)

    @staticmethod
    def identity() -> "GroupElement":
        return GroupElement(0, 0, False)

    @staticmethod
    def transposition() -> "GroupElement":
        return GroupElement(0, 0, True)

    @staticmethod
    def zeta1(l: int = 1) -> "GroupElement":
        return GroupElement(l, 0, False)

    @staticmethod
    def zeta2(l: int = 1) -> "GroupElement":
        return GroupElement(0, l, False)


def all_group_elements(r: int) -> list[GroupElement]:
    return [GroupElement(a, b, s)
            for s in (False, True) for a in range(r) for b in range(r)]


def rep_matrix(label: Label, g: GroupElement, r: int) -> list[list[CycloNum]]:
    """Matrix of g on S^label, columns = images of the basis vectors.

    The generators act by: zeta_1 v_T = zeta^i v_T and zeta_2 v_T = zeta^i v_T
    on both one-dimensional families; the swap fixes v_T on a row label and
    negates it on a column label.  On a pair label zeta_1 v_T1 = zeta^i v_T1,
    zeta_2 v_T1 = zeta^j v_T1 (indices swapped on v_T2) and the transposition
    exchanges v_T1 and v_T2.
    """
    zero = CycloNum.zero(r)
    if label.kind != "pair":
        val = CycloNum.zeta_pow(r, label.i * (g.a + g.b))
        if label.kind == "col" and g.swap:
            val = -val
        return [[val]]
    i, j = label.i, label.j
    d1 = CycloNum.zeta_pow(r, i * g.a + j * g.b)  # diag eigenvalue on v_T1
    d2 = CycloNum.zeta_pow(r, j * g.a + i * g.b)  # diag eigenvalue on v_T2
    if not g.swap:
        return [[d1, zero], [zero, d2]]
    # g = diag * P: P sends v_T1 -> v_T2, then the diagonal scales.
    return [[zero, d1], [d2, zero]]


def w_act_on_rep(label: Label, g: GroupElement, v: list, r: int) -> list[CycloNum]:
    """Apply g to a coefficient vector over S^label (entries Fraction or CycloNum)."""
    vec = [x if isinstance(x, CycloNum) else CycloNum.from_rational(r, x) for x in v]
    if len(vec) != label.dim:
        raise ValueError("vector dimension does not match the label")
    mat = rep_matrix(label, g, r)
    return [sum((mat[t][s] * vec[s] for s in range(label.dim)), CycloNum.zero(r))
            for t in range(label.dim)]


def character(label: Label, g: GroupElement, r: int) -> CycloNum:
    """Trace of g on S^label (0 on swap elements for pair labels)."""
    mat = rep_matrix(label, g, r)
    acc = CycloNum.zero(r)
    for t in range(label.dim):
        acc = acc + mat[t][t]
    return acc
