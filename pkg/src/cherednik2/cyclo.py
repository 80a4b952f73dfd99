"""Exact scalar arithmetic: rationals and the cyclotomic field Q(zeta_r).

Rationals are ``fractions.Fraction`` (arbitrary precision, always reduced).
Cyclotomic numbers are represented by their coefficient vector on the basis
1, zeta, ..., zeta^(phi(r)-1), i.e. reduced modulo the r-th cyclotomic
polynomial Phi_r.  Working mod Phi_r (rather than mod z^r - 1) is what makes
vanishing root-of-unity sums vanish identically, which the brute-force Dunkl
evaluation depends on.
"""

from __future__ import annotations

from fractions import Fraction


class NotRationalError(ValueError):
    """A cyclotomic value expected to collapse to a rational did not."""


def parse_rational(s: str) -> Fraction:
    """Parse a "p/q" (or plain integer) string into an exact Fraction."""
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"bad rational literal {s!r}") from e


def format_rational(q: Fraction) -> str:
    return str(q)


def euler_phi(r: int) -> int:
    """Euler totient by trial factorization; r stays desk-scale here."""
    if r < 1:
        raise ValueError("r must be positive")
    n, phi, p = r, 1, 2
    while p * p <= n:
        if n % p == 0:
            pk = 1
            while n % p == 0:
                n //= p
                pk *= p
            phi *= pk - pk // p
        p += 1
    if n > 1:
        phi *= n - 1
    return phi


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # Exact division of integer polynomials, den monic.  Dense, low degree.
    num = list(num)
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dj in enumerate(den):
            num[i - dd + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def cyclotomic_minimal_poly(r: int) -> list[int]:
    """Integer coefficients of Phi_r, constant term first.

    Computed by dividing z^r - 1 by Phi_d for every proper divisor d of r.
    """
    if r < 1:
        raise ValueError("r must be positive")
    poly = [0] * r + [1]
    poly[0] = -1
    for d in range(1, r):
        if r % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_minimal_poly(d))
            if any(rem):
                raise AssertionError("cyclotomic division left a remainder")
    return poly


_PHI_CACHE: dict[int, tuple[list[Fraction], int]] = {}


def _phi_poly(r: int) -> tuple[list[Fraction], int]:
    if r not in _PHI_CACHE:
        coeffs = [Fraction(c) for c in cyclotomic_minimal_poly(r)]
        _PHI_CACHE[r] = (coeffs, len(coeffs) - 1)
    return _PHI_CACHE[r]


def _reduce(r: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a coefficient list (any length) mod z^r - 1 and then mod Phi_r."""
    phi, deg = _phi_poly(r)
    folded = [Fraction(0)] * r
    for e, c in enumerate(coeffs):
        folded[e % r] += c
    # long division by the monic Phi_r
    for i in range(r - 1, deg - 1, -1):
        c = folded[i]
        if c == 0:
            continue
        for j in range(deg + 1):
            folded[i - deg + j] -= c * phi[j]
    out = folded[:deg]
    out += [Fraction(0)] * (deg - len(out))
    return tuple(out)


class CycloNum:
    """An element of Q(zeta_r), reduced mod Phi_r.  Immutable."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs) -> None:
        self.r = r
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(r):
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__  # noqa: B018  (slots keep this immutable by convention)
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rational(r: int, q) -> "CycloNum":
        deg = euler_phi(r)
        return CycloNum(r, (Fraction(q),) + (Fraction(0),) * (deg - 1))

    @staticmethod
    def zero(r: int) -> "CycloNum":
        return CycloNum.from_rational(r, 0)

    @staticmethod
    def one(r: int) -> "CycloNum":
        return CycloNum.from_rational(r, 1)

    @staticmethod
    def zeta_pow(r: int, k: int) -> "CycloNum":
        coeffs = [Fraction(0)] * ((k % r) + 1)
        coeffs[k % r] = Fraction(1)
        return CycloNum(r, _reduce(r, coeffs))

    # -- ring structure -----------------------------------------------
    def _check(self, other: "CycloNum") -> None:
        if self.r != other.r:
            raise ValueError(f"cannot mix Q(zeta_{self.r}) and Q(zeta_{other.r})")

    def __add__(self, other: "CycloNum") -> "CycloNum":
        self._check(other)
        return CycloNum(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloNum") -> "CycloNum":
        self._check(other)
        return CycloNum(self.r, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.r, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloNum(self.r, tuple(a * q for a in self.coeffs))
        self._check(other)
        n = len(self.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    prod[i + j] += a * b
        return CycloNum(self.r, _reduce(self.r, prod))

    __rmul__ = __mul__

    def inv(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[z]/Phi_r."""
        if self.is_zero():
            raise ZeroDivisionError("inverting zero cyclotomic number")
        phi, _deg = _phi_poly(self.r)

        def trim(p):
            p = list(p)
            while p and p[-1] == 0:
                p.pop()
            return p

        def poly_divmod(a, b):
            a = list(a)
            q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
            inv_lead = 1 / b[-1]
            for i in range(len(a) - 1, len(b) - 2, -1):
                c = a[i] * inv_lead
                if c == 0:
                    continue
                q[i - (len(b) - 1)] = c
                for j, bj in enumerate(b):
                    a[i - (len(b) - 1) + j] -= c * bj
            return trim(q), trim(a)

        # extended gcd of the representative with Phi_r
        r0, r1 = trim(phi), trim(self.coeffs)
        t0, t1 = [], [Fraction(1)]
        while r1:
            q, rem = poly_divmod(r0, r1)
            r0, r1 = r1, rem
            # t0 - q*t1
            qt = [Fraction(0)] * (len(q) + len(t1) - 1 if q and t1 else 0)
            for i, qi in enumerate(q):
                for j, tj in enumerate(t1):
                    qt[i + j] += qi * tj
            newt = [Fraction(0)] * max(len(t0), len(qt))
            for i, c in enumerate(t0):
                newt[i] += c
            for i, c in enumerate(qt):
                newt[i] -= c
            t0, t1 = t1, trim(newt)
        if len(r0) != 1:
            raise ZeroDivisionError("element is a zero divisor (Phi_r not coprime?)")
        scale = 1 / r0[0]
        return CycloNum(self.r, _reduce(self.r, [c * scale for c in t0]))

    def conj(self) -> "CycloNum":
        """Complex conjugation, implemented as the exponent negation zeta -> zeta^(r-1)."""
        out = [Fraction(0)] * self.r
        for e, c in enumerate(self.coeffs):
            out[(-e) % self.r] += c
        return CycloNum(self.r, _reduce(self.r, out))

    # -- predicates/coercions ------------------------------------------
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.r == other.r and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.r, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c != 0:
                terms.append(f"{c}*z^{e}" if e else f"{c}")
        return "CycloNum(r=%d: %s)" % (self.r, " + ".join(terms) or "0")


def to_rational(a: CycloNum) -> Fraction:
    """The rational value of ``a``; raises NotRationalError if it has none."""
    if any(c != 0 for c in a.coeffs[1:]):
        raise NotRationalError(f"cyclotomic value did not collapse: {a!r}")
    return a.coeffs[0]


def cyclo_arith(a: CycloNum, b: CycloNum | None, op: str) -> CycloNum:
    """Field-operation dispatch: op in {"add", "mul", "inv"}."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown op {op!r}")


def power_sum(r: int, k: int) -> Fraction:
    """sum_{l=0}^{r-1} zeta^(k*l), evaluated by actual cyclotomic summation.

    Collapses to r when r | k and to 0 otherwise; the caller gets the exact
    rational either way.
    """
    acc = CycloNum.zero(r)
    for l in range(r):
        acc = acc + CycloNum.zeta_pow(r, k * l)
    return to_rational(acc)
