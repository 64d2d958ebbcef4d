"""Univariate polynomials over a :class:`~qtbounds.gf.GF` and x^m - lambda."""

from __future__ import annotations

from typing import Iterable, Sequence

from .gf import GF
from .tower import FieldTower

__all__ = [
    "Poly",
    "poly_gcd",
    "xm_minus_lambda",
    "factor_xm_minus_lambda",
    "eval_at",
    "eval_tuple",
]


class Poly:
    """Polynomial with coefficients in ``field``, lowest degree first.

    The zero polynomial has no coefficients and ``degree == -1``, which
    plays the role of the usual -infinity sentinel in comparisons.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        for x in c:
            if not 0 <= x < field.order:
                raise ValueError(f"coefficient {x} outside {field!r}")
        self.field = field
        self.coeffs = tuple(c)

    # --- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field: GF) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: GF) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: GF, k: int, c: int = 1) -> "Poly":
        return cls(field, [0] * k + [c])

    @classmethod
    def from_roots(cls, field: GF, roots: Iterable[int]) -> "Poly":
        out = cls.one(field)
        for b in roots:
            out = out * cls(field, (field.neg(b), 1))
        return out

    # --- basic properties ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    # --- arithmetic ------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        K = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = K.add(out[i], y)
        return Poly(K, out)

    def __neg__(self) -> "Poly":
        K = self.field
        return Poly(K, [K.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        K = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(K)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = K.add(out[i + j], K.mul(x, y))
        return Poly(K, out)

    def scale(self, c: int) -> "Poly":
        K = self.field
        return Poly(K, [K.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly(self.field, [0] * k + list(self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        K = self.field
        r = list(self.coeffs)
        db = other.degree
        inv = K.inv(other.lead)
        if len(r) - 1 < db:
            return Poly(K), Poly(K, r)
        quo = [0] * (len(r) - db)
        b = other.coeffs
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if not c:
                continue
            f = K.mul(c, inv)
            quo[i - db] = f
            for j, y in enumerate(b):
                if y:
                    r[i - db + j] = K.sub(r[i - db + j], K.mul(f, y))
        return Poly(K, quo), Poly(K, r[:db])

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lead))

    def __call__(self, x: int) -> int:
        K = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = K.add(K.mul(acc, x), c)
        return acc

    def map_coeffs(self, target: GF, table: Sequence[int]) -> "Poly":
        """Push coefficients through an embedding table into ``target``."""
        return Poly(target, [table[c] for c in self.coeffs])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    a._check(b)
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


def xm_minus_lambda(t: FieldTower) -> Poly:
    """x^m - lambda over the base field of the tower."""
    K = t.base
    return Poly(K, [K.neg(t.lam)] + [0] * (t.m - 1) + [1])


def factor_xm_minus_lambda(t: FieldTower) -> list[tuple[Poly, int]]:
    """Irreducible factors of x^m - lambda over F_q, one per conjugacy class.

    Each factor is the product of (x - omega_k) over its class, computed in F
    and pulled back to F_q; the list is ordered by class representative.
    """
    rs = t.roots
    out = []
    for i, cls in enumerate(rs.classes):
        f = Poly.from_roots(t.F, (rs.omega[k] for k in cls))
        try:
            coeffs = [t.unembed(c) for c in f.coeffs]
        except KeyError as exc:  # pragma: no cover - tower bug
            raise AssertionError(f"factor of class {cls} not defined over F_q") from exc
        out.append((Poly(t.base, coeffs), i))
    return out


def eval_at(t: FieldTower, f: Poly, beta: int) -> int:
    """Evaluate a base-field polynomial at an element of F."""
    F, emb = t.F, t.emb
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, beta), emb[c])
    return acc


def eval_tuple(t: FieldTower, v: Sequence[Poly], beta: int) -> list[int]:
    return [eval_at(t, f, beta) for f in v]
