"""The field tower F_q <= E_i <= F = F_{q^e} attached to x^m - lambda.

``F`` is stored as an extension of the prime field, ``GF(p, k*e)`` with
``q = p^k``.  For prime q this is literally ``F_q[w]/(modulus)`` with the
lexicographically smallest irreducible modulus of degree e.  Base-field
elements live in their own small field ``GF(p, k)`` and are pushed into F
through a fixed embedding table.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field as dc_field

from .gf import GF, field, prime_power

__all__ = [
    "FieldTower",
    "RootSystem",
    "build_tower",
    "frobenius",
    "trace_to_subfield",
    "in_subfield",
    "root_system",
]


@dataclass(frozen=True)
class RootSystem:
    """The roots ``omega[k] = alpha * xi^k`` of x^m - lambda and their classes."""

    omega: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]
    degrees: tuple[int, ...]
    class_of: tuple[int, ...]
    step: tuple[int, ...]  # k -> index of omega[k]^q

    @property
    def num_classes(self) -> int:
        return len(self.classes)


@dataclass(frozen=True, eq=False)
class FieldTower:
    q: int
    m: int
    lam: int
    r: int
    e: int
    p: int
    base: GF
    F: GF
    emb: tuple[int, ...]
    alpha: int
    xi: int
    _unemb: dict = dc_field(repr=False, default_factory=dict)

    @property
    def lambda_order(self) -> int:
        return self.r

    @property
    def modulus(self) -> tuple[int, ...]:
        """Defining polynomial of F over its prime field, low degree first."""
        return self.F.modulus

    @functools.cached_property
    def roots(self) -> RootSystem:
        return root_system(self)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.q, self.m, self.lam)

    def embed(self, c: int) -> int:
        """Image of a base-field element in F."""
        return self.emb[c]

    def unembed(self, x: int) -> int:
        """Inverse of :meth:`embed`; KeyError if x is not in F_q."""
        return self._unemb[x]

    def is_base(self, x: int) -> bool:
        return x in self._unemb

    def __repr__(self) -> str:
        return f"FieldTower(q={self.q}, m={self.m}, lambda={self.lam}, r={self.r}, e={self.e})"


def _mult_order(a: int, n: int) -> int:
    """Multiplicative order of a modulo n (n >= 1)."""
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


@functools.lru_cache(maxsize=None)
def build_tower(q: int, m: int, lam: int) -> FieldTower:
    """Build the splitting field of x^m - lam over F_q and fix alpha, xi.

    ``lam`` is a base-field element in the integer encoding of :mod:`gf`.
    """
    p, k = prime_power(q)
    if m < 1:
        raise ValueError("m must be positive")
    if math.gcd(m, q) != 1:
        raise ValueError(f"gcd(m, q) = gcd({m}, {q}) must be 1")
    if not 0 < lam < q:
        raise ValueError(f"lambda must be a nonzero element of F_{q}")
    base = field(p, k)
    r = base.order_of(lam)
    e = _mult_order(q, r * m)
    F = field(p, k * e)

    # embed F_q into F: prime field maps to itself; otherwise send the
    # base generator w to the smallest root of its minimal polynomial
    if k == 1:
        emb = tuple(range(p))
    else:
        mod = base.modulus
        root = next(
            x
            for x in range(1, F.order)
            if _horner(F, [c % p for c in mod], x) == 0
        )
        pw = [1]
        for _ in range(k - 1):
            pw.append(F.mul(pw[-1], root))
        emb_l = []
        for c in range(q):
            acc = 0
            for i, dig in enumerate(base.digits[c].tolist()):
                if dig:
                    acc = F.add(acc, F.mul(dig, pw[i]))
            emb_l.append(acc)
        emb = tuple(emb_l)
    unemb = {x: c for c, x in enumerate(emb)}

    lam_F = emb[lam]
    N = F.order - 1
    rm = r * m
    g = F.generator
    alpha = None
    for j in range(1, rm + 1):
        if math.gcd(j, rm) != 1:
            continue
        cand = F.pow(g, (N // rm) * j)
        if F.pow(cand, m) == lam_F:
            alpha = cand
            break
    if alpha is None:  # pragma: no cover - existence is guaranteed
        raise AssertionError("no root of x^m - lambda of order rm")
    xi = F.pow(alpha, r)
    return FieldTower(q, m, lam, r, e, p, base, F, emb, alpha, xi, unemb)


def _horner(F: GF, coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def frobenius(t: FieldTower, x: int, j: int = 1) -> int:
    """x^(q^j) in F."""
    if x == 0:
        return 0
    return t.F.pow(x, pow(t.q, j, t.F.order - 1))


def _check_subdegree(t: FieldTower, d: int) -> None:
    if d < 1 or t.e % d:
        raise ValueError(f"subfield degree {d} does not divide {t.e}")


def trace_to_subfield(t: FieldTower, x: int, d: int) -> int:
    """Trace of x from F down to the subfield of degree d over F_q."""
    _check_subdegree(t, d)
    F = t.F
    acc, y = 0, x
    for _ in range(t.e // d):
        acc = F.add(acc, y)
        y = frobenius(t, y, d)
    return acc


def in_subfield(t: FieldTower, x: int, d: int) -> bool:
    """True iff x lies in the degree-d subfield, i.e. x^(q^d) = x."""
    _check_subdegree(t, d)
    return frobenius(t, x, d) == x


def root_system(t: FieldTower) -> RootSystem:
    F, m = t.F, t.m
    omega = [t.alpha]
    for _ in range(m - 1):
        omega.append(F.mul(omega[-1], t.xi))
    shift = (t.q - 1) // t.r
    step = tuple((shift + t.q * k) % m for k in range(m))
    seen = [-1] * m
    classes: list[tuple[int, ...]] = []
    for k in range(m):
        if seen[k] >= 0:
            continue
        orbit, j = [], k
        while seen[j] < 0:
            seen[j] = len(classes)
            orbit.append(j)
            j = step[j]
        classes.append(tuple(sorted(orbit)))
    return RootSystem(
        omega=tuple(omega),
        classes=tuple(classes),
        reps=tuple(c[0] for c in classes),
        degrees=tuple(len(c) for c in classes),
        class_of=tuple(seen),
        step=step,
    )
