"""Table-driven arithmetic in GF(p^n).

Elements are plain ints: the element ``c_0 + c_1 w + ... + c_{n-1} w^{n-1}``
of ``F_p[w]/(modulus)`` is stored as ``c_0 + c_1 p + ... + c_{n-1} p^{n-1}``.
In particular the prime subfield is ``0 .. p-1`` and ``1`` is the unit.

Every field is built once per ``(p, n, modulus)`` through :func:`field` and
shared; instances are immutable after construction.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

__all__ = [
    "GF",
    "field",
    "factor_int",
    "prime_power",
    "is_irreducible",
    "smallest_irreducible",
    "conway_polynomial",
]

_ADD_TABLE_LIMIT = 2187


def factor_int(n: int) -> dict[int, int]:
    """Trial-division factorisation; fine for the small orders used here."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q = p**k``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factor_int(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, k),) = f.items()
    return p, k


# --- polynomials over F_p as coefficient lists (low degree first) ----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f: tuple[int, ...] | list[int], p: int) -> bool:
    """Rabin-style test of a monic polynomial over F_p (coefficients low first)."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    # x^(p^i) mod f for i = 1 .. n//2; gcd(x^(p^i) - x, f) must be 1
    xp = [0, 1]
    for _ in range(1, n // 2 + 1):
        acc, base, e = [1], xp, p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        xp = acc
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over F_p.

    Coefficient vectors ``(c_0, ..., c_{n-1})`` are compared low degree first.
    """
    for low in itertools.product(range(p), repeat=n):
        f = tuple(low) + (1,)
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _ppowmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    acc = [1]
    while e:
        if e & 1:
            acc = _pmulmod(acc, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return acc


def _is_primitive(f: list[int], p: int) -> bool:
    n = len(f) - 1
    N = p**n - 1
    x = _pmod([0, 1], f, p)
    if _ppowmod(x, N, f, p) != [1]:
        return False
    return all(_ppowmod(x, N // r, f, p) != [1] for r in factor_int(N))


@functools.lru_cache(maxsize=None)
def conway_polynomial(p: int, n: int) -> tuple[int, ...]:
    """Conway polynomial of degree n over F_p, low degree first.

    Candidates x^n - a_1 x^(n-1) + a_2 x^(n-2) - ... are scanned with
    (a_1, ..., a_n) in lexicographic order; the first primitive one that is
    compatible with every proper-divisor degree d (C_d(x^((p^n-1)/(p^d-1)))
    vanishes modulo it) is returned.
    """
    divisors = [d for d in range(1, n) if n % d == 0]
    for alphas in itertools.product(range(p), repeat=n):
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        for i, a in enumerate(alphas, start=1):
            coeffs[n - i] = (a if i % 2 == 0 else -a) % p
        if coeffs[0] == 0:
            continue
        if not is_irreducible(coeffs, p) or not _is_primitive(coeffs, p):
            continue
        ok = True
        for d in divisors:
            cd = conway_polynomial(p, d)
            y = _ppowmod(_pmod([0, 1], coeffs, p), (p**n - 1) // (p**d - 1), coeffs, p)
            acc: list[int] = []
            for c in reversed(cd):
                acc = _pmulmod(acc, y, coeffs, p) or [0]
                acc = _pmod([acc[0] + c] + acc[1:], coeffs, p)
            if acc:
                ok = False
                break
        if ok:
            return tuple(coeffs)
    raise AssertionError("no Conway polynomial found")  # pragma: no cover


class GF:
    """The finite field ``F_p[w]/(modulus)`` with log/antilog tables."""

    def __init__(self, p: int, n: int, modulus: tuple[int, ...] | None = None):
        if modulus is None:
            modulus = smallest_irreducible(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus = modulus
        Q = self.order
        N = Q - 1

        weights = p ** np.arange(n, dtype=np.int64)
        digits = (np.arange(Q, dtype=np.int64)[:, None] // weights[None, :]) % p
        self._weights = weights
        self.digits = digits

        # find the smallest primitive element by slow multiplication
        mod = list(modulus)

        def to_poly(a: int) -> list[int]:
            return _trim([int(x) for x in digits[a]])

        def from_poly(a: list[int]) -> int:
            return sum(int(c) * int(weights[i]) for i, c in enumerate(a))

        def slow_mul(a: int, b: int) -> int:
            return from_poly(_pmulmod(to_poly(a), to_poly(b), mod, p))

        prime_divs = list(factor_int(N)) if N > 1 else []
        gen = 1
        if N > 1:
            for cand in range(2, Q):
                ok = True
                for r in prime_divs:
                    acc, base, e = 1, cand, N // r
                    while e:
                        if e & 1:
                            acc = slow_mul(acc, base)
                        base = slow_mul(base, base)
                        e >>= 1
                    if acc == 1:
                        ok = False
                        break
                if ok:
                    gen = cand
                    break
        self.generator = gen

        exp = np.zeros(2 * N + 1, dtype=np.int64)
        log = np.zeros(Q, dtype=np.int64)
        x = 1
        for i in range(N):
            exp[i] = x
            log[x] = i
            x = slow_mul(x, gen)
        exp[N : 2 * N] = exp[:N]
        exp[2 * N] = exp[0]
        self.exp = exp
        self.log = log
        self._exp_l = exp.tolist()
        self._log_l = log.tolist()

        neg = ((-digits) % p) @ weights
        self.neg_table = neg
        self._neg_l = neg.tolist()
        inv = np.zeros(Q, dtype=np.int64)
        inv[1:] = exp[(N - log[1:]) % N]
        self.inv_table = inv
        self._inv_l = inv.tolist()

        self.kind = ("binary" if p == 2 else "prime") if n == 1 else "ext"
        self._xor = p == 2
        self._add_t = None
        if self.kind == "ext" and not self._xor and Q <= _ADD_TABLE_LIMIT:
            a = np.arange(Q)
            self._add_t = (((digits[a][:, None, :] + digits[a][None, :, :]) % p) @ weights).astype(np.int64)
            self._add_l = self._add_t.ravel().tolist()

    # --- identity / pickling ---------------------------------------------

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.n})"

    def __reduce__(self):
        return (field, (self.p, self.n, self.modulus))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.n == other.n
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    def elements(self) -> range:
        return range(self.order)

    # --- scalar arithmetic -----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._xor:
            return a ^ b
        if self.kind == "prime":
            return (a + b) % self.p
        if self._add_t is not None:
            return self._add_l[a * self.order + b]
        return int(((self.digits[a] + self.digits[b]) % self.p) @ self._weights)

    def neg(self, a: int) -> int:
        return self._neg_l[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_l[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_l[self._log_l[a] + self._log_l[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._inv_l[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if k == 0 else 0
        N = self.order - 1
        return self._exp_l[(self._log_l[a] * k) % N]

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        N = self.order - 1
        e = self._log_l[a]
        from math import gcd

        return N // gcd(N, e)

    def from_int(self, c: int) -> int:
        """Image of the integer c under Z -> F_p -> this field."""
        return c % self.p

    # --- vectorised arithmetic on int64 arrays --------------------------

    def vadd(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if self._xor:
            return np.bitwise_xor(A, B)
        if self.kind == "prime":
            return (A + B) % self.p
        if self._add_t is not None:
            return self._add_t[A, B]
        return ((self.digits[A] + self.digits[B]) % self.p) @ self._weights

    def vneg(self, A: np.ndarray) -> np.ndarray:
        if self._xor:
            return A
        if self.kind == "prime":
            return (-A) % self.p
        return self.neg_table[A]

    def vsub(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return self.vadd(A, self.vneg(B))

    def vmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if self.kind == "binary":
            return np.bitwise_and(A, B)
        if self.kind == "prime":
            return (A * B) % self.p
        A, B = np.broadcast_arrays(A, B)
        out = self.exp[self.log[A] + self.log[B]]
        return np.where((A == 0) | (B == 0), 0, out)

    def vinv(self, A: np.ndarray) -> np.ndarray:
        return self.inv_table[A]

    def vpow(self, A: np.ndarray, k: int) -> np.ndarray:
        N = self.order - 1
        out = self.exp[(self.log[A] * k) % N]
        if k == 0:
            return np.ones_like(A)
        return np.where(A == 0, 0, out)


@functools.lru_cache(maxsize=None)
def field(p: int, n: int = 1, modulus: tuple[int, ...] | None = None) -> GF:
    """Shared field instance; ``modulus`` defaults to the smallest irreducible."""
    if modulus is None:
        modulus = smallest_irreducible(p, n)
        return _field_cached(p, n, modulus)
    return _field_cached(p, n, tuple(modulus))


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, n: int, modulus: tuple[int, ...]) -> GF:
    return GF(p, n, modulus)
