"""Reading QT code descriptions from JSON files.

Schema::

    {
      "q": 3, "m": 7, "lambda": 2, "ell": 2,
      "generators": [[2, 0, 1, 1, 0, 2], [0, 0, 1, 1, 0, 1]]
    }

``generators`` is a flat list of r * ell coefficient vectors, low degree
first; vectors (i-1)*ell .. i*ell-1 form generator i.  A coefficient is an
integer in [0, q): for prime q the residue, for q = p^k the element whose
base-p digits (least significant first) are its coordinates in the
polynomial basis of F_q.  A list of k digits is accepted as well.
``lambda`` defaults to 1 and ``ell`` to the number of vectors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .gf import prime_power
from .qtcode import QtCode
from .tower import build_tower

__all__ = ["SpecError", "CodeSpec", "parse_spec", "load_spec"]


class SpecError(ValueError):
    """Malformed or inconsistent code description."""


@dataclass(frozen=True)
class CodeSpec:
    q: int
    m: int
    lam: int
    ell: int
    generators: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.generators) // self.ell

    def grouped(self) -> list[list[list[int]]]:
        g = self.generators
        return [[list(g[i * self.ell + j]) for j in range(self.ell)] for i in range(self.r)]

    def build(self) -> QtCode:
        return QtCode.from_coeffs(build_tower(self.q, self.m, self.lam), self.ell, self.grouped())

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "lambda": self.lam,
            "ell": self.ell,
            "generators": [list(v) for v in self.generators],
        }


def _int(obj: dict, key: str, default=None) -> int:
    v = obj.get(key, default)
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"{key!r} must be an integer")
    return v


def _coefficient(x, q: int) -> int:
    if isinstance(x, list):
        p, k = prime_power(q)
        if len(x) > k or any(isinstance(d, bool) or not isinstance(d, int) or not 0 <= d < p for d in x):
            raise SpecError(f"bad digit vector {x} for F_{q}")
        return sum(d * p**i for i, d in enumerate(x))
    if isinstance(x, bool) or not isinstance(x, int):
        raise SpecError(f"coefficient {x!r} is not an integer")
    if not 0 <= x < q:
        raise SpecError(f"coefficient {x} outside [0, {q})")
    return x


def parse_spec(obj: dict) -> CodeSpec:
    if not isinstance(obj, dict):
        raise SpecError("top level must be an object")
    unknown = set(obj) - {"q", "m", "lambda", "ell", "generators", "name", "comment"}
    if unknown:
        raise SpecError(f"unknown keys {sorted(unknown)}")
    q, m = _int(obj, "q"), _int(obj, "m")
    try:
        prime_power(q)
    except ValueError as e:
        raise SpecError(str(e)) from None
    if m < 1:
        raise SpecError("m must be positive")
    if math.gcd(m, q) != 1:
        raise SpecError(f"gcd(m={m}, q={q}) != 1 (repeated-root case unsupported)")
    lam = _int(obj, "lambda", 1)
    if not 0 < lam < q:
        raise SpecError(f"lambda = {lam} is not a nonzero element of F_{q}")
    gens = obj.get("generators", [])
    if not isinstance(gens, list):
        raise SpecError("'generators' must be a list")
    ell = _int(obj, "ell", len(gens) or 1)
    if ell < 1:
        raise SpecError("ell must be positive")
    if len(gens) % ell:
        raise SpecError(f"{len(gens)} coefficient vectors is not a multiple of ell = {ell}")
    vecs = []
    for v in gens:
        if not isinstance(v, list):
            raise SpecError("each generator entry must be a list of coefficients")
        if len(v) > m:
            raise SpecError(f"coefficient vector of length {len(v)} > m = {m}")
        vecs.append(tuple(_coefficient(x, q) for x in v))
    return CodeSpec(q, m, lam, ell, tuple(vecs))


def load_spec(path: str | Path) -> QtCode:
    """Read a JSON code description and build the code."""
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise SpecError(f"{path}: {e}") from None
    return parse_spec(obj).build()
