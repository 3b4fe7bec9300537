"""Exact arithmetic in Z[ξ], ξ = exp(2πi/p).

Elements are stored on the basis ``1, ξ, ..., ξ^(p-2)`` after reducing with
``1 + ξ + ... + ξ^(p-1) = 0``.  For ``p = 2`` this is plain integer
arithmetic with ``ξ = -1``.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np


def reduce_group_ring(counts: np.ndarray) -> np.ndarray:
    """Map group-ring coordinates (last axis length ``p``) to the reduced basis."""
    counts = np.asarray(counts)
    return counts[..., :-1] - counts[..., -1:]


class CycInt:
    __slots__ = ("p", "c")

    def __init__(self, p: int, coeffs: Sequence[int]):
        c = tuple(int(x) for x in coeffs)
        if len(c) == p:
            c = tuple(x - c[-1] for x in c[:-1])
        if len(c) != p - 1:
            raise ValueError(f"need {p - 1} coefficients for Z[xi_{p}], got {len(c)}")
        self.p = p
        self.c = c

    @classmethod
    def integer(cls, p: int, n: int) -> "CycInt":
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def xi_power(cls, p: int, e: int) -> "CycInt":
        g = [0] * p
        g[e % p] = 1
        return cls(p, g)

    def _group(self) -> list[int]:
        return list(self.c) + [0]

    def __add__(self, other: "CycInt | int") -> "CycInt":
        o = self._coerce(other)
        return CycInt(self.p, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, [-a for a in self.c])

    def __sub__(self, other: "CycInt | int") -> "CycInt":
        return self + (-self._coerce(other))

    def __mul__(self, other: "CycInt | int") -> "CycInt":
        o = self._coerce(other)
        p = self.p
        g = [0] * p
        for i, a in enumerate(self._group()):
            if a:
                for j, b in enumerate(o._group()):
                    g[(i + j) % p] += a * b
        return CycInt(p, g)

    __rmul__ = __mul__

    def _coerce(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise ValueError("mixing different cyclotomic rings")
            return other
        return CycInt.integer(self.p, int(other))

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def __int__(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.c[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)):
            return self.is_rational() and self.c[0] == other
        return isinstance(other, CycInt) and self.p == other.p and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.p, self.c))

    def __repr__(self) -> str:
        return f"CycInt({self.p}, {list(self.c)})"

    def to_complex(self) -> complex:
        xi = np.exp(2j * np.pi / self.p)
        return complex(sum(a * xi**i for i, a in enumerate(self.c)))
