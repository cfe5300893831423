"""Set functions on the Boolean lattice: points of the hyperplane H_n.

A SetFunction assigns an exact rational to every nonempty subset of
{1,...,n}; the value on the empty set is identically 0.  Integer-valued
set functions that are monotone and submodular are polymatroids; the same
type doubles as a plain vector of H_n for the certificate linear algebra,
where values need not be integral.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .linalg import RATIONAL, Scalar, normalize_scalar
from .subsets import SubsetRef, format_subset, parse_subset

SubsetKey = Union[SubsetRef, Iterable[int]]


def _as_mask(n: int, key: SubsetKey) -> int:
    if isinstance(key, SubsetRef):
        if key.n != n:
            raise ValueError(f"ground-set mismatch: {key.n} vs {n}")
        return key.bits
    return SubsetRef.from_elements(n, key).bits


def parse_value(raw: object) -> Scalar:
    """Exact value from a JSON scalar: int, or a rational string like "-7/2"."""
    if isinstance(raw, bool):
        raise ValueError(f"not an exact rational: {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            return normalize_scalar(Fraction(raw), RATIONAL)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not an exact rational: {raw!r}") from None
    raise ValueError(f"not an exact rational: {raw!r}")


def format_value(value: Scalar) -> object:
    return value if isinstance(value, int) else str(value)


class SetFunction:
    """Total map from subsets of {1,...,n} to exact rationals, 0 on empty."""

    __slots__ = ("n", "_vals")

    def __init__(self, n: int, values_by_mask: Iterable[Scalar]):
        SubsetRef(n, 0)  # validates n
        vals = tuple(normalize_scalar(v, RATIONAL) for v in values_by_mask)
        if len(vals) != 1 << n:
            raise ValueError(f"need {1 << n} values (mask-indexed), got {len(vals)}")
        if vals[0] != 0:
            raise ValueError("value on the empty set must be 0")
        self.n = n
        self._vals = vals

    @classmethod
    def from_values(cls, n: int, values: Mapping[SubsetKey, Scalar]) -> "SetFunction":
        """Build from a {subset: value} table covering every nonempty subset."""
        table: list[Scalar | None] = [None] * (1 << n)
        table[0] = 0
        for key, val in values.items():
            mask = _as_mask(n, key)
            if mask == 0:
                raise ValueError("the empty subset may not be assigned a value")
            if table[mask] is not None:
                raise ValueError(f"duplicate subset key {SubsetRef(n, mask)!r}")
            table[mask] = val
        missing = next((m for m, v in enumerate(table) if v is None), None)
        if missing is not None:
            raise ValueError(f"missing subset key {SubsetRef(n, missing)!r}")
        return cls(n, table)  # type: ignore[arg-type]

    @classmethod
    def zero(cls, n: int) -> "SetFunction":
        return cls(n, [0] * (1 << n))

    @classmethod
    def indicator(cls, n: int, A: SubsetKey) -> "SetFunction":
        """The basis vector e_A: 1 on A, 0 elsewhere."""
        mask = _as_mask(n, A)
        if mask == 0:
            raise ValueError("indicator of the empty set is not a vector of H_n")
        vals = [0] * (1 << n)
        vals[mask] = 1
        return cls(n, vals)

    def value(self, A: SubsetKey) -> Scalar:
        return self._vals[_as_mask(self.n, A)]

    def value_at(self, mask: int) -> Scalar:
        return self._vals[mask]

    def values_by_mask(self) -> tuple[Scalar, ...]:
        return self._vals

    def _check_compatible(self, other: "SetFunction") -> None:
        if not isinstance(other, SetFunction):
            raise TypeError(f"expected SetFunction, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"ground-set mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "SetFunction") -> "SetFunction":
        self._check_compatible(other)
        return SetFunction(self.n, [a + b for a, b in zip(self._vals, other._vals)])

    def __sub__(self, other: "SetFunction") -> "SetFunction":
        self._check_compatible(other)
        return SetFunction(self.n, [a - b for a, b in zip(self._vals, other._vals)])

    def __mul__(self, scalar: Scalar) -> "SetFunction":
        return SetFunction(self.n, [scalar * v for v in self._vals])

    __rmul__ = __mul__

    def __neg__(self) -> "SetFunction":
        return SetFunction(self.n, [-v for v in self._vals])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SetFunction) and self.n == other.n
                and self._vals == other._vals)

    def __hash__(self) -> int:
        return hash((self.n, self._vals))

    def __repr__(self) -> str:
        return f"SetFunction(n={self.n})"

    # -- file format ---------------------------------------------------

    def to_json_obj(self) -> dict:
        values = {format_subset(SubsetRef(self.n, m)): format_value(self._vals[m])
                  for m in range(1, 1 << self.n)}
        return {"n": self.n, "values": values}

    @classmethod
    def from_json_obj(cls, obj: object) -> "SetFunction":
        if not isinstance(obj, dict) or set(obj) != {"n", "values"}:
            raise ValueError('set function file must have exactly the keys "n" and "values"')
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f'"n" must be an integer, got {n!r}')
        raw = obj["values"]
        if not isinstance(raw, dict):
            raise ValueError('"values" must be an object')
        table: list[Scalar | None] = [None] * (1 << n)
        table[0] = 0
        for key, val in raw.items():
            mask = parse_subset(n, key).bits
            if table[mask] is not None:
                raise ValueError(f"duplicate subset key {key!r}")
            table[mask] = parse_value(val)
        missing = next((m for m, v in enumerate(table) if v is None), None)
        if missing is not None:
            raise ValueError(
                f"missing subset key {format_subset(SubsetRef(n, missing))!r}")
        return cls(n, table)  # type: ignore[arg-type]

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def loads(cls, text: str) -> "SetFunction":
        return cls.from_json_obj(json.loads(text))


def is_integral(P: SetFunction) -> bool:
    return all(isinstance(v, int) for v in P.values_by_mask())


def in_polymatroid_cone(P: SetFunction, mode: str = "local") -> bool:
    """Whether P satisfies the basic inequalities (nonneg + monotone + submodular).

    Rational values are allowed: this is membership in the closed cone cut
    out by the basic inequalities, of which polymatroids are the integer
    points.  mode "full" checks submodularity on all pairs (A, B); "local"
    checks the equivalent exchange form on covers, which is quadratically
    cheaper and is the default for randomized sweeps.
    """
    n, vals = P.n, P.values_by_mask()
    full_mask = (1 << n) - 1
    # monotone + nonnegative via covers (value on empty set is 0)
    for a in range(full_mask + 1):
        va = vals[a]
        for i in range(n):
            bit = 1 << i
            if not a & bit and vals[a | bit] < va:
                return False
    if mode == "local":
        for a in range(full_mask + 1):
            free = full_mask & ~a
            i = free
            while i:
                bi = i & -i
                j = i ^ bi
                while j:
                    bj = j & -j
                    if vals[a | bi] + vals[a | bj] < vals[a | bi | bj] + vals[a]:
                        return False
                    j ^= bj
                i ^= bi
        return True
    if mode == "full":
        for a in range(full_mask + 1):
            va = vals[a]
            for b in range(a, full_mask + 1):
                if vals[a | b] + vals[a & b] > va + vals[b]:
                    return False
        return True
    raise ValueError(f'mode must be "full" or "local", got {mode!r}')


def is_polymatroid(P: SetFunction, mode: str = "local") -> bool:
    """Integer-valued and satisfies the basic inequalities.

    Non-integral set functions report False here even when they satisfy the
    inequalities; use in_polymatroid_cone for the cone-membership question.
    """
    return is_integral(P) and in_polymatroid_cone(P, mode)


def is_matroid(P: SetFunction) -> bool:
    """A polymatroid whose every singleton rank is at most 1."""
    if not is_polymatroid(P, "full"):
        return False
    return all(P.value_at(1 << i) <= 1 for i in range(P.n))


def is_connected(P: SetFunction) -> bool:
    """No proper nonempty S splits off: rk([n]) - rk([n]\\S) = rk(S) never holds.

    Requires a polymatroid (checked with the full predicate).
    """
    if not is_polymatroid(P, "full"):
        raise ValueError("is_connected requires a polymatroid")
    n, vals = P.n, P.values_by_mask()
    full_mask = (1 << n) - 1
    total = vals[full_mask]
    for s in range(1, full_mask):
        if total - vals[full_mask & ~s] == vals[s]:
            return False
    return True
