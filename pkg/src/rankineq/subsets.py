"""Subset algebra on the Boolean lattice of {1, ..., n}.

Subsets are encoded as n-bit masks (element i <-> bit i-1).  All lattice
iteration is in ascending mask order, so file formats and reports built on
top of it are deterministic.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_GROUND_SET = 20


class SubsetRef:
    """Canonical subset of {1, ..., n}.

    Immutable value type: two refs are equal iff they have the same ground
    set and the same members.  The empty subset is representable.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if not isinstance(n, int) or not 1 <= n <= MAX_GROUND_SET:
            raise ValueError(f"ground-set size must be in 1..{MAX_GROUND_SET}, got {n!r}")
        if bits < 0 or bits >> n:
            raise ValueError("element out of range")
        self.n = n
        self.bits = bits

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> "SubsetRef":
        bits = 0
        for e in elements:
            if not isinstance(e, int) or not 1 <= e <= n:
                raise ValueError(f"element out of range: {e!r} not in 1..{n}")
            bits |= 1 << (e - 1)
        return cls(n, bits)

    def elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.bits >> (i - 1) & 1)

    def is_empty(self) -> bool:
        return self.bits == 0

    def _same_ground(self, other: "SubsetRef") -> None:
        if not isinstance(other, SubsetRef):
            raise TypeError(f"expected SubsetRef, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"ground-set mismatch: {self.n} vs {other.n}")

    def union(self, other: "SubsetRef") -> "SubsetRef":
        self._same_ground(other)
        return SubsetRef(self.n, self.bits | other.bits)

    def intersection(self, other: "SubsetRef") -> "SubsetRef":
        self._same_ground(other)
        return SubsetRef(self.n, self.bits & other.bits)

    def difference(self, other: "SubsetRef") -> "SubsetRef":
        self._same_ground(other)
        return SubsetRef(self.n, self.bits & ~other.bits)

    def complement(self) -> "SubsetRef":
        return SubsetRef(self.n, ~self.bits & ((1 << self.n) - 1))

    def issubset(self, other: "SubsetRef") -> bool:
        self._same_ground(other)
        return self.bits & ~other.bits == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.bits >> (element - 1) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SubsetRef) and self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return "{" + ",".join(str(i) for i in self.elements()) + "}"


def subset(n: int, elements: Iterable[int]) -> SubsetRef:
    """Build the subset of {1,...,n} with the given elements (duplicates ok)."""
    return SubsetRef.from_elements(n, elements)


def mobius(S: SubsetRef, A: SubsetRef) -> int:
    """Mobius function of the Boolean lattice: (-1)^|A \\ S| for S <= A."""
    S._same_ground(A)
    if S.bits & ~A.bits:
        raise ValueError(f"{S!r} is not a subset of {A!r}")
    return -1 if (A.bits & ~S.bits).bit_count() & 1 else 1


def all_subsets(n: int) -> Iterator[SubsetRef]:
    """All subsets of {1,...,n} including the empty one, ascending mask order."""
    for bits in range(1 << n):
        yield SubsetRef(n, bits)


def nonempty_subsets(n: int) -> Iterator[SubsetRef]:
    for bits in range(1, 1 << n):
        yield SubsetRef(n, bits)


def format_subset(S: SubsetRef) -> str:
    """Text form used in all file formats: "1,3,4" (strictly increasing)."""
    return ",".join(str(i) for i in S.elements())


def parse_subset(n: int, text: str) -> SubsetRef:
    """Parse the text form; rejects non-canonical (unordered/duplicate) keys."""
    parts = text.split(",")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed subset key {text!r}") from None
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"subset key not strictly increasing: {text!r}")
    return SubsetRef.from_elements(n, values)
