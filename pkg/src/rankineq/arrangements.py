"""Subspace arrangements over GF(p) or the rationals, with exact rank data.

An arrangement is n subspaces of a d-dimensional ambient space, each held
as a basis matrix in reduced row echelon form (so equal subspaces compare
equal).  Its rank function A |-> dim(sum of V_i, i in A) is always a
polymatroid; the empty sum is the zero space.
"""

from __future__ import annotations

import json
import random
from typing import Iterable, Sequence

from .linalg import (RATIONAL, Echelon, ExactMatrix, Scalar, check_field,
                     intersect_row_spaces, is_prime)
from .setfunctions import SetFunction, format_value, parse_value
from .subsets import SubsetRef
from .maps import UnionMap


def _is_prime_arg(p: object) -> bool:
    return isinstance(p, int) and not isinstance(p, bool) and is_prime(p)


class Arrangement:
    """n subspaces of GF(p)^d or QQ^d, each given by a full-row-rank basis."""

    __slots__ = ("field", "ambient_dim", "subspaces")

    def __init__(self, field: int, ambient_dim: int,
                 subspaces: Sequence[ExactMatrix | Iterable[Sequence[Scalar]]]):
        check_field(field)
        if not isinstance(ambient_dim, int) or ambient_dim < 0:
            raise ValueError(f"bad ambient dimension {ambient_dim!r}")
        fixed = []
        for sub in subspaces:
            if not isinstance(sub, ExactMatrix):
                sub = ExactMatrix(field, sub, ambient_dim)
            if sub.field != field or sub.ncols != ambient_dim:
                raise ValueError("subspace basis does not match field/ambient dimension")
            fixed.append(sub.rref())  # enforce full row rank + canonical form
        self.field = field
        self.ambient_dim = ambient_dim
        self.subspaces = tuple(fixed)

    @property
    def n(self) -> int:
        return len(self.subspaces)

    def subspace(self, i: int) -> ExactMatrix:
        if not 1 <= i <= self.n:
            raise ValueError(f"subspace index out of range: {i}")
        return self.subspaces[i - 1]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Arrangement) and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.subspaces == other.subspaces)

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.subspaces))

    def __repr__(self) -> str:
        name = "QQ" if self.field == RATIONAL else f"GF({self.field})"
        return f"Arrangement({self.n} subspaces in {name}^{self.ambient_dim})"

    # -- file format ---------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"field": self.field, "ambient_dim": self.ambient_dim,
                "subspaces": [[[format_value(x) for x in row] for row in sub.rows]
                              for sub in self.subspaces]}

    @classmethod
    def from_json_obj(cls, obj: object) -> "Arrangement":
        keys = {"field", "ambient_dim", "subspaces"}
        if not isinstance(obj, dict) or set(obj) != keys:
            raise ValueError('arrangement file must have exactly the keys '
                             '"field", "ambient_dim" and "subspaces"')
        field, dim, subs = obj["field"], obj["ambient_dim"], obj["subspaces"]
        if not isinstance(field, int) or isinstance(field, bool):
            raise ValueError(f'"field" must be an integer, got {field!r}')
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise ValueError(f'"ambient_dim" must be a nonnegative integer, got {dim!r}')
        if not isinstance(subs, list):
            raise ValueError('"subspaces" must be a list')
        parsed = []
        for sub in subs:
            if not isinstance(sub, list) or not all(isinstance(r, list) for r in sub):
                raise ValueError("each subspace must be a list of rows")
            rows = [[parse_value(x) for x in row] for row in sub]
            if any(len(row) != dim for row in rows):
                raise ValueError(f"rows must have {dim} entries")
            parsed.append(rows)
        return cls(field, dim, parsed)

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def loads(cls, text: str) -> "Arrangement":
        return cls.from_json_obj(json.loads(text))


def rank_function(V: Arrangement) -> SetFunction:
    """The arrangement's polymatroid: A |-> dim(sum of V_i over i in A).

    Sweeps the subset lattice incrementally: the echelon basis of each
    subset is its parent's (minus the lowest index) extended by one
    subspace, so every basis row is inserted exactly once per subset.
    """
    n, d = V.n, V.ambient_dim
    states: list[Echelon] = [None] * (1 << n)  # type: ignore[list-item]
    states[0] = Echelon(V.field, d)
    vals: list[Scalar] = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        ech = states[mask ^ low].copy()
        ech.extend(V.subspaces[low.bit_length() - 1].rows)
        states[mask] = ech
        vals[mask] = ech.rank
    return SetFunction(n, vals)


def intersect(V: Arrangement, indices: SubsetRef) -> ExactMatrix:
    """Basis of the intersection of the listed subspaces (iterated kernels)."""
    if indices.n != V.n:
        raise ValueError(f"index set over ground set {indices.n}, arrangement has {V.n}")
    chosen = indices.elements()
    if not chosen:
        raise ValueError("empty index set")
    acc = V.subspace(chosen[0])
    for i in chosen[1:]:
        acc = intersect_row_spaces(acc, V.subspace(i))
    return acc


def sum_pullback(phi: UnionMap, V: Arrangement) -> Arrangement:
    """Arrangement realizing the pullback: slot i spans the V_j, j in phi(i)."""
    if phi.n != V.n:
        raise ValueError(f"map target is {phi.n}, arrangement has {V.n} subspaces")
    subs = []
    for i in range(1, phi.k + 1):
        rows: list[Sequence[Scalar]] = []
        for j in phi.image_of(i).elements():
            rows.extend(V.subspace(j).rows)
        subs.append(ExactMatrix(V.field, rows, V.ambient_dim))
    return Arrangement(V.field, V.ambient_dim, subs)


def uniform_U(n: int, S: SubsetRef, d: int) -> SetFunction:
    """The generic-lines polymatroid: A |-> min(d, size of A meet S)."""
    if S.n != n:
        raise ValueError(f"subset over ground set {S.n}, expected {n}")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")
    smask = S.bits
    return SetFunction(n, [min(d, (mask & smask).bit_count())
                           for mask in range(1 << n)])


def generic_lines(n: int, S: SubsetRef, d: int, p: int) -> Arrangement:
    """Lines in general position in GF(p)^d at the positions listed in S.

    Line i sits on the moment curve t |-> (1, t, ..., t^(d-1)) at parameter
    t_i, with distinct parameters across S; remaining slots get the zero
    subspace.  General position is not assumed: the construction validates
    its own rank function against the min(d, size of A meet S) formula and
    refuses primes too small to support it.
    """
    if S.n != n:
        raise ValueError(f"subset over ground set {S.n}, expected {n}")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")
    if not _is_prime_arg(p):
        raise ValueError(f"p must be prime, got {p!r}")
    members = S.elements()
    if len(members) > p:
        raise ValueError("p too small for general position")
    params = {e: t for t, e in enumerate(members)}
    subs = []
    for i in range(1, n + 1):
        if i in params:
            t = params[i]
            subs.append([[pow(t, j, p) for j in range(d)]])
        else:
            subs.append([])
    arr = Arrangement(p, d, subs)
    if rank_function(arr) != uniform_U(n, S, d):
        raise ValueError("p too small for general position")
    return arr


def derive_seed(master: int, index: int) -> int:
    """Stable per-trial seed so sweeps are independent of scheduling."""
    return (master * 0x9E3779B97F4A7C15 + index + 1) & (2 ** 64 - 1)


def random_arrangement(n: int, d: int, p: int, seed: int) -> Arrangement:
    """Seed-deterministic random arrangement in GF(p)^d.

    Each subspace is spanned by k_i uniformly random vectors with k_i
    itself uniform in 0..d, so zero and full-dimensional subspaces both
    occur.
    """
    if not _is_prime_arg(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ValueError(f"bad dimension {d!r}")
    SubsetRef(n, 0)
    rng = random.Random(seed)
    subs = []
    for _ in range(n):
        k = rng.randint(0, d)
        subs.append([[rng.randrange(p) for _ in range(d)] for _ in range(k)])
    return Arrangement(p, d, subs)
