"""Exact linear algebra over GF(p) and the rationals.

Matrices are immutable tuples of row tuples.  Over GF(p) entries are ints
reduced to 0..p-1; over the rationals entries are ints or Fractions in
lowest terms (ints preferred when integral).  Everything here is exact:
there is no floating point anywhere.

Rank sweeps over the rationals are fraction-free: rows are scaled to
primitive integer vectors and reduction uses cross-multiplication followed
by content stripping, so no Fractions appear while accumulating large
families of vectors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

RATIONAL = 0

Scalar = Union[int, Fraction]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def check_field(field: int) -> int:
    """Validate a field code: 0 means the rationals, otherwise a prime."""
    if not isinstance(field, int) or isinstance(field, bool):
        raise ValueError(f"field must be 0 (rationals) or a prime, got {field!r}")
    if field != RATIONAL and not is_prime(field):
        raise ValueError(f"field must be 0 (rationals) or a prime, got {field}")
    return field


def normalize_scalar(value: Scalar, field: int) -> Scalar:
    """Reduce mod p over GF(p); over the rationals keep ints as ints."""
    if field != RATIONAL:
        if isinstance(value, Fraction):
            if value.denominator % field == 0:
                raise ValueError(f"denominator not invertible mod {field}")
            return value.numerator * pow(value.denominator, -1, field) % field
        return value % field
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    return value


def _invert(value: Scalar, field: int) -> Scalar:
    if field != RATIONAL:
        return pow(value, -1, field)
    return Fraction(1) / value


def _primitive_int_row(vec: Sequence[Scalar]) -> list[int]:
    # Scale a rational row to a primitive integer row (same span).
    lcm = 1
    for x in vec:
        if isinstance(x, Fraction):
            d = x.denominator
            lcm = lcm // gcd(lcm, d) * d
    row = [int(x * lcm) if isinstance(x, Fraction) else x * lcm for x in vec]
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
    if g > 1:
        row = [x // g for x in row]
    return row


class Echelon:
    """Incremental row-space accumulator: feed rows, read off the rank.

    Over GF(p) pivot rows are kept with unit pivots.  Over the rationals
    pivot rows are primitive integer vectors and incoming rows are reduced
    by cross-multiplication, keeping all intermediate values in ZZ.
    """

    __slots__ = ("field", "ncols", "pivots", "rows")

    def __init__(self, field: int, ncols: int):
        self.field = check_field(field)
        self.ncols = ncols
        self.pivots: list[int] = []
        self.rows: list[list[Scalar]] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "Echelon":
        dup = Echelon.__new__(Echelon)
        dup.field = self.field
        dup.ncols = self.ncols
        dup.pivots = list(self.pivots)
        dup.rows = list(self.rows)  # rows themselves are never mutated
        return dup

    def reduce(self, vec: Sequence[Scalar]) -> list[Scalar]:
        """Residue of vec after elimination against the stored pivot rows."""
        if len(vec) != self.ncols:
            raise ValueError(f"expected {self.ncols} columns, got {len(vec)}")
        p = self.field
        if p != RATIONAL:
            v = [x % p for x in vec]
            for pc, row in zip(self.pivots, self.rows):
                a = v[pc]
                if a:
                    v = [(x - a * y) % p for x, y in zip(v, row)]
            return v
        v = _primitive_int_row(vec)
        for pc, row in zip(self.pivots, self.rows):
            a = v[pc]
            if a:
                piv = row[pc]
                g = gcd(piv, a)
                piv, a = piv // g, a // g
                v = [piv * x - a * y for x, y in zip(v, row)]
        g = 0
        for x in v:
            if x:
                g = gcd(g, x)
        if g > 1:
            v = [x // g for x in v]
        return v

    def add(self, vec: Sequence[Scalar]) -> bool:
        """Insert vec's residue as a new pivot row; False if dependent."""
        v = self.reduce(vec)
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is None:
            return False
        if self.field != RATIONAL:
            inv = pow(v[pc], -1, self.field)
            v = [x * inv % self.field for x in v]
        elif v[pc] < 0:
            v = [-x for x in v]
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pc:
            at += 1
        self.pivots.insert(at, pc)
        self.rows.insert(at, v)
        return True

    def extend(self, vecs: Iterable[Sequence[Scalar]]) -> int:
        added = 0
        for vec in vecs:
            added += self.add(vec)
        return added

    def contains(self, vec: Sequence[Scalar]) -> bool:
        return not any(self.reduce(vec))


class ExactMatrix:
    """Immutable matrix over GF(p) or the rationals; rows span a subspace."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: int, rows: Iterable[Sequence[Scalar]], ncols: int | None = None):
        self.field = check_field(field)
        normalized = []
        width = ncols
        for row in rows:
            entries = tuple(normalize_scalar(x, self.field) for x in row)
            if width is None:
                width = len(entries)
            elif len(entries) != width:
                raise ValueError(f"ragged rows: expected {width} columns, got {len(entries)}")
            normalized.append(entries)
        if width is None:
            raise ValueError("column count required for a matrix with no rows")
        self.rows = tuple(normalized)
        self.nrows = len(self.rows)
        self.ncols = width

    @classmethod
    def identity(cls, field: int, k: int) -> "ExactMatrix":
        return cls(field, [[1 if i == j else 0 for j in range(k)] for i in range(k)], k)

    @classmethod
    def zero_rows(cls, field: int, ncols: int) -> "ExactMatrix":
        return cls(field, [], ncols)

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field or self.ncols != other.ncols:
            raise ValueError("stack: field or column mismatch")
        return ExactMatrix(self.field, self.rows + other.rows, self.ncols)

    def rank(self) -> int:
        ech = Echelon(self.field, self.ncols)
        ech.extend(self.rows)
        return ech.rank

    def rref(self) -> "ExactMatrix":
        """Reduced row echelon form, unit pivots, zero rows dropped.

        The result is the canonical basis of the row space: two matrices
        have equal row spans iff their rrefs are equal.
        """
        p = self.field
        work = [list(r) for r in self.rows]
        pivots: list[tuple[int, int]] = []  # (pivot col, row index)
        r = 0
        for c in range(self.ncols):
            sel = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
            if sel is None:
                continue
            work[r], work[sel] = work[sel], work[r]
            inv = _invert(work[r][c], p)
            if p != RATIONAL:
                work[r] = [x * inv % p for x in work[r]]
            else:
                work[r] = [normalize_scalar(x * inv, p) for x in work[r]]
            for i in range(len(work)):
                if i != r and work[i][c] != 0:
                    a = work[i][c]
                    if p != RATIONAL:
                        work[i] = [(x - a * y) % p for x, y in zip(work[i], work[r])]
                    else:
                        work[i] = [normalize_scalar(x - a * y, p)
                                   for x, y in zip(work[i], work[r])]
            pivots.append((c, r))
            r += 1
            if r == len(work):
                break
        return ExactMatrix(p, [work[i] for _, i in pivots], self.ncols)

    def left_kernel(self) -> "ExactMatrix":
        """Basis (in rref) of the row vectors x with x @ self == 0."""
        p = self.field
        m, c = self.nrows, self.ncols
        # Augment with the identity and eliminate on the left block only.
        work = [list(self.rows[i]) + [1 if j == i else 0 for j in range(m)]
                for i in range(m)]
        r = 0
        for col in range(c):
            sel = next((i for i in range(r, m) if work[i][col] != 0), None)
            if sel is None:
                continue
            work[r], work[sel] = work[sel], work[r]
            inv = _invert(work[r][col], p)
            if p != RATIONAL:
                work[r] = [x * inv % p for x in work[r]]
            else:
                work[r] = [normalize_scalar(x * inv, p) for x in work[r]]
            for i in range(m):
                if i != r and work[i][col] != 0:
                    a = work[i][col]
                    if p != RATIONAL:
                        work[i] = [(x - a * y) % p for x, y in zip(work[i], work[r])]
                    else:
                        work[i] = [normalize_scalar(x - a * y, p)
                                   for x, y in zip(work[i], work[r])]
            r += 1
            if r == m:
                break
        kernel = [row[c:] for row in work[r:]]
        return ExactMatrix(p, kernel, m).rref()

    def row_space_contains(self, vec: Sequence[Scalar]) -> bool:
        ech = Echelon(self.field, self.ncols)
        ech.extend(self.rows)
        return ech.contains([normalize_scalar(x, self.field) for x in vec])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self) -> str:
        name = "QQ" if self.field == RATIONAL else f"GF({self.field})"
        return f"ExactMatrix({name}, {self.nrows}x{self.ncols})"


def rank_of(M: ExactMatrix) -> int:
    """Row rank via exact elimination (fraction-free over the rationals)."""
    return M.rank()


def row_times_matrix(x: Sequence[Scalar], M: ExactMatrix) -> list[Scalar]:
    if len(x) != M.nrows:
        raise ValueError("length mismatch")
    out = [0] * M.ncols
    for coef, row in zip(x, M.rows):
        if coef:
            out = [acc + coef * y for acc, y in zip(out, row)]
    return [normalize_scalar(v, M.field) for v in out]


def intersect_row_spaces(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Basis (in rref) of the intersection of two row spaces.

    Works via the left kernel of the stacked matrix: a kernel row (x | y)
    means x @ A = -y @ B, so x @ A runs over the intersection.  Both inputs
    must have full row rank (true for rref bases), which makes the kernel
    rows map bijectively onto the intersection.
    """
    if A.field != B.field or A.ncols != B.ncols:
        raise ValueError("intersect: field or column mismatch")
    if A.nrows == 0 or B.nrows == 0:
        return ExactMatrix.zero_rows(A.field, A.ncols)
    kernel = A.stack(B).left_kernel()
    vecs = [row_times_matrix(row[:A.nrows], A) for row in kernel.rows]
    return ExactMatrix(A.field, vecs, A.ncols).rref()
