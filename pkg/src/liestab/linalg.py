"""Exact rational linear algebra: matrices, echelon forms, kernels, subspaces.

Everything is computed over the rationals with unbounded integers (stdlib
``fractions.Fraction``); there is no floating point anywhere.  Row reduction
runs fraction-free on primitive integer rows (cross-multiplication with gcd
stripping), which keeps intermediate entries small without losing exactness.
Results are returned in reduced row-echelon form, so two subspaces are equal
iff their representations compare equal.

All values are immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Rational = Fraction

Vector = tuple[Fraction, ...]

__all__ = [
    "Rational",
    "Vector",
    "Matrix",
    "Subspace",
    "rref",
    "rank",
    "kernel",
    "kernel_sparse",
    "associative_closure",
]


def _as_fraction_vector(values: Iterable) -> Vector:
    return tuple(Fraction(x) for x in values)


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(_as_fraction_vector(row) for row in rows)
        if rs:
            width = len(rs[0])
            if any(len(r) != width for r in rs):
                raise ValueError("rows have inconsistent lengths")
        self.rows = rs

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        zero = Fraction(0)
        return cls([[zero] * ncols for _ in range(nrows)])

    @classmethod
    def single_entry(cls, n: int, row: int, col: int, value=1) -> "Matrix":
        rows = [[Fraction(0)] * n for _ in range(n)]
        rows[row][col] = Fraction(value)
        return cls(rows)

    @classmethod
    def from_flat(cls, flat: Sequence, n: int) -> "Matrix":
        if len(flat) != n * n:
            raise ValueError(f"expected {n * n} entries, got {len(flat)}")
        return cls([flat[i * n : (i + 1) * n] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.rows[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self) -> "Matrix":
        return Matrix([-a for a in row] for row in self.rows)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        cols = list(zip(*other.rows)) if other.rows else []
        return Matrix(
            [sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows
        )

    def scale(self, q) -> "Matrix":
        q = Fraction(q)
        return Matrix([q * a for a in row] for row in self.rows)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def apply(self, vec: Sequence) -> Vector:
        v = _as_fraction_vector(vec)
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} != {self.ncols} columns")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.rows)

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    def flatten(self) -> Vector:
        return tuple(x for row in self.rows for x in row)

    def nonzero_entries(self):
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v

    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)

    def _check_shape(self, other: "Matrix") -> None:
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("matrix shapes differ")

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({[list(map(str, row)) for row in self.rows]})"


# ---------------------------------------------------------------------------
# fraction-free elimination on primitive integer rows


def _primitive_ints(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row to a primitive integer row (gcd of entries 1)."""
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    ints = [int(x.numerator * (den // x.denominator)) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _strip_gcd(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        return [v // g for v in row]
    return row


def _forward_eliminate(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form; returns the nonzero rows and pivot columns."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    work = [r[:] for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = None
        for r in range(top, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        pv = work[top][col]
        for r in range(top, len(work)):
            if r == top or not work[r][col]:
                continue
            rv = work[r][col]
            work[r] = _strip_gcd([pv * a - rv * b for a, b in zip(work[r], work[top])])
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rref(vectors: Iterable[Sequence], ncols: int | None = None):
    """Reduced row-echelon form of the given rational row vectors.

    Returns ``(rows, pivots)`` where rows are Fraction tuples with leading
    coefficient 1 and cleared pivot columns; this representation is the unique
    canonical form of the row space.
    """
    int_rows = []
    for v in vectors:
        r = _primitive_ints(_as_fraction_vector(v))
        if ncols is None:
            ncols = len(r)
        elif len(r) != ncols:
            raise ValueError("inconsistent row lengths")
        if any(r):
            int_rows.append(r)
    if not int_rows:
        return [], []
    ech, pivots = _forward_eliminate(int_rows)
    # clear entries above each pivot, bottom-up
    for i in range(len(ech) - 1, -1, -1):
        for j in range(i + 1, len(ech)):
            pc = pivots[j]
            if ech[i][pc]:
                pv = ech[j][pc]
                rv = ech[i][pc]
                ech[i] = _strip_gcd([pv * a - rv * b for a, b in zip(ech[i], ech[j])])
    out = []
    for row, pc in zip(ech, pivots):
        lead = Fraction(row[pc])
        out.append(tuple(Fraction(v) / lead for v in row))
    return out, pivots


def rank(m: Matrix) -> int:
    """Exact rank over the rationals."""
    int_rows = [r for r in (_primitive_ints(row) for row in m.rows) if any(r)]
    return len(_forward_eliminate(int_rows)[1])


def _kernel_from_rref(rows, pivots, ncols: int) -> list[Vector]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -rows[r][f]
        basis.append(tuple(vec))
    return basis


def kernel(m: Matrix) -> "Subspace":
    """Exact nullspace {x : m x = 0}; dim(kernel) + rank(m) = ncols(m)."""
    ncols = m.ncols
    rows, pivots = rref(m.rows, ncols) if m.rows else ([], [])
    return Subspace.from_vectors(_kernel_from_rref(rows, pivots, ncols), ncols)


def _sparse_primitive(row: Mapping[int, Fraction]) -> dict[int, int]:
    den = 1
    vals = {k: Fraction(v) for k, v in row.items() if v}
    for x in vals.values():
        den = lcm(den, x.denominator)
    ints = {k: int(x.numerator * (den // x.denominator)) for k, x in vals.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {k: v // g for k, v in ints.items()}
    return ints


def kernel_sparse(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> list[Vector]:
    """Kernel of a sparse constraint system, as canonical RREF row vectors.

    Each row maps column index -> coefficient; the result spans
    {x in Q^ncols : row . x = 0 for every row}.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        r = _sparse_primitive(raw)
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            pv = p[c]
            rv = r[c]
            new = {k: pv * v for k, v in r.items()}
            for k, v in p.items():
                nv = new.get(k, 0) - rv * v
                if nv:
                    new[k] = nv
                elif k in new:
                    del new[k]
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            r = new
    piv_cols = sorted(pivots)
    piv_set = set(piv_cols)
    out = []
    for f in range(ncols):
        if f in piv_set:
            continue
        x: dict[int, Fraction] = {f: Fraction(1)}
        for p in reversed(piv_cols):
            prow = pivots[p]
            s = Fraction(0)
            for c, v in prow.items():
                if c != p and c in x:
                    s += v * x[c]
            if s:
                x[p] = -s / Fraction(prow[p])
        out.append(tuple(x.get(c, Fraction(0)) for c in range(ncols)))
    canonical, _ = rref(out, ncols)
    return canonical


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^n, stored as its unique reduced-echelon basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence], ambient_dim: int | None = None) -> "Subspace":
        vecs = [_as_fraction_vector(v) for v in vectors]
        if ambient_dim is None:
            if not vecs:
                raise ValueError("ambient dimension required for an empty spanning set")
            ambient_dim = len(vecs[0])
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError("vector length does not match ambient dimension")
        rows, _ = rref(vecs, ambient_dim)
        return cls(ambient_dim, tuple(rows))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(Matrix.identity(ambient_dim).rows))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(row) if x) for row in self.basis]

    def contains(self, vec: Sequence) -> bool:
        v = list(_as_fraction_vector(vec))
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        for row, p in zip(self.basis, self._pivots()):
            c = v[p]
            if c:
                for i, x in enumerate(row):
                    if x:
                        v[i] -= c * x
        return not any(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains(row) for row in other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection of subspaces; canonical result."""
        self._check_ambient(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        ka = len(self.basis)
        rows = []
        for r in range(self.ambient_dim):
            row: dict[int, Fraction] = {}
            for i, v in enumerate(self.basis):
                if v[r]:
                    row[i] = v[r]
            for j, w in enumerate(other.basis):
                if w[r]:
                    row[ka + j] = -w[r]
            if row:
                rows.append(row)
        vectors = []
        for coeffs in kernel_sparse(rows, ka + len(other.basis)):
            vec = [Fraction(0)] * self.ambient_dim
            for i in range(ka):
                if coeffs[i]:
                    for r, x in enumerate(self.basis[i]):
                        if x:
                            vec[r] += coeffs[i] * x
            vectors.append(vec)
        return Subspace.from_vectors(vectors, self.ambient_dim)

    def __add__(self, other: "Subspace") -> "Subspace":
        """Sum (join) of subspaces."""
        self._check_ambient(other)
        return Subspace.from_vectors(list(self.basis) + list(other.basis), self.ambient_dim)

    def matrices(self) -> tuple[Matrix, ...]:
        """Reshape basis vectors of an n^2-dimensional ambient into n x n matrices."""
        n = int(self.ambient_dim ** 0.5)
        while n * n < self.ambient_dim:
            n += 1
        if n * n != self.ambient_dim:
            raise ValueError("ambient dimension is not a perfect square")
        return tuple(Matrix.from_flat(row, n) for row in self.basis)

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient dimensions differ: {self.ambient_dim} != {other.ambient_dim}"
            )

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


# ---------------------------------------------------------------------------
# associative closure


class _IntEchelon:
    """Incremental integer echelon basis keyed by pivot column."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, list[int]] = {}

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def add(self, row: list[int]) -> list[int] | None:
        """Reduce row against the basis; insert and return the residual if new."""
        row = _strip_gcd(row[:]) if any(row) else row
        while True:
            lead = -1
            for i, v in enumerate(row):
                if v:
                    lead = i
                    break
            if lead < 0:
                return None
            p = self.pivots.get(lead)
            if p is None:
                if row[lead] < 0:
                    row = [-v for v in row]
                self.pivots[lead] = row
                return row
            pv = p[lead]
            rv = row[lead]
            row = _strip_gcd([pv * a - rv * b for a, b in zip(row, p)])

    def vectors(self):
        return [self.pivots[c] for c in sorted(self.pivots)]


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def associative_closure(gens: Sequence[Matrix]) -> Subspace:
    """Smallest subspace of n x n matrices containing gens and closed under products.

    Worklist closure: every accepted element is multiplied by each generator on
    both sides; products are echelon-reduced, and only genuinely new directions
    are queued.  Terminates at dimension at most n^2.
    """
    if not gens:
        raise ValueError("at least one generator is required")
    n = gens[0].nrows
    for m in gens:
        if not m.is_square or m.nrows != n:
            raise ValueError("generators must be square matrices of equal size")
    full = n * n
    ech = _IntEchelon(full)
    gen_ints = []
    accepted: list[list[list[int]]] = []
    for m in gens:
        flat = _primitive_ints(m.flatten())
        if any(flat):
            gen_ints.append([flat[i * n : (i + 1) * n] for i in range(n)])
        res = ech.add(flat)
        if res is not None:
            accepted.append([res[i * n : (i + 1) * n] for i in range(n)])
    i = 0
    while i < len(accepted) and ech.dim < full:
        m = accepted[i]
        i += 1
        for g in gen_ints:
            for prod in (_int_matmul(m, g), _int_matmul(g, m)):
                flat = [v for row in prod for v in row]
                res = ech.add(flat)
                if res is not None:
                    accepted.append([res[k * n : (k + 1) * n] for k in range(n)])
                    if ech.dim == full:
                        break
            if ech.dim == full:
                break
    if ech.dim == full:
        return Subspace.full(full)
    return Subspace.from_vectors(ech.vectors(), full)
