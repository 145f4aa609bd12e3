"""Split simple Lie algebras with exact structure constants.

Supported families: A_n (n >= 1), B_n (n >= 2), C_n (n >= 3), D_n (n >= 4)
and G_2.  The classical families are constructed from their defining matrix
realizations -- sl(n+1) from elementary matrices, so(m) for the symmetric
form with 1s on the anti-diagonal, sp(2n) for the standard symplectic form --
and structure constants are read off by expressing brackets of the defining
matrices in the chosen basis.  G_2 comes from a static Chevalley-basis table
validated on load.

Basis ordering is fixed per family: Cartan generators first (so each ad(H_i)
is diagonal), then root vectors in a documented order.  This makes every
downstream computation reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from ._g2_table import G2_BRACKETS, G2_LABELS
from .linalg import Matrix, Subspace, associative_closure, kernel_sparse, rank, rref

Endomorphism = Matrix
BilinearForm = Matrix

__all__ = [
    "LieAlgebra",
    "Endomorphism",
    "BilinearForm",
    "build",
    "supported",
    "killing_form",
    "ad_subalgebra",
    "center_of_subalgebra",
    "structure_constants_in",
    "is_semisimple",
    "is_irreducible",
]

#: (series, minimum rank); G is exactly rank 2.
_SERIES_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "G": 2}

Brackets = dict[tuple[int, int], dict[int, Fraction]]


class LieAlgebra:
    """Finite-dimensional Lie algebra given by structure constants.

    ``brackets`` maps (i, j) with i < j to the sparse expansion of
    [e_i, e_j] in the basis; the other half follows by antisymmetry.
    """

    def __init__(self, name: str, labels: Sequence[str], brackets: Mapping):
        self.name = name
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        clean: Brackets = {}
        for (i, j), expansion in brackets.items():
            if not (0 <= i < j < self.dim):
                raise ValueError(f"bad bracket key ({i}, {j}); need 0 <= i < j < dim")
            entry = {k: Fraction(c) for k, c in expansion.items() if c}
            for k in entry:
                if not 0 <= k < self.dim:
                    raise ValueError(f"bracket ({i}, {j}) targets invalid index {k}")
            if entry:
                clean[(i, j)] = entry
        self.brackets = clean
        self._ads: list[Matrix] | None = None
        self._ad_entries: list[list[tuple[int, int, Fraction]]] | None = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.name == other.name
            and self.labels == other.labels
            and self.brackets == other.brackets
        )

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name}, dim={self.dim})"

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as a sparse coefficient vector."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
        """Bracket of coordinate vectors; bilinear, antisymmetric."""
        xv = [Fraction(v) for v in x]
        yv = [Fraction(v) for v in y]
        if len(xv) != self.dim or len(yv) != self.dim:
            raise ValueError("vector length does not match algebra dimension")
        out = [Fraction(0)] * self.dim
        for (i, j), expansion in self.brackets.items():
            c = xv[i] * yv[j] - xv[j] * yv[i]
            if c:
                for k, v in expansion.items():
                    out[k] += c * v
        return tuple(out)

    def ad_basis(self, i: int) -> Matrix:
        """ad(e_i), cached."""
        if self._ads is None:
            self._ads = [None] * self.dim  # type: ignore[list-item]
        if self._ads[i] is None:
            grid = [[Fraction(0)] * self.dim for _ in range(self.dim)]
            for j in range(self.dim):
                for k, c in self.bracket_basis(i, j).items():
                    grid[k][j] = c
            self._ads[i] = Matrix(grid)
        return self._ads[i]

    def ad_matrices(self) -> list[Matrix]:
        return [self.ad_basis(i) for i in range(self.dim)]

    def ad_entries(self, i: int) -> list[tuple[int, int, Fraction]]:
        """Sparse (row, col, value) entries of ad(e_i), cached."""
        if self._ad_entries is None:
            self._ad_entries = [None] * self.dim  # type: ignore[list-item]
        if self._ad_entries[i] is None:
            entries = []
            for j in range(self.dim):
                for k, c in self.bracket_basis(i, j).items():
                    entries.append((k, j, c))
            entries.sort(key=lambda t: (t[0], t[1]))
            self._ad_entries[i] = entries
        return self._ad_entries[i]

    def ad(self, x: Sequence) -> Matrix:
        """The endomorphism ad(x): y -> [x, y]."""
        xv = [Fraction(v) for v in x]
        if len(xv) != self.dim:
            raise ValueError("vector length does not match algebra dimension")
        grid = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, xi in enumerate(xv):
            if not xi:
                continue
            for r, c, v in self.ad_entries(i):
                grid[r][c] += xi * v
        return Matrix(grid)

    def validate(self) -> None:
        """Check the Jacobi identity on every basis triple (exact)."""
        for i, j, k in combinations(range(self.dim), 3):
            acc: dict[int, Fraction] = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for t, v in self.bracket_basis(a, b).items():
                    for s, w in self.bracket_basis(t, c).items():
                        acc[s] = acc.get(s, Fraction(0)) + v * w
            if any(acc.values()):
                raise ValueError(f"Jacobi identity fails on basis triple ({i}, {j}, {k})")


# ---------------------------------------------------------------------------
# construction


def supported(series: str, rank_: int) -> bool:
    series = series.upper()
    if series not in _SERIES_MIN_RANK:
        return False
    if series == "G":
        return rank_ == 2
    return rank_ >= _SERIES_MIN_RANK[series]


def build(series: str, rank_: int) -> LieAlgebra:
    """Construct the split simple Lie algebra of the given series and rank.

    A_n = sl(n+1), B_n = so(2n+1), C_n = sp(2n), D_n = so(2n), G_2.
    """
    series = series.upper()
    if not supported(series, rank_):
        raise ValueError(f"unsupported series/rank: {series} {rank_}")
    name = f"{series}{rank_}"
    if series == "A":
        mats, labels = _sl_basis(rank_ + 1)
    elif series == "B":
        mats, labels = _so_basis(2 * rank_ + 1)
    elif series == "C":
        mats, labels = _sp_basis(rank_)
    elif series == "D":
        mats, labels = _so_basis(2 * rank_)
    else:
        return _g2()
    return _from_defining(name, mats, labels)


def _unit(m: int, i: int, j: int) -> list[list[Fraction]]:
    grid = [[Fraction(0)] * m for _ in range(m)]
    grid[i][j] = Fraction(1)
    return grid


def _combine(m: int, *entries: tuple[int, int, int]) -> Matrix:
    grid = [[Fraction(0)] * m for _ in range(m)]
    for i, j, c in entries:
        grid[i][j] += c
    return Matrix(grid)


def _sl_basis(m: int) -> tuple[list[Matrix], list[str]]:
    """Traceless m x m matrices: H_i = E_ii - E_{i+1,i+1}, then E_ij off-diagonal."""
    mats, labels = [], []
    for i in range(m - 1):
        mats.append(_combine(m, (i, i, 1), (i + 1, i + 1, -1)))
        labels.append(f"H{i + 1}")
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    for i, j in pairs:
        mats.append(_combine(m, (i, j, 1)))
        labels.append(f"X{i + 1}{j + 1}")
    for i, j in pairs:
        mats.append(_combine(m, (j, i, 1)))
        labels.append(f"Y{i + 1}{j + 1}")
    return mats, labels


def _so_basis(m: int) -> tuple[list[Matrix], list[str]]:
    """Matrices skew w.r.t. the symmetric form with 1s on the anti-diagonal.

    Basis elements F(u,v) = E_uv - E_{m-1-v, m-1-u}; the diagonal ones
    F(i,i) for i < m//2 form the Cartan subalgebra and come first.
    """
    mirror = lambda i: m - 1 - i
    mats, labels = [], []
    for i in range(m // 2):
        mats.append(_combine(m, (i, i, 1), (mirror(i), mirror(i), -1)))
        labels.append(f"H{i + 1}")
    for u in range(m):
        for v in range(m):
            if u == v or u + v == m - 1:
                continue
            if (u, v) > (mirror(v), mirror(u)):
                continue
            mats.append(_combine(m, (u, v, 1), (mirror(v), mirror(u), -1)))
            labels.append(f"F{u + 1}{v + 1}")
    return mats, labels


def _sp_basis(n: int) -> tuple[list[Matrix], list[str]]:
    """sp(2n) for J = [[0, I], [-I, 0]]: blocks [[P, Q], [R, -P^T]], Q, R symmetric."""
    m = 2 * n
    mats, labels = [], []
    for i in range(n):
        mats.append(_combine(m, (i, i, 1), (n + i, n + i, -1)))
        labels.append(f"H{i + 1}")
    for i in range(n):
        for j in range(n):
            if i != j:
                mats.append(_combine(m, (i, j, 1), (n + j, n + i, -1)))
                labels.append(f"A{i + 1}{j + 1}")
    for i in range(n):
        for j in range(i, n):
            if i == j:
                mats.append(_combine(m, (i, n + i, 1)))
            else:
                mats.append(_combine(m, (i, n + j, 1), (j, n + i, 1)))
            labels.append(f"B{i + 1}{j + 1}")
    for i in range(n):
        for j in range(i, n):
            if i == j:
                mats.append(_combine(m, (n + i, i, 1)))
            else:
                mats.append(_combine(m, (n + i, j, 1), (n + j, i, 1)))
            labels.append(f"C{i + 1}{j + 1}")
    return mats, labels


def _from_defining(name: str, mats: list[Matrix], labels: list[str]) -> LieAlgebra:
    """Read structure constants off a defining matrix realization.

    The defining matrices are sparse (a couple of entries each), so brackets
    and coordinate extraction run on sparse maps keyed by flat entry position.
    """
    dim = len(mats)
    m = mats[0].nrows
    by_row: list[dict[int, list[tuple[int, Fraction]]]] = []
    flats: list[dict[int, Fraction]] = []
    for mat in mats:
        rows: dict[int, list[tuple[int, Fraction]]] = {}
        flat: dict[int, Fraction] = {}
        for r, c, v in mat.nonzero_entries():
            rows.setdefault(r, []).append((c, v))
            flat[r * m + c] = v
        by_row.append(rows)
        flats.append(flat)

    def sparse_commutator(i: int, j: int) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for r, entries in by_row[i].items():
            for c, v in entries:
                for c2, w in by_row[j].get(c, ()):
                    pos = r * m + c2
                    s = out.get(pos, Fraction(0)) + v * w
                    if s:
                        out[pos] = s
                    elif pos in out:
                        del out[pos]
        for r, entries in by_row[j].items():
            for c, v in entries:
                for c2, w in by_row[i].get(c, ()):
                    pos = r * m + c2
                    s = out.get(pos, Fraction(0)) - v * w
                    if s:
                        out[pos] = s
                    elif pos in out:
                        del out[pos]
        return out

    coords = _SparseCoordinateSolver(flats)
    brackets: Brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            entry = {k: c for k, c in coords.solve(sparse_commutator(i, j)).items() if c}
            if entry:
                brackets[(i, j)] = entry
    return LieAlgebra(name, labels, brackets)


class _SparseCoordinateSolver:
    """Coordinates w.r.t. an independent spanning set, all kept sparse."""

    def __init__(self, vectors: Sequence[Mapping[int, Fraction]]):
        self.pivots: dict[int, tuple[dict[int, Fraction], dict[int, Fraction]]] = {}
        for idx, vec in enumerate(vectors):
            data = dict(vec)
            trans = {idx: Fraction(1)}
            # clear every existing pivot column (one pass suffices: reduced
            # pivot rows cannot reintroduce other pivot columns)
            for c in sorted(set(data) & set(self.pivots)):
                f = data.get(c)
                if f:
                    pdata, ptrans = self.pivots[c]
                    _sparse_axpy(data, pdata, -f)
                    _sparse_axpy(trans, ptrans, -f)
            if not data:
                raise ValueError("spanning set is linearly dependent")
            c = min(data)
            lead = data[c]
            data = {k: v / lead for k, v in data.items()}
            trans = {k: v / lead for k, v in trans.items()}
            # keep the whole system fully reduced
            for pdata, ptrans in self.pivots.values():
                f = pdata.get(c)
                if f:
                    _sparse_axpy(pdata, data, -f)
                    _sparse_axpy(ptrans, trans, -f)
            self.pivots[c] = (data, trans)

    def solve(self, target: Mapping[int, Fraction]) -> dict[int, Fraction]:
        residual = dict(target)
        out: dict[int, Fraction] = {}
        for c in sorted(target):
            hit = self.pivots.get(c)
            f = residual.get(c)
            if hit is None or not f:
                continue
            pdata, ptrans = hit
            _sparse_axpy(residual, pdata, -f)
            _sparse_axpy(out, ptrans, f)
        if any(residual.values()):
            raise ArithmeticError("vector is outside the span of the basis")
        return out


def _sparse_axpy(acc: dict[int, Fraction], other: Mapping[int, Fraction], factor: Fraction) -> None:
    for k, v in other.items():
        s = acc.get(k, Fraction(0)) + factor * v
        if s:
            acc[k] = s
        elif k in acc:
            del acc[k]


class _CoordinateSolver:
    """Express vectors in the span of a fixed independent spanning set."""

    def __init__(self, vectors: Sequence[Sequence[Fraction]]):
        self.k = len(vectors)
        width = len(vectors[0])
        # augment with identity so the transform back to input coordinates
        # rides along through the reduction
        augmented = [
            list(v) + [Fraction(int(r == i)) for i in range(self.k)]
            for r, v in enumerate(vectors)
        ]
        rows, pivots = rref(augmented, width + self.k)
        if len(rows) != self.k or any(p >= width for p in pivots):
            raise ValueError("spanning set is linearly dependent")
        self.width = width
        self.pivots = pivots
        self.rows = rows

    def solve(self, target: Sequence[Fraction]) -> list[Fraction]:
        coeffs = [target[p] for p in self.pivots]
        residual = list(target)
        out = [Fraction(0)] * self.k
        for c, row in zip(coeffs, self.rows):
            if not c:
                continue
            for i in range(self.width):
                if row[i]:
                    residual[i] -= c * row[i]
            for i in range(self.k):
                if row[self.width + i]:
                    out[i] += c * row[self.width + i]
        if any(residual):
            raise ArithmeticError("vector is outside the span of the basis")
        return out


def _g2() -> LieAlgebra:
    brackets: Brackets = {}
    for i, j, k, c in G2_BRACKETS:
        brackets.setdefault((i, j), {})[k] = Fraction(c)
    g = LieAlgebra("G2", G2_LABELS, brackets)
    g.validate()
    if rank(killing_form(g)) != g.dim:
        raise ArithmeticError("G2 table is corrupt: Killing form is degenerate")
    return g


# ---------------------------------------------------------------------------
# structural operations


def killing_form(g: LieAlgebra) -> Matrix:
    """B(e_i, e_j) = trace(ad(e_i) ad(e_j)); symmetric and ad-invariant."""
    n = g.dim
    sparse = []
    for i in range(n):
        sparse.append({(r, c): v for r, c, v in g.ad_entries(i)})
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = Fraction(0)
            bj = sparse[j]
            for (r, c), v in sparse[i].items():
                w = bj.get((c, r))
                if w is not None:
                    s += v * w
            grid[i][j] = s
            grid[j][i] = s
    return Matrix(grid)


def ad_subalgebra(g: LieAlgebra) -> Subspace:
    """The image of ad inside n^2-dimensional matrix space; dim equals dim(g)."""
    sub = Subspace.from_vectors(
        [g.ad_basis(i).flatten() for i in range(g.dim)], g.dim * g.dim
    )
    if sub.dim != g.dim:
        raise ArithmeticError(
            f"adjoint map of {g.name} is not injective; structure constants corrupt"
        )
    return sub


def center_of_subalgebra(basis: Sequence[Matrix]) -> Subspace:
    """Elements of span(basis) commuting with every basis element."""
    if not basis:
        raise ValueError("basis must be nonempty")
    n = basis[0].nrows
    if any(not b.is_square or b.nrows != n for b in basis):
        raise ValueError("basis matrices must be square and of equal size")
    k = len(basis)
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, b in enumerate(basis):
        for j, other in enumerate(basis):
            com = other.commutator(b)
            for pos, v in enumerate(com.flatten()):
                if v:
                    rows.setdefault((i, pos), {})[j] = v
    coeff_sets = kernel_sparse([rows[key] for key in sorted(rows)], k)
    vectors = []
    for coeffs in coeff_sets:
        flat = [Fraction(0)] * (n * n)
        for j, c in enumerate(coeffs):
            if c:
                for pos, v in enumerate(basis[j].flatten()):
                    if v:
                        flat[pos] += c * v
        vectors.append(flat)
    return Subspace.from_vectors(vectors, n * n)


def structure_constants_in(basis: Sequence[Matrix]) -> Brackets:
    """Structure constants of a commutator-closed matrix subalgebra.

    Raises ValueError if the basis is dependent or not closed, reporting the
    first offending bracket pair.
    """
    if not basis:
        raise ValueError("basis must be nonempty")
    n = basis[0].nrows
    if any(not b.is_square or b.nrows != n for b in basis):
        raise ValueError("basis matrices must be square and of equal size")
    try:
        coords = _CoordinateSolver([b.flatten() for b in basis])
    except ValueError:
        raise ValueError("basis is linearly dependent") from None
    out: Brackets = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            com = basis[i].commutator(basis[j])
            try:
                coeffs = coords.solve(com.flatten())
            except ArithmeticError:
                raise ValueError(
                    f"basis is not closed under commutator: pair ({i}, {j})"
                ) from None
            entry = {k: c for k, c in enumerate(coeffs) if c}
            if entry:
                out[(i, j)] = entry
    return out


def is_semisimple(basis: Sequence[Matrix]) -> bool:
    """Cartan's criterion on a commutator-closed matrix subalgebra.

    Computes abstract structure constants in the given basis, then the Killing
    form of the abstract algebra; semisimple iff that form is nondegenerate.
    """
    sc = structure_constants_in(basis)
    g = LieAlgebra("sub", [f"b{i}" for i in range(len(basis))], sc)
    return rank(killing_form(g)) == len(basis)


def is_irreducible(gens: Sequence[Matrix]) -> bool:
    """Burnside test: the operators act irreducibly iff their associative
    closure (with the identity adjoined) is the full matrix algebra."""
    if not gens:
        raise ValueError("at least one operator is required")
    n = gens[0].nrows
    closure = associative_closure(list(gens) + [Matrix.identity(n)])
    return closure.dim == n * n
