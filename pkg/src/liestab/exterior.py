"""Sparse exterior algebra of alternating forms with the gl action.

An l-form on an n-dimensional space is stored as a sparse map from strictly
increasing index tuples (0-based, lexicographically ordered) to nonzero
rational coefficients; equality of forms is literal data equality.

The action of A in gl(V) on forms extends the dual action
(A . xi)(x) = -xi(A x) as a derivation of the wedge product.  In particular a
scalar matrix c*I acts on an l-form as multiplication by -c*l, and
A |-> (action of A) is a Lie algebra representation on each degree.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix

MultiIndex = tuple[int, ...]

__all__ = [
    "MultiIndex",
    "AlternatingForm",
    "all_monomials",
    "wedge",
    "gl_action",
    "action_matrix",
    "monomial_equivalent",
    "traceless_witness",
    "evaluate",
]


def all_monomials(n: int, degree: int) -> list[MultiIndex]:
    """All strictly increasing degree-tuples in [0, n), lexicographically."""
    return list(combinations(range(n), degree))


class AlternatingForm:
    """Alternating form of fixed degree in canonical sparse representation."""

    __slots__ = ("ambient_dim", "degree", "terms")

    def __init__(self, ambient_dim: int, degree: int, terms: Mapping[MultiIndex, Fraction] | None = None):
        if ambient_dim < 0 or degree < 0:
            raise ValueError("ambient dimension and degree must be nonnegative")
        self.ambient_dim = ambient_dim
        self.degree = degree
        clean: dict[MultiIndex, Fraction] = {}
        for idx, c in (terms or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index {idx} does not have degree {degree}")
            if any(not 0 <= v < ambient_dim for v in idx):
                raise ValueError(f"index {idx} out of range for ambient {ambient_dim}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"index {idx} is not strictly increasing")
            c = Fraction(c)
            if c:
                clean[idx] = c
        self.terms = clean

    @classmethod
    def zero(cls, ambient_dim: int, degree: int) -> "AlternatingForm":
        return cls(ambient_dim, degree, {})

    @classmethod
    def monomial(cls, ambient_dim: int, indices: Sequence[int], coeff=1) -> "AlternatingForm":
        idx = tuple(indices)
        return cls(ambient_dim, len(idx), {idx: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(indices), Fraction(0))

    def items(self) -> list[tuple[MultiIndex, Fraction]]:
        """Terms in lexicographic multi-index order."""
        return sorted(self.terms.items())

    def support(self) -> list[MultiIndex]:
        return sorted(self.terms)

    def scale(self, q) -> "AlternatingForm":
        q = Fraction(q)
        if not q:
            return AlternatingForm.zero(self.ambient_dim, self.degree)
        return AlternatingForm(
            self.ambient_dim, self.degree, {k: q * v for k, v in self.terms.items()}
        )

    def _check_compatible(self, other: "AlternatingForm") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        if self.degree != other.degree:
            raise ValueError("degrees differ")

    def __add__(self, other: "AlternatingForm") -> "AlternatingForm":
        self._check_compatible(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, Fraction(0)) + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return AlternatingForm(self.ambient_dim, self.degree, out)

    def __sub__(self, other: "AlternatingForm") -> "AlternatingForm":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlternatingForm)
            and self.ambient_dim == other.ambient_dim
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.degree, tuple(self.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"AlternatingForm(0; n={self.ambient_dim}, l={self.degree})"
        body = " + ".join(f"{c}*e{list(k)}" for k, c in self.items())
        return f"AlternatingForm({body}; n={self.ambient_dim})"


def _merge_indices(a: MultiIndex, b: MultiIndex) -> tuple[MultiIndex, int] | None:
    """Merge two increasing tuples; None on collision, else (merged, sign)."""
    out: list[int] = []
    inv = 0
    p = q = 0
    while p < len(a) and q < len(b):
        if a[p] == b[q]:
            return None
        if a[p] < b[q]:
            out.append(a[p])
            p += 1
        else:
            out.append(b[q])
            q += 1
            inv += len(a) - p
    out.extend(a[p:])
    out.extend(b[q:])
    return tuple(out), (-1 if inv % 2 else 1)


def wedge(a: AlternatingForm, b: AlternatingForm) -> AlternatingForm:
    """Wedge product; bilinear, associative, graded-commutative."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    degree = a.degree + b.degree
    out: dict[MultiIndex, Fraction] = {}
    for ia, ca in a.terms.items():
        for ib, cb in b.terms.items():
            merged = _merge_indices(ia, ib)
            if merged is None:
                continue
            key, sign = merged
            s = out.get(key, Fraction(0)) + sign * ca * cb
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return AlternatingForm(a.ambient_dim, degree, out)


def _replace_slot(idx: MultiIndex, p: int, c: int) -> tuple[MultiIndex, int] | None:
    """Substitute index c into slot p of an increasing tuple; None on collision."""
    rest = idx[:p] + idx[p + 1 :]
    pos = bisect_left(rest, c)
    if pos < len(rest) and rest[pos] == c:
        return None
    sign = -1 if (p + pos) % 2 else 1
    return rest[:pos] + (c,) + rest[pos:], sign


def _sparse_rows(a: Matrix) -> list[list[tuple[int, Fraction]]]:
    return [[(j, v) for j, v in enumerate(row) if v] for row in a.rows]


def _act_on_terms(
    rows: Sequence[Sequence[tuple[int, Fraction]]], terms: Mapping[MultiIndex, Fraction]
) -> dict[MultiIndex, Fraction]:
    """Core of the gl action on a sparse term map (dual action, minus sign)."""
    out: dict[MultiIndex, Fraction] = {}
    for idx, a in terms.items():
        for p, i in enumerate(idx):
            for c, v in rows[i]:
                rep = _replace_slot(idx, p, c)
                if rep is None:
                    continue
                key, sign = rep
                s = out.get(key, Fraction(0)) - sign * a * v
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
    return out


def gl_action(a: Matrix, w: AlternatingForm) -> AlternatingForm:
    """Action of a in gl(V) on the form w (degree is preserved).

    Dual-action convention (a . xi)(x) = -xi(a x); hence a scalar matrix c*I
    acts as multiplication by -c*degree, and the map is a representation:
    action([a, b]) = action(a) action(b) - action(b) action(a).
    """
    if not a.is_square or a.nrows != w.ambient_dim:
        raise ValueError("matrix size does not match the form's ambient dimension")
    if w.degree == 0:
        return AlternatingForm.zero(w.ambient_dim, 0)
    return AlternatingForm(
        w.ambient_dim, w.degree, _act_on_terms(_sparse_rows(a), w.terms)
    )


def _action_entries(w: AlternatingForm):
    """Yield (monomial, flat matrix position, coefficient) triples of the map
    A |-> gl_action(A, w), linearized over the entries of A (row-major)."""
    n = w.ambient_dim
    for idx, a in sorted(w.terms.items()):
        for p, i in enumerate(idx):
            for c in range(n):
                rep = _replace_slot(idx, p, c)
                if rep is None:
                    continue
                key, sign = rep
                yield key, i * n + c, -sign * a


def action_matrix(w: AlternatingForm) -> Matrix:
    """Matrix of A |-> gl_action(A, w) in flattened coordinates.

    Rows are indexed by all degree-l monomials in lexicographic order, columns
    by the n^2 entries of A in row-major order, so that
    flatten(gl_action(A, w)) = action_matrix(w) . flatten(A).
    """
    n = w.ambient_dim
    monomials = {m: r for r, m in enumerate(all_monomials(n, w.degree))}
    grid = [[Fraction(0)] * (n * n) for _ in monomials]
    for key, col, coeff in _action_entries(w):
        grid[monomials[key]][col] += coeff
    return Matrix(grid)


def monomial_equivalent(a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether two wedge monomials share a common factor of all but one slot.

    True iff the index sets agree in at least l-1 elements, i.e. both can be
    written as a single covector wedged against one common (l-1)-monomial;
    exactly then a single matrix slot substitution maps one to the other.
    """
    ta, tb = tuple(a), tuple(b)
    if len(ta) != len(tb):
        raise ValueError("monomials must have the same degree")
    return len(set(ta) & set(tb)) >= len(ta) - 1


def traceless_witness(w: AlternatingForm) -> Matrix | None:
    """A traceless matrix whose action on w is nonzero, if one exists.

    For a nonzero form of degree l with 0 < l < n a witness always exists and
    is found among the single-entry matrices E_ij (i != j): scan candidate
    (i, j) pairs lexicographically, using E_ij whenever some support monomial
    contains i but not j, and fall back to the next candidate should the image
    cancel to zero.  For l = n (volume forms) and l = 0 the action of every
    traceless matrix vanishes and None is returned.
    """
    if w.is_zero():
        raise ValueError("form must be nonzero")
    n, l = w.ambient_dim, w.degree
    if l == 0 or l >= n:
        return None
    support = w.support()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if not any(i in idx and j not in idx for idx in support):
                continue
            a = Matrix.single_entry(n, i, j)
            if not gl_action(a, w).is_zero():
                return a
    raise ArithmeticError("no single-entry witness found for a nonzero form of degree < n")


def evaluate(w: AlternatingForm, vectors: Sequence[Sequence]) -> Fraction:
    """Evaluate the form on a tuple of coordinate vectors."""
    if len(vectors) != w.degree:
        raise ValueError(f"need exactly {w.degree} vectors")
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    if any(len(v) != w.ambient_dim for v in vecs):
        raise ValueError("vector length does not match ambient dimension")
    total = Fraction(0)
    for idx, c in w.terms.items():
        minor = [[vecs[q][idx[p]] for q in range(w.degree)] for p in range(w.degree)]
        total += c * _det(minor)
    return total


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with rational pivots."""
    n = len(rows)
    rows = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pv = rows[col][col]
        det *= pv
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] / pv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det
