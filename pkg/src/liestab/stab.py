"""Adjoint-invariant forms, stabilizer subalgebras, and the verification pipeline.

The central computation: for a split simple Lie algebra g and a degree l,
find the space of l-forms annihilated by every ad(e_i), compute the stabilizer
subalgebra in gl(g) of each invariant form as an exact kernel, and check that
it coincides with the image of ad.  A companion computation identifies the
centralizer of ad(g) in gl(g) as the scalars, which pins down the group of
commuting l-th roots of unity.

Large kernels are computed by imposing one generator's constraints at a time
on a shrinking basis; because Cartan generators act diagonally this collapses
the search space almost immediately.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exterior import (
    AlternatingForm,
    _act_on_terms,
    _action_entries,
    all_monomials,
)
from .liealg import (
    LieAlgebra,
    ad_subalgebra,
    center_of_subalgebra,
    is_semisimple,
    killing_form,
)
from .linalg import Matrix, Subspace, kernel_sparse

log = logging.getLogger(__name__)

__all__ = [
    "CentralizerDimensionError",
    "ScalarGroupRecord",
    "FormStabilizerRecord",
    "VerificationReport",
    "invariant_forms",
    "invariant_profile",
    "cartan_three_form",
    "stabilizer_algebra",
    "centralizer_of_ad",
    "commutant_in",
    "scalar_group",
    "verify_stabilizer",
]


class CentralizerDimensionError(RuntimeError):
    """The centralizer of ad(g) in gl(g) is not one-dimensional.

    For a simple algebra this cannot happen (Schur); seeing it means the
    structure constants are corrupt.
    """


# ---------------------------------------------------------------------------
# shrinking-basis kernel engine


def _combine_sparse(coeffs: Sequence[Fraction], basis: list[dict]) -> dict:
    out: dict = {}
    for c, vec in zip(coeffs, basis):
        if not c:
            continue
        for k, v in vec.items():
            s = out.get(k, Fraction(0)) + c * v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def _refine_kernel(basis: list[dict], operators) -> list[dict]:
    """Intersect ker(op) over all operators, starting from the given basis.

    ``basis`` holds sparse vectors (mapping hashable keys to Fractions);
    each operator maps such a vector to its sparse image.  After every
    operator the basis is replaced by the kernel of the induced coefficient
    matrix, so later (cheaper) constraints act on ever smaller spaces.
    """
    for op in operators:
        if not basis:
            break
        images = [op(vec) for vec in basis]
        keys = sorted(set().union(*images))
        if not keys:
            continue
        rows = []
        for key in keys:
            row = {
                col: im[key] for col, im in enumerate(images) if key in im
            }
            rows.append(row)
        coeff_vectors = kernel_sparse(rows, len(basis))
        basis = [_combine_sparse(c, basis) for c in coeff_vectors]
    return basis


def _ad_action_rows(g: LieAlgebra, i: int) -> list[list[tuple[int, Fraction]]]:
    rows: list[list[tuple[int, Fraction]]] = [[] for _ in range(g.dim)]
    for r, c, v in g.ad_entries(i):
        rows[r].append((c, v))
    return rows


# ---------------------------------------------------------------------------
# invariant forms


def invariant_forms(g: LieAlgebra, degree: int) -> list[AlternatingForm]:
    """Canonical basis of the l-forms annihilated by every ad(e_i)."""
    n = g.dim
    if not 0 <= degree <= n:
        raise ValueError(f"degree {degree} out of range 0..{n}")
    monomials = all_monomials(n, degree)
    basis: list[dict] = [{m: Fraction(1)} for m in monomials]
    if degree > 0:
        ops = [
            (lambda terms, rows=_ad_action_rows(g, i): _act_on_terms(rows, terms))
            for i in range(n)
        ]
        basis = _refine_kernel(basis, ops)
    if not basis:
        return []
    # canonicalize over the full lexicographic monomial coordinate system
    index = {m: p for p, m in enumerate(monomials)}
    vectors = []
    for vec in basis:
        row = [Fraction(0)] * len(monomials)
        for key, v in vec.items():
            row[index[key]] = v
        vectors.append(row)
    sub = Subspace.from_vectors(vectors, len(monomials))
    return [
        AlternatingForm(n, degree, {monomials[p]: v for p, v in enumerate(row) if v})
        for row in sub.basis
    ]


def invariant_profile(g: LieAlgebra) -> list[int]:
    """Dimension of the invariant-form space for every degree 0..dim."""
    return [len(invariant_forms(g, l)) for l in range(g.dim + 1)]


def cartan_three_form(g: LieAlgebra) -> AlternatingForm:
    """The 3-form w(x, y, z) = B([x, y], z) built from the Killing form B."""
    n = g.dim
    b = killing_form(g)
    terms: dict = {}
    for i in range(n):
        for j in range(i + 1, n):
            expansion = g.bracket_basis(i, j)
            if not expansion:
                continue
            for k in range(j + 1, n):
                c = Fraction(0)
                for t, v in expansion.items():
                    c += v * b.rows[t][k]
                if c:
                    terms[(i, j, k)] = c
    return AlternatingForm(n, 3, terms)


# ---------------------------------------------------------------------------
# stabilizers and centralizers


def stabilizer_algebra(g: LieAlgebra, w: AlternatingForm) -> Subspace:
    """All A in gl(g) whose action annihilates w, inside n^2-space.

    Exact kernel of the linearized action; contains the image of ad whenever
    w is adjoint-invariant, and is always closed under the matrix commutator.
    """
    n = g.dim
    if w.ambient_dim != n:
        raise ValueError("form ambient dimension does not match the algebra")
    rows: dict = {}
    for key, col, coeff in _action_entries(w):
        row = rows.setdefault(key, {})
        s = row.get(col, Fraction(0)) + coeff
        if s:
            row[col] = s
        elif col in row:
            del row[col]
    ordered = [rows[k] for k in sorted(rows)]
    vectors = kernel_sparse(ordered, n * n)
    return Subspace(n * n, tuple(vectors))


def centralizer_of_ad(g: LieAlgebra) -> Subspace:
    """{A in gl(g) : [A, ad(e_i)] = 0 for all i}, canonical subspace of n^2-space."""
    cached = getattr(g, "_centralizer_cache", None)
    if cached is not None:
        return cached
    n = g.dim
    units: list[dict] = [{(r, c): Fraction(1)} for r in range(n) for c in range(n)]

    def commutator_op(i: int):
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        by_col: dict[int, list[tuple[int, Fraction]]] = {}
        for r, c, v in g.ad_entries(i):
            by_row.setdefault(r, []).append((c, v))
            by_col.setdefault(c, []).append((r, v))

        def op(terms: dict) -> dict:
            out: dict = {}
            for (r, c), v in terms.items():
                # (ad_i . A)[a][c] for ad entries (a, r)
                for a, m in by_col.get(r, ()):
                    key = (a, c)
                    s = out.get(key, Fraction(0)) + m * v
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
                # (A . ad_i)[r][c2] for ad entries (c, c2)
                for c2, m in by_row.get(c, ()):
                    key = (r, c2)
                    s = out.get(key, Fraction(0)) - v * m
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
            return out

        return op

    basis = _refine_kernel(units, [commutator_op(i) for i in range(n)])
    vectors = []
    for vec in basis:
        flat = [Fraction(0)] * (n * n)
        for (r, c), v in vec.items():
            flat[r * n + c] = v
        vectors.append(flat)
    sub = Subspace.from_vectors(vectors, n * n)
    g._centralizer_cache = sub
    return sub


def commutant_in(g: LieAlgebra, ambient: Subspace) -> Subspace:
    """Elements of the ambient subspace commuting with every ad(e_i)."""
    n = g.dim
    if ambient.ambient_dim != n * n:
        raise ValueError("ambient subspace must live in n^2-dimensional matrix space")
    return ambient.intersect(centralizer_of_ad(g))


# ---------------------------------------------------------------------------
# scalar symmetries and the verification pipeline


@dataclass(frozen=True)
class ScalarGroupRecord:
    """Structure of the scalars commuting with ad(g) whose l-th power is 1."""

    centralizer_dim: int
    order: int
    generator_description: str


def scalar_group(g: LieAlgebra, degree: int) -> ScalarGroupRecord:
    """The group of endomorphisms commuting with all ad(x) with l-th power id.

    The centralizer of ad(g) in gl(g) is computed exactly; once it is the
    scalar line (as Schur's lemma forces for a simple algebra), the group is
    cyclic of order l, generated by a primitive l-th root of unity times the
    identity.  The root of unity is reported symbolically; no complex
    arithmetic is involved.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    cen = centralizer_of_ad(g)
    identity_flat = Matrix.identity(g.dim).flatten()
    if cen.dim != 1 or cen.basis[0] != identity_flat:
        raise CentralizerDimensionError(
            f"centralizer of ad({g.name}) has dimension {cen.dim}, expected the scalar line"
        )
    if degree == 1:
        description = "id"
    else:
        description = f"exp(2*pi*i/{degree}) * id"
    return ScalarGroupRecord(centralizer_dim=1, order=degree, generator_description=description)


@dataclass(frozen=True)
class FormStabilizerRecord:
    """Per-form outcome of the stabilizer verification."""

    label: str
    stabilizer_dim: int
    contains_ad: bool
    equals_ad: bool
    stab_semisimple: bool
    stab_center_dim: int
    commutant_dim: int
    trace_zero: bool

    @property
    def passes(self) -> bool:
        return (
            self.contains_ad
            and self.equals_ad
            and self.stab_semisimple
            and self.stab_center_dim == 0
            and self.commutant_dim == 0
            and self.trace_zero
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the full pipeline for one algebra and one degree."""

    algebra: str
    degree: int
    seed: int
    dim_invariant_forms: int
    vacuous: bool
    forms: tuple[FormStabilizerRecord, ...]
    m_group: ScalarGroupRecord
    overall_pass: bool


def _random_combination(
    basis: Sequence[AlternatingForm], rng: random.Random
) -> AlternatingForm:
    """Nonzero combination with small-height rational coefficients."""
    while True:
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in basis]
        if any(coeffs):
            break
    out = AlternatingForm.zero(basis[0].ambient_dim, basis[0].degree)
    for c, w in zip(coeffs, basis):
        out = out + w.scale(c)
    if out.is_zero():  # cancellation across basis forms cannot happen (independent)
        raise ArithmeticError("independent basis produced a zero combination")
    return out


def verify_stabilizer(g: LieAlgebra, degree: int, seed: int = 0) -> VerificationReport:
    """Verify that every adjoint-invariant form of the degree has stabilizer ad(g).

    Checks each basis element of the invariant space plus three pseudo-random
    rational combinations drawn from ``random.Random(seed)`` with coefficients
    p/q, |p| <= 9, 1 <= q <= 9.  Each stabilizer is compared with the image of
    ad by canonical-subspace equality (never by dimension alone), and the
    structural side conditions are recorded: semisimplicity via Cartan's
    criterion, zero center, zero commutant with ad(g), and tracelessness.
    An empty invariant space yields a vacuous pass, flagged as such.
    """
    n = g.dim
    if not 1 <= degree < n:
        raise ValueError(f"degree must satisfy 1 <= degree < dim(g) = {n}")
    basis = invariant_forms(g, degree)
    log.info("%s degree %d: invariant space has dimension %d", g.name, degree, len(basis))
    candidates: list[tuple[str, AlternatingForm]] = [
        (f"basis[{i}]", w) for i, w in enumerate(basis)
    ]
    if basis:
        rng = random.Random(seed)
        candidates.extend(
            (f"combo[{t}]", _random_combination(basis, rng)) for t in range(3)
        )
    ad_image = ad_subalgebra(g)
    records = []
    for label, w in candidates:
        stab = stabilizer_algebra(g, w)
        mats = stab.matrices()
        record = FormStabilizerRecord(
            label=label,
            stabilizer_dim=stab.dim,
            contains_ad=stab.contains_subspace(ad_image),
            equals_ad=stab == ad_image,
            stab_semisimple=is_semisimple(mats),
            stab_center_dim=center_of_subalgebra(mats).dim,
            commutant_dim=commutant_in(g, stab).dim,
            trace_zero=all(m.trace() == 0 for m in mats),
        )
        log.info("%s degree %d %s: stabilizer dim %d, equals ad: %s",
                 g.name, degree, label, record.stabilizer_dim, record.equals_ad)
        records.append(record)
    m_rec = scalar_group(g, degree)
    overall = all(r.passes for r in records) and m_rec.centralizer_dim == 1
    return VerificationReport(
        algebra=g.name,
        degree=degree,
        seed=seed,
        dim_invariant_forms=len(basis),
        vacuous=not basis,
        forms=tuple(records),
        m_group=m_rec,
        overall_pass=overall,
    )
