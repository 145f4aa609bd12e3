"""JSON encoding of all domain objects.

Formats are bit-exact and round-trip losslessly:

- rationals: ``{"num": "<decimal string>", "den": "<decimal string>"}``
  (strings, because coefficients exceed native number ranges), den positive,
  gcd(num, den) = 1;
- Lie algebra: ``{"name", "dim", "labels", "sc": [[i, j, k, num, den], ...]}``
  with 1-based indices and i < j only (antisymmetry implied), triples sorted;
- alternating form: ``{"dim", "degree", "terms": [{"idx": [...], "num", "den"}]}``
  with 1-based strictly increasing idx in lexicographic order;
- subspace: ``{"ambient_dim", "basis": [[rational, ...], ...]}`` in reduced
  row-echelon form;
- verification report: plain nested record.

In-memory objects use 0-based indices throughout; the 1-based shift exists
only at this boundary.  ``dumps`` renders canonical bytes (two-space indent,
sorted keys, trailing newline), so identical objects serialize identically.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Any

from .exterior import AlternatingForm
from .liealg import LieAlgebra
from .linalg import Subspace
from .stab import FormStabilizerRecord, ScalarGroupRecord, VerificationReport

__all__ = [
    "SchemaError",
    "dumps",
    "rational_to_json",
    "rational_from_json",
    "algebra_to_json",
    "algebra_from_json",
    "form_to_json",
    "form_from_json",
    "forms_to_json",
    "forms_from_json",
    "subspace_to_json",
    "subspace_from_json",
    "report_to_json",
    "report_from_json",
]


class SchemaError(ValueError):
    """A JSON document violates the expected schema; message carries the path."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise SchemaError(f"{path}: {message}")


def _get(obj: Any, key: str, path: str) -> Any:
    _expect(isinstance(obj, dict), path, "expected an object")
    _expect(key in obj, path, f"missing key {key!r}")
    return obj[key]


def _int_field(obj: Any, key: str, path: str) -> int:
    v = _get(obj, key, path)
    _expect(isinstance(v, int) and not isinstance(v, bool), f"{path}.{key}", "expected an integer")
    return v


def _bool_field(obj: Any, key: str, path: str) -> bool:
    v = _get(obj, key, path)
    _expect(isinstance(v, bool), f"{path}.{key}", "expected a boolean")
    return v


def _str_field(obj: Any, key: str, path: str) -> str:
    v = _get(obj, key, path)
    _expect(isinstance(v, str), f"{path}.{key}", "expected a string")
    return v


def _decimal_string(v: Any, path: str) -> int:
    _expect(isinstance(v, str), path, "expected a decimal string")
    try:
        return int(v, 10)
    except ValueError:
        raise SchemaError(f"{path}: not a decimal integer: {v!r}") from None


# -- rationals ---------------------------------------------------------------


def rational_to_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: Any, path: str = "$") -> Fraction:
    num = _decimal_string(_get(obj, "num", path), f"{path}.num")
    den = _decimal_string(_get(obj, "den", path), f"{path}.den")
    _expect(den > 0, f"{path}.den", "denominator must be positive")
    _expect(gcd(abs(num), den) == 1, path, "rational is not in lowest terms")
    return Fraction(num, den)


# -- Lie algebras ------------------------------------------------------------


def algebra_to_json(g: LieAlgebra) -> dict:
    triples = []
    for (i, j) in sorted(g.brackets):
        for k in sorted(g.brackets[(i, j)]):
            c = g.brackets[(i, j)][k]
            triples.append([i + 1, j + 1, k + 1, str(c.numerator), str(c.denominator)])
    return {"name": g.name, "dim": g.dim, "labels": list(g.labels), "sc": triples}


def algebra_from_json(obj: Any, path: str = "$") -> LieAlgebra:
    name = _str_field(obj, "name", path)
    dim = _int_field(obj, "dim", path)
    _expect(dim >= 1, f"{path}.dim", "dimension must be positive")
    labels = _get(obj, "labels", path)
    _expect(
        isinstance(labels, list) and all(isinstance(x, str) for x in labels),
        f"{path}.labels",
        "expected a list of strings",
    )
    _expect(len(labels) == dim, f"{path}.labels", f"expected {dim} labels")
    sc = _get(obj, "sc", path)
    _expect(isinstance(sc, list), f"{path}.sc", "expected a list")
    brackets: dict = {}
    for t, triple in enumerate(sc):
        tpath = f"{path}.sc[{t}]"
        _expect(isinstance(triple, list) and len(triple) == 5, tpath, "expected [i, j, k, num, den]")
        i, j, k = triple[0], triple[1], triple[2]
        for v, nm in ((i, "i"), (j, "j"), (k, "k")):
            _expect(isinstance(v, int) and 1 <= v <= dim, f"{tpath}.{nm}", f"index out of range 1..{dim}")
        _expect(i < j, tpath, "structure constants must have i < j")
        num = _decimal_string(triple[3], f"{tpath}.num")
        den = _decimal_string(triple[4], f"{tpath}.den")
        _expect(den > 0, f"{tpath}.den", "denominator must be positive")
        _expect(gcd(abs(num), den) == 1, tpath, "coefficient is not in lowest terms")
        _expect(num != 0, tpath, "zero coefficients must be omitted")
        entry = brackets.setdefault((i - 1, j - 1), {})
        _expect(k - 1 not in entry, tpath, f"duplicate entry for ({i}, {j}, {k})")
        entry[k - 1] = Fraction(num, den)
    try:
        g = LieAlgebra(name, labels, brackets)
        g.validate()
    except ValueError as exc:
        raise SchemaError(f"{path}: {exc}") from None
    return g


# -- alternating forms -------------------------------------------------------


def form_to_json(w: AlternatingForm) -> dict:
    terms = []
    for idx, c in w.items():
        terms.append(
            {"idx": [i + 1 for i in idx], "num": str(c.numerator), "den": str(c.denominator)}
        )
    return {"dim": w.ambient_dim, "degree": w.degree, "terms": terms}


def form_from_json(obj: Any, path: str = "$") -> AlternatingForm:
    dim = _int_field(obj, "dim", path)
    degree = _int_field(obj, "degree", path)
    _expect(dim >= 0, f"{path}.dim", "dimension must be nonnegative")
    _expect(degree >= 0, f"{path}.degree", "degree must be nonnegative")
    raw = _get(obj, "terms", path)
    _expect(isinstance(raw, list), f"{path}.terms", "expected a list")
    terms: dict = {}
    previous = None
    for t, item in enumerate(raw):
        tpath = f"{path}.terms[{t}]"
        idx = _get(item, "idx", tpath)
        _expect(
            isinstance(idx, list) and all(isinstance(v, int) for v in idx),
            f"{tpath}.idx",
            "expected a list of integers",
        )
        _expect(len(idx) == degree, f"{tpath}.idx", f"expected degree {degree}")
        _expect(
            all(1 <= v <= dim for v in idx), f"{tpath}.idx", f"indices out of range 1..{dim}"
        )
        _expect(
            all(a < b for a, b in zip(idx, idx[1:])),
            f"{tpath}.idx",
            "indices must be strictly increasing",
        )
        key = tuple(v - 1 for v in idx)
        _expect(previous is None or previous < key, f"{tpath}.idx", "terms must be in lexicographic order")
        previous = key
        num = _decimal_string(_get(item, "num", tpath), f"{tpath}.num")
        den = _decimal_string(_get(item, "den", tpath), f"{tpath}.den")
        _expect(den > 0, f"{tpath}.den", "denominator must be positive")
        _expect(gcd(abs(num), den) == 1, tpath, "coefficient is not in lowest terms")
        _expect(num != 0, tpath, "zero coefficients must be omitted")
        terms[key] = Fraction(num, den)
    return AlternatingForm(dim, degree, terms)


def forms_to_json(forms: list[AlternatingForm]) -> list:
    return [form_to_json(w) for w in forms]


def forms_from_json(obj: Any, path: str = "$") -> list[AlternatingForm]:
    _expect(isinstance(obj, list), path, "expected a list of forms")
    return [form_from_json(item, f"{path}[{t}]") for t, item in enumerate(obj)]


# -- subspaces ---------------------------------------------------------------


def subspace_to_json(s: Subspace) -> dict:
    return {
        "ambient_dim": s.ambient_dim,
        "basis": [[rational_to_json(x) for x in row] for row in s.basis],
    }


def subspace_from_json(obj: Any, path: str = "$") -> Subspace:
    ambient = _int_field(obj, "ambient_dim", path)
    _expect(ambient >= 0, f"{path}.ambient_dim", "must be nonnegative")
    raw = _get(obj, "basis", path)
    _expect(isinstance(raw, list), f"{path}.basis", "expected a list of rows")
    rows = []
    for r, row in enumerate(raw):
        rpath = f"{path}.basis[{r}]"
        _expect(isinstance(row, list) and len(row) == ambient, rpath, f"expected {ambient} entries")
        rows.append(tuple(rational_from_json(x, f"{rpath}[{c}]") for c, x in enumerate(row)))
    candidate = Subspace(ambient, tuple(rows))
    canonical = Subspace.from_vectors(rows, ambient) if rows else Subspace.zero(ambient)
    _expect(candidate == canonical, f"{path}.basis", "basis is not in reduced row-echelon form")
    return candidate


# -- verification reports ----------------------------------------------------


def report_to_json(report: VerificationReport) -> dict:
    return {
        "algebra": report.algebra,
        "degree": report.degree,
        "seed": report.seed,
        "dim_invariant_forms": report.dim_invariant_forms,
        "vacuous": report.vacuous,
        "forms": [
            {
                "label": r.label,
                "stabilizer_dim": r.stabilizer_dim,
                "contains_ad": r.contains_ad,
                "equals_ad": r.equals_ad,
                "stab_semisimple": r.stab_semisimple,
                "stab_center_dim": r.stab_center_dim,
                "commutant_dim": r.commutant_dim,
                "trace_zero": r.trace_zero,
            }
            for r in report.forms
        ],
        "m_group": {
            "centralizer_dim": report.m_group.centralizer_dim,
            "order": report.m_group.order,
            "generator_description": report.m_group.generator_description,
        },
        "overall_pass": report.overall_pass,
    }


def report_from_json(obj: Any, path: str = "$") -> VerificationReport:
    raw_forms = _get(obj, "forms", path)
    _expect(isinstance(raw_forms, list), f"{path}.forms", "expected a list")
    records = []
    for t, item in enumerate(raw_forms):
        fpath = f"{path}.forms[{t}]"
        records.append(
            FormStabilizerRecord(
                label=_str_field(item, "label", fpath),
                stabilizer_dim=_int_field(item, "stabilizer_dim", fpath),
                contains_ad=_bool_field(item, "contains_ad", fpath),
                equals_ad=_bool_field(item, "equals_ad", fpath),
                stab_semisimple=_bool_field(item, "stab_semisimple", fpath),
                stab_center_dim=_int_field(item, "stab_center_dim", fpath),
                commutant_dim=_int_field(item, "commutant_dim", fpath),
                trace_zero=_bool_field(item, "trace_zero", fpath),
            )
        )
    raw_m = _get(obj, "m_group", path)
    m_rec = ScalarGroupRecord(
        centralizer_dim=_int_field(raw_m, "centralizer_dim", f"{path}.m_group"),
        order=_int_field(raw_m, "order", f"{path}.m_group"),
        generator_description=_str_field(raw_m, "generator_description", f"{path}.m_group"),
    )
    return VerificationReport(
        algebra=_str_field(obj, "algebra", path),
        degree=_int_field(obj, "degree", path),
        seed=_int_field(obj, "seed", path),
        dim_invariant_forms=_int_field(obj, "dim_invariant_forms", path),
        vacuous=_bool_field(obj, "vacuous", path),
        forms=tuple(records),
        m_group=m_rec,
        overall_pass=_bool_field(obj, "overall_pass", path),
    )
