"""Exact-arithmetic toolkit for stabilizers of adjoint-invariant forms.

Split simple Lie algebras (A_n, B_n, C_n, D_n, G_2) are constructed with
rational structure constants; spaces of adjoint-invariant alternating forms
and the stabilizer subalgebras of those forms inside gl(g) are computed as
exact kernels.  Because every check is a kernel-dimension statement with
rational coefficients, results over the rationals transfer verbatim to any
field extension.

The headline computation, :func:`verify_stabilizer`, certifies for a given
algebra and degree l < dim(g) that every adjoint-invariant l-form has
stabilizer algebra exactly the image of ad, and that the only endomorphisms
commuting with all of ad(g) are the scalars (so the commuting l-th roots of
unity form a cyclic group of order l).
"""

from fractions import Fraction as Rational

from .exterior import (
    AlternatingForm,
    MultiIndex,
    action_matrix,
    all_monomials,
    evaluate,
    gl_action,
    monomial_equivalent,
    traceless_witness,
    wedge,
)
from .liealg import (
    BilinearForm,
    Endomorphism,
    LieAlgebra,
    ad_subalgebra,
    build,
    center_of_subalgebra,
    is_irreducible,
    is_semisimple,
    killing_form,
    structure_constants_in,
    supported,
)
from .linalg import (
    Matrix,
    Subspace,
    associative_closure,
    kernel,
    kernel_sparse,
    rank,
    rref,
)
from .stab import (
    CentralizerDimensionError,
    FormStabilizerRecord,
    ScalarGroupRecord,
    VerificationReport,
    cartan_three_form,
    centralizer_of_ad,
    commutant_in,
    invariant_forms,
    invariant_profile,
    scalar_group,
    stabilizer_algebra,
    verify_stabilizer,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "Matrix",
    "Subspace",
    "kernel",
    "kernel_sparse",
    "rank",
    "rref",
    "associative_closure",
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
    "MultiIndex",
    "AlternatingForm",
    "all_monomials",
    "wedge",
    "gl_action",
    "action_matrix",
    "monomial_equivalent",
    "traceless_witness",
    "evaluate",
    "invariant_forms",
    "invariant_profile",
    "cartan_three_form",
    "stabilizer_algebra",
    "centralizer_of_ad",
    "commutant_in",
    "scalar_group",
    "verify_stabilizer",
    "CentralizerDimensionError",
    "ScalarGroupRecord",
    "FormStabilizerRecord",
    "VerificationReport",
]
