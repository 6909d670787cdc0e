"""Braid signatures, handle-reduction word problem and certified bounds for
conjugation-invariant norms on the infinite braid group."""

from .braid import (
    BraidError,
    BraidWord,
    Permutation,
    commutator,
    conjugate,
    exponent_sum,
    free_reduce,
    shift,
    sigma,
    support,
    translator,
    underlying_permutation,
)
from .certificates import (
    CertificateError,
    CommutatorCertificate,
    ConjugatedLetterCertificate,
    DisplacementCertificate,
    NuWitness,
)
from .closure import SeifertMatrix, closure_components, seifert_matrix, split_blocks
from .norms import (
    DisplacementBraid,
    biinvariant_lower,
    biinvariant_upper,
    build_displacement_braid,
    cl_lower,
    cl_upper,
    extrB_transform,
    extrC_decompose,
    lemma_conj_factorization,
    nu_lower,
    nu_upper,
    welldef_rewrite,
)
from .quasi import (
    DefectReport,
    GrowthReport,
    defect,
    defect_experiment,
    random_braid,
    stable_growth,
    witness_search,
)
from .signature import link_signature, matrix_signature
from .textio import ParseError, parse_braid_word
from .wordproblem import BudgetExhausted, equals, handle_reduce, is_trivial

__version__ = "0.1.0"
