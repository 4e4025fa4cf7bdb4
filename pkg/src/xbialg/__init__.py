"""Cross product bialgebras from Hopf data, with exact matrix arithmetic.

The package realizes Hopf data as fourteen concrete matrices over Q or
GF(p), checks their axioms line by line, builds the cross product
bialgebra on ``B1 (x) B2`` and goes back from a bialgebra with a
projection system to its datum.
"""
from .datum_io import DatumFormatError, dumps, load, loads, save
from .diagram_engine import (
    Braiding, BraidingError, Context, ExprSyntaxError, ExprTypeError, diagram, evaluate,
    parse_expr, pi_rotate, print_expr, relativize_codomain, relativize_domain, typecheck,
)
from .exact_linear import (
    GF, QQ, FieldSpec, Mor, NotIdempotentError, SignatureError, Word, compose, split_idempotent,
    tensor,
)
from .gallery import DECLARED_BOXES, EXAMPLES, example, random_datum
from .hopf_datum import (
    AxiomReport, HopfDatum, PreflightError, ReportLine, build_bialgebra, check_all,
    check_compatibilities, check_counital, check_factorization_axioms, check_naturality,
    check_strong, derived_morphisms, pi_dual,
)
from .proof_replay import ProofArtifacts, lemma_suite, replay_dressing
from .universal import (
    Algebra, Bialgebra, ClassificationBox, ProjectionSystem, alg_coalg_triv, canonical_projections,
    check_bialgebra, check_cocycle_projections, check_gamma, check_grid, check_projection_system,
    check_strong_projections, check_universal_property, classify, enumerate_boxes, extract_datum,
    from_gamma, gamma_form, multiplicativity_criteria, table_algebra,
)

__version__ = "0.1.0"
