"""
Galois scaffolds and semistable witnesses for elementary abelian
Artin-Schreier extensions of F_q((t)).
"""

__version__ = "0.1.0"

from .digits import DigitSystem, afun, bfun, digits, lucas_preceq, preceq, rfun
from .errors import (
    DiagonalShapeViolation,
    HypothesisViolation,
    ImportedFactViolation,
    InsufficientPrecision,
    NotAScaffold,
    NotIntegral,
    NotNilpotent,
    PreconditionError,
    ScaffoldKitError,
    SpecError,
)
from .fq import GF, FiniteField, FqElem
from .groupalg import GroupAlgebraElem
from .series import INF, TruncatedSeries, Valuation
from .tower import (
    ArtinSchreierExtension,
    ExtElement,
    ExtensionSpec,
    LambdaFamily,
    RamificationData,
    build_extension,
    lambda_family,
)
from .diagram import (
    Coset,
    Diagram,
    TensorElem,
    Verdict,
    big_D_member,
    big_G,
    coset,
    coset_complement_rule,
    coset_le,
    f_xi,
    is_semistable_witness,
    is_stable_witness,
    normalize_witness,
    phi_forward,
    phi_inverse_oracle,
)
from .scaffold import (
    Scaffold,
    ScaffoldReport,
    breaks_congruence,
    build_from_Phi,
    build_from_semistable,
    certify,
    charp_promotion,
    criterion_c_falsifier,
    monomial,
    psis_check,
    semistable_from_scaffold,
    sigma_minus_one_scaffold,
    stability_threshold,
    verify_scaffold,
)
