"""Exact-arithmetic workbench for invariant almost-complex geometry.

The library computes with closed invariant data only — structure constants,
invariant forms, finite Fourier sums — over the Gaussian rationals and their
one-symbol function fields, so every result is exact and reproducible.
"""

__version__ = "0.1.0"

from .errors import InputError, RefusalError
from .scalars import PiParam, Scalar, SymScalar
from .forms import Form, MultiIndex
from .lie import (
    ACStructure,
    ComplexCoframe,
    LieACS,
    LieAlgebra,
    build_coframe,
    is_integrable,
    nijenhuis,
    structure_equations,
)
from .bundles import CanonicalPower, PseudoholStructure
from .hodge import (
    HermitianData,
    SectionContext,
    invariant_harmonic_space,
    serre_pairing_check,
)
from .models import abelian_model, kt_model, load_model_file
from .torus import (
    IntInterval,
    PlurigeneraProfile,
    kodaira_dimension,
    kt_irregularity,
    kt_plurigenus,
    kunneth,
    rr_plurigenus,
    t4_irregularity,
    t4_obstruction,
    t4_plurigenus,
)
from .g2 import (
    G2Element,
    cross_product,
    g2_algebra,
    s6_hodge_report,
    s6_model,
    s6_plurigenus,
    verify_bracket_table,
)

__all__ = [
    "ACStructure",
    "CanonicalPower",
    "ComplexCoframe",
    "Form",
    "G2Element",
    "HermitianData",
    "InputError",
    "IntInterval",
    "LieACS",
    "LieAlgebra",
    "MultiIndex",
    "PiParam",
    "PlurigeneraProfile",
    "PseudoholStructure",
    "RefusalError",
    "Scalar",
    "SectionContext",
    "SymScalar",
    "abelian_model",
    "build_coframe",
    "cross_product",
    "g2_algebra",
    "invariant_harmonic_space",
    "is_integrable",
    "kodaira_dimension",
    "kt_irregularity",
    "kt_model",
    "kt_plurigenus",
    "kunneth",
    "load_model_file",
    "nijenhuis",
    "rr_plurigenus",
    "s6_hodge_report",
    "s6_model",
    "s6_plurigenus",
    "serre_pairing_check",
    "structure_equations",
    "t4_irregularity",
    "t4_obstruction",
    "t4_plurigenus",
    "verify_bracket_table",
    "__version__",
]
