"""ultrachain: exact arithmetic for ultrametric norm inequality chains.

Valued-field backends (p-adic, trivial, t-adic Laurent, rational baseline),
weighted sup-norm spaces, exact evaluation of the Tarski scalar identity,
the Maligranda chains, their non-Archimedean counterparts with the 2/|2|
coefficient, and a deterministic explorer that scans grids and random
samples for violations and tightness witnesses.  All arithmetic is over
``fractions.Fraction`` or Laurent polynomials -- no floating point anywhere.
"""

from .chains import (
    collapse_check,
    maligranda_chain1,
    maligranda_chain2,
    na_chain1,
    na_chain2,
    norm_quadruple,
    proof_step_identities,
    tarski_complex_fails,
    tarski_complex_probe,
    tarski_equality_chain,
    tarski_gap,
    tarski_min_bound,
)
from .errors import (
    CharacteristicTwo,
    DomainMismatch,
    GridTooLarge,
    NonPrimeModulus,
    NotUnitTwo,
    SpecMismatch,
    UltrachainError,
)
from .explorer import (
    GenConfig,
    ScanReport,
    Violation,
    find_tight,
    generate,
    scalar_grid,
    scan,
)
from .fields import (
    INFINITY,
    FieldBackend,
    PadicField,
    RationalField,
    TadicField,
    TrivialField,
    abs_value,
    check_valuation_axioms,
    is_prime,
    padic_valuation,
    parse_field,
    two_magnitude,
)
from .laurent import LaurentPoly
from .reports import ChainReport, CollapseReport, StepReport, dumps
from .spaces import (
    NormSpec,
    Vector,
    add,
    check_norm_axioms,
    norm,
    parse_norm,
    parse_vector,
    scale,
    sub,
    vector,
    zero_vector,
)

__version__ = "0.1.0"

__all__ = [
    "CharacteristicTwo",
    "ChainReport",
    "CollapseReport",
    "DomainMismatch",
    "FieldBackend",
    "GenConfig",
    "GridTooLarge",
    "INFINITY",
    "LaurentPoly",
    "NonPrimeModulus",
    "NormSpec",
    "NotUnitTwo",
    "PadicField",
    "RationalField",
    "ScanReport",
    "SpecMismatch",
    "StepReport",
    "TadicField",
    "TrivialField",
    "UltrachainError",
    "Vector",
    "Violation",
    "abs_value",
    "add",
    "check_norm_axioms",
    "check_valuation_axioms",
    "collapse_check",
    "dumps",
    "find_tight",
    "generate",
    "is_prime",
    "maligranda_chain1",
    "maligranda_chain2",
    "na_chain1",
    "na_chain2",
    "norm",
    "norm_quadruple",
    "padic_valuation",
    "parse_field",
    "parse_norm",
    "parse_vector",
    "proof_step_identities",
    "scalar_grid",
    "scale",
    "scan",
    "sub",
    "tarski_complex_fails",
    "tarski_complex_probe",
    "tarski_equality_chain",
    "tarski_gap",
    "tarski_min_bound",
    "two_magnitude",
    "vector",
    "zero_vector",
    "__version__",
]
