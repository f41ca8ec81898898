"""Classification of quasi-smooth log del Pezzo hypersurfaces in weighted P^3.

Exact-arithmetic enumeration by Fano index, arithmetic Kähler-Einstein
certificates, Milnor-Orlik link topology, and moduli dimensions, with the
published classification tables embedded for regression.
"""

from .errors import (
    CatalogIntegrityError,
    InvariantViolation,
    NonPrimitiveWeights,
    PreconditionError,
)
from .klt import (
    Certified,
    KltLocalQuery,
    KltVerdict,
    NotKltGate,
    Unknown,
    certify_KE,
    gate_check,
    klt_local_bound,
    line_23_free,
    vertex_3_free,
)
from .moduli import (
    ModuliReport,
    aut_dimension,
    is_minimal_torus,
    moduli_dimension,
    moduli_report,
    monomial_dimension,
)
from .quasismooth import (
    ConditionIWitness,
    condition_I,
    condition_II,
    condition_III,
    is_quasismooth,
)
from .records import CandidateRecord, build_record
from .search import (
    BranchAssignment,
    SolutionSpace,
    brute_force_enumerate,
    witness_branches,
    match_series,
    solve_condition_system,
    structured_enumerate,
)
from .topology import (
    LinkReport,
    VirtualCharacter,
    char_mul,
    characteristic_divisor,
    diffeo_type,
    milnor_number,
    orbifold_b2,
    second_betti_link,
)
from .weights import (
    Candidate,
    ExponentVector,
    WeightSystem,
    count_monomials,
    fano_index,
    is_well_formed,
    monomials_of_degree,
    normalize_weights,
)

__version__ = "0.1.0"
