"""orthoposet: finite posets, orthogonality-closed subsets, pseudocomplements,
and Boolean structure recognition.

Two elements of a poset with bottom are orthogonal when their only common
lower bound is the bottom.  This package computes the complete ortholattice
of subsets closed under that orthogonality, pseudocomplement tables and their
Glivenko skeletons, and decides the associated structure theorems (powerset
isomorphism for atomic meet-semilattices, Boolean closure lattices of
pseudocomplemented lattices, and the forbidden-configuration criterion for
skeletons of pseudocomplemented posets) on concrete finite instances.
"""

from .analysis import (
    FAIL,
    HYPOTHESIS_NOT_MET,
    PASS,
    AnalysisReport,
    CrossingPattern,
    ForbiddenConfig,
    IsoWitness,
    ProductCheck,
    analyze,
    atom_powerset_iso,
    distributivity_counterexample,
    find_crossing_pattern,
    find_forbidden_configuration,
    forbidden_config_holds,
    generate_posets,
    is_boolean,
    is_distributive,
    poset_isomorphic,
    product_closure_check,
    skeleton_closure_iso,
)
from .errors import (
    CycleDetectedError,
    DuplicateLabelError,
    NoBottomError,
    NotALatticeError,
    NotAtomicError,
    NotBoundedError,
    NotMeetSemilatticeError,
    OrthoposetError,
    PosetSyntaxError,
    SizeLimitError,
    SkeletonTooLargeError,
    UnknownFixtureError,
    UnknownLabelError,
)
from .fixtures import fixture, fixture_catalog, fixture_names
from .formats import (
    PosetDocument,
    document_digest,
    parse_poset,
    render_poset,
    report_document,
    report_json,
    to_dot,
)
from .ortho import (
    ClosedSetLattice,
    OrthoSpace,
    OrtholatticeReport,
    closure_lattice,
    ortho_from_meet,
    verify_ortholattice,
)
from .poset import (
    BoundsReport,
    ElementSet,
    Poset,
    bits,
    build_poset,
    carrier_cap,
    direct_product,
)
from .pseudo import (
    CompatibilityReport,
    GlivenkoAlgebra,
    InfStarCheck,
    PseudoStructure,
    pseudo_structure,
    pseudocomplement,
)

__version__ = "0.1.0"
