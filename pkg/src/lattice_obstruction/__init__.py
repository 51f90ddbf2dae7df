"""Exact lattice search and Spin^c bookkeeping for the Donaldson-type
obstruction to semi-fillings of circle bundles over surfaces."""

from .constructors import (
    BlowupClass,
    CapData,
    NotCovered,
    admissible_degrees,
    blowup_lattice,
    cap_parameters,
    chain_lattice,
    ld_generators,
    ld_lattice,
    orthogonality_report,
    proper_transform_class,
    sublattice_from_classes,
)
from .lattice import (
    Definiteness,
    DefinitenessClass,
    DiagonalTarget,
    GramLattice,
    GramRepresentation,
    InvalidInputError,
    classify_definiteness,
    direct_sum,
    load_lattice,
    pairing,
    verify_representation,
)
from .pipeline import ObstructionReport, obstruct, theorem_range
from .search import (
    SearchCertificate,
    SearchOptions,
    canonical_form,
    enumerate_norm_vectors,
    find_representations,
    orbit_count,
    represents_into_some_diagonal,
)
from .spinc import (
    CircleBundle,
    DiskSpinc,
    FMultiple,
    OutOfDomainError,
    TorsionSpinc,
    c1_circle,
    c1_disk,
    contact_spinc,
    euler_class_xi,
    spin_structures_circle,
    spincform_check,
    vanishing_locus_pd,
)

__version__ = "0.1.0"
