"""Constructions and verification of mutually unbiased bases in small dimensions."""
from .errors import ContractError, DimensionError, UnsupportedDimension
from .galois import FieldElement, FieldSpec, galois_mub_set, quadratic_phase_basis, trace
from .hadamard import (
    PhaseVector,
    dephase,
    fourier,
    hadamard2,
    hadamard4,
    is_complex_hadamard,
    phase_diag,
    phased_basis,
    qubit_triple,
)
from .linalg import hermitian_eigen, inner_product, is_unitary, tensor
from .mub import (
    Basis,
    MubSet,
    OverlapReport,
    certify,
    defect,
    is_unbiased_pair,
    overlap_table,
    standard_basis,
    verify_set,
)
from .pauli import commuting_classes, joint_eigenbasis, pauli_matrix, pauli_mub_set
from .search6 import (
    SearchConfig,
    SearchReport,
    check_candidate,
    fourier_family_basis,
    pair_defect,
    search_additional_basis,
    tensor_mub_triple,
)
from .weyl import weyl_eigenbasis, weyl_mub_set, weyl_x, weyl_z

__version__ = "0.1.0"
