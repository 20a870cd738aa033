"""Exact spectral transfer for standard pseudo-Riemannian locally symmetric spaces."""

from .catalog import TauParam, TransferCase, case_list, case_lookup, enumerate_fiber_types, make_tau
from .errors import (
    AmbiguousTransferError,
    ExternalDataError,
    NotInImageError,
    SchemaError,
    SpectralTransferError,
    TransferError,
    UnknownCaseError,
)
from .hcparam import EigenvalueParam, InfinitesimalCharacter, param_from_coords
from .qarith import GaussianRational, ParamVector, dot, gq
from .spectra import assemble_spectrum, load_disc_data
from .transfer import transfer_lambda, transfer_nu
from .weyl import OrbitClass, RootSystemType, canonical_representative, orbit_equal

__version__ = "0.1.0"
