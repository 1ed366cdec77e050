"""Shift-equivariant sparse binary hypervector encoding of symbol sequences."""

from .encoding import (
    CountHV,
    Encoder,
    EncoderConfig,
    HVIndex,
    ItemMemory,
    Permutation,
    SparseHV,
    apply_perm_power,
    atomic_hv,
    encode_sequence,
    encode_string,
    gen_permutation,
    shift_hv,
    symbol_hv,
)
from .kernels import BACKEND
from .similarity import SimType, overlap, shift_set, sim, sim_shiftmax
from .symbolic import (
    PositionedString,
    hamming_and_shift,
    levenshtein,
    sim_sym,
    sim_sym_shiftmax,
    symov,
    symov_scaled,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CountHV",
    "Encoder",
    "EncoderConfig",
    "HVIndex",
    "ItemMemory",
    "Permutation",
    "PositionedString",
    "SimType",
    "SparseHV",
    "apply_perm_power",
    "atomic_hv",
    "encode_sequence",
    "encode_string",
    "gen_permutation",
    "hamming_and_shift",
    "levenshtein",
    "overlap",
    "shift_hv",
    "shift_set",
    "sim",
    "sim_shiftmax",
    "sim_sym",
    "sim_sym_shiftmax",
    "symbol_hv",
    "symov",
    "symov_scaled",
]
