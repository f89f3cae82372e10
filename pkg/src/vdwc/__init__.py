"""Lossless compression by repeated replacement of monochromatic arithmetic
progressions, with exact small van der Waerden numbers and the bounds the
compression lengths imply."""

from .bounds import (
    classical_bound,
    incompressibility_inequality,
    predicted_output_length,
    theorem_bound,
)
from .compressor import (
    CompressedArtifact,
    compress,
    compress_once,
    decompress,
    decompress_once,
    replace_progression,
    undo_replacement,
)
from .errors import (
    ClaimViolated,
    CorruptArtifact,
    InvalidCode,
    NoInitialProgression,
    QueueExhausted,
    TapeExhausted,
    VdwError,
)
from .oracle import brute_force_vdw, find_progression_free, verify_progression_free
from .progressions import (
    Progression,
    WindowParams,
    enumerate_aps,
    intersecting_aps,
    intersects,
    monochromatic_color,
    smallest_monochromatic_intersecting,
)
from .relcode import decode_relative, encode_relative

__version__ = "0.1.0"
