"""Bicomplex filled Julia sets."""

from ._bcjulia import (
    CLASS_NAMES,
    Bicomplex,
    BicomplexPoly,
    ConjKind,
    DegenerateError,
    DegreeError,
    Error,
    IoError,
    NullConeError,
    ParseError,
    classify,
    classify_slice,
    cli,
    compose,
    orbit_escapes,
    raymarch,
    read_ppm,
    read_voxels,
    slice_image,
    units,
    verify,
    write_ppm,
    write_voxels,
)

__all__ = [
    "CLASS_NAMES",
    "Bicomplex",
    "BicomplexPoly",
    "ConjKind",
    "DegenerateError",
    "DegreeError",
    "Error",
    "IoError",
    "NullConeError",
    "ParseError",
    "classify",
    "classify_slice",
    "cli",
    "compose",
    "orbit_escapes",
    "raymarch",
    "read_ppm",
    "read_voxels",
    "slice_image",
    "units",
    "verify",
    "write_ppm",
    "write_voxels",
]
