"""Character numerators on the compact Cartan and the elliptic pairing."""

from .numerators import (
    CharacterNumerator,
    EllipticPairingValue,
    EllipticReport,
    ds_numerator,
    elliptic_pairing,
    verify_dirac_equals_elliptic,
)

__all__ = [
    "CharacterNumerator",
    "EllipticPairingValue",
    "EllipticReport",
    "ds_numerator",
    "elliptic_pairing",
    "verify_dirac_equals_elliptic",
]
