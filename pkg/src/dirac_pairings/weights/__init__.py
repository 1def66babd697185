"""Root data, Weyl groups and virtual characters of K and its spin double cover."""

from .characters import (
    VirtualCharacter,
    decompose,
    dimension,
    dual,
    expand,
    g_character,
    irr_character,
    is_k_dominant,
    pair,
    restrict_to_k,
    tensor,
)
from .lattice import Cover, LaurentElement, Weight
from .roots import (
    PRESETS,
    RootDatum,
    build_root_datum,
    datum_from_dict,
    datum_to_dict,
    load_root_datum,
)
from .weyl import (
    WeylGroupElement,
    WeylKind,
    dominant_conjugate,
    fundamental_weights,
    rho_vectors,
    stabilizer_order,
    weyl_group,
)

__all__ = [
    "PRESETS",
    "Cover",
    "LaurentElement",
    "RootDatum",
    "VirtualCharacter",
    "Weight",
    "WeylGroupElement",
    "WeylKind",
    "build_root_datum",
    "datum_from_dict",
    "datum_to_dict",
    "decompose",
    "dimension",
    "dominant_conjugate",
    "dual",
    "expand",
    "fundamental_weights",
    "g_character",
    "irr_character",
    "is_k_dominant",
    "load_root_datum",
    "pair",
    "restrict_to_k",
    "rho_vectors",
    "stabilizer_order",
    "tensor",
    "weyl_group",
]
