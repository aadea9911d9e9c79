"""framekit: finite tight frames, integer lattices, cut-and-project sets,
and frame quantization of discrete observables."""

from framekit.backend import ACTIVE as active_backend
from framekit.frames import (
    Frame,
    NaimarkEmbedding,
    NormalizedFrame,
    StochasticProfile,
    analysis,
    complementary_frame,
    frame_bounds,
    frame_from_dict,
    frame_operator,
    frame_to_dict,
    from_projection,
    is_parseval,
    load_frame,
    naimark_embed,
    normalize,
    rescale_to_parseval,
    save_frame,
    stochastic_profile,
    synthesis,
    synthesis_matrix,
)
from framekit.groupframes import (
    OrbitFrame,
    OrthogonalRep,
    cyclic_rep,
    deform_frame,
    fibonacci_frame,
    icosahedral_rep,
    named_frame,
    orbit_frame,
    tetrahedral_rep,
)
from framekit.quantize import (
    QuantizationResult,
    classical_distance_bounds,
    cluster_frame,
    dft_frame,
    iterate_lower_symbol,
    quantize,
    simplex_frame,
    weyl_frame,
)

__version__ = "0.1.0"

__all__ = [
    "Frame",
    "NaimarkEmbedding",
    "NormalizedFrame",
    "OrbitFrame",
    "OrthogonalRep",
    "QuantizationResult",
    "StochasticProfile",
    "active_backend",
    "analysis",
    "classical_distance_bounds",
    "cluster_frame",
    "complementary_frame",
    "cyclic_rep",
    "deform_frame",
    "dft_frame",
    "fibonacci_frame",
    "frame_bounds",
    "frame_from_dict",
    "frame_operator",
    "frame_to_dict",
    "from_projection",
    "icosahedral_rep",
    "is_parseval",
    "iterate_lower_symbol",
    "load_frame",
    "naimark_embed",
    "named_frame",
    "normalize",
    "orbit_frame",
    "quantize",
    "rescale_to_parseval",
    "save_frame",
    "simplex_frame",
    "stochastic_profile",
    "synthesis",
    "synthesis_matrix",
    "tetrahedral_rep",
    "weyl_frame",
]
