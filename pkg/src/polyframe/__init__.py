"""Frames built from convex polytopes and numerical checks of polytope inequalities."""

__version__ = "0.1.0"

from .builders import (
    AugmentedEdgeSet,
    augmented_edge_frame,
    centroid_frame,
    edge_frame,
    facet_normals,
    normal_frames,
    normal_simplex,
    vertex_frame,
)
from .errors import *  # noqa: F401,F403
from .frames import (
    Frame,
    FrameOperatorSummary,
    cauchy_binet,
    frame_operator,
    is_tight,
    jacobi_eigh,
    subset_determinants,
    tightness_deviation,
    trace_det_gap,
)
from .geometry import (
    Family,
    InscribedPolytope,
    make_polytope,
    make_regular_simplex,
    norm,
    partition,
    volume_vector,
)
from .inequalities import (
    BIPYR_Z,
    QUAD_Z,
    InequalityId,
    InequalityReport,
    ZForm,
    evaluate,
    run_suite,
    z_form,
    z_spectral_properties,
)
from .oracles import cayley_constant, conjecture_constant, spanning_tree_count
from .search import (
    CampaignResult,
    SearchResult,
    falsification_campaign,
    sample_polytope,
    tightness_search,
    verify_known_tight_configs,
)
