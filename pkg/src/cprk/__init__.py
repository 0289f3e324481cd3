"""Exact circular k-partite crossing numbers of complete bipartite graphs."""

from .chords import CrossingCount, chords_cross, count_crossings
from .closed_forms import (
    RationalBound,
    binom,
    cpr4_exact,
    eq1_crossings,
    eq1_subtrahend,
    separated_black_pairs,
    theorem1_outerplanar,
    theorem2_lower_bound,
)
from .errors import (
    CountOverflowError,
    CprError,
    GraphParseError,
    InvalidInputError,
    InvalidProfileError,
    PreconditionError,
    ResourceLimitError,
)
from .model import (
    Arc,
    ArcProfile,
    CircularDrawing,
    Color,
    CompleteBipartiteSpec,
    GraphSpec,
    Vertex,
    canonical_profile,
    complete_bipartite_graph,
    profile_to_drawing,
)
from .optimizer import (
    CprResult,
    balanced_profiles,
    cpr_exact,
    enumerate_profiles,
    maximize_subtrahend,
)
from .oracle import OracleConfig, brute_force_cpr, brute_force_outerplanar

__version__ = "0.1.0"
