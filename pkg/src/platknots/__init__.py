"""Plat closures of braids: components, entropy, distance and double covers."""

from .braid import (
    BraidWord,
    Permutation,
    canonical_projection,
    format_braid,
    full_twist,
    garside_delta,
    parse_braid,
    parse_numeric,
    permutation_order,
)
from .cover import (
    CoverData,
    PunctureClass,
    arc_disk_test,
    burau_neg1,
    cover_data,
    disk_bound_test,
    h1_order,
    is_unknot_2bridge,
    lift_shadow_classes,
    symplectic_lift,
)
from .diagram import PlatDiagram, build_diagram, export_diagram, goeritz_determinant
from .dynamics import LamVector, NTReport, Verdict, act, entropy, is_periodic, is_trivial, nt_classify
from .errors import PlatError
from .family import (
    Exact,
    FamilyEntry,
    FamilyReport,
    LowerBoundTrack,
    distinctness_witnesses,
    generate_family,
    genus_lower_bound,
)
from .plat import (
    PlatComponentSummary,
    TwistGrid,
    fishnet_parse,
    is_highly_twisted,
    is_knot,
    jm_distance,
    knot_powers,
    plat_components,
    plat_graph,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
