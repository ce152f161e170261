"""Exact dynamics, denominators, and counting for two-move riders."""

from .geometry import (
    Board,
    BoundaryLocation,
    Edge,
    InternalInvariantError,
    LocationKind,
    Move,
    NonConvexBoard,
    Point2,
    ZeroDenominator,
    ZeroMove,
    canonical_move,
    cross,
    format_point,
    format_rational,
    parse_point,
    parse_rational,
    point_denominator,
)
from .dynamics import (
    AugmentedTrajectory,
    NotOnBoundary,
    ParticleState,
    Trajectory,
    TrajectoryStatus,
    antipode,
    attack_map,
    augment,
    corner_trajectories,
    format_trajectory,
    other,
    parse_trajectory,
    trace,
)
from .arrangement import (
    CycleClassification,
    Hyperplane,
    HyperplaneSystem,
    NotCyclic,
    OutsideBoard,
    arrangement_of,
    classify_cycle,
    enumerate_rigid_cycles,
    independent_subsystem,
    matrix_rank,
    partition_into_trajectories,
    solve_square_system,
)
from .denominator import (
    Contribution,
    CrossingPoint,
    DenominatorReport,
    SlopeConditionViolated,
    VertexDecomposition,
    attractor_orbit,
    characterize_vertex,
    closed_form_inclined,
    closed_form_mirror,
    closed_form_orthogonal,
    crossing_points,
    denominator,
    inclined_crossing_point,
    vertex_oracle,
)
from .counting import (
    ConjectureReport,
    CountSeries,
    InsufficientData,
    QuasipolynomialFit,
    attack_masks,
    conjecture_report,
    count,
    count_pairs_formula,
    count_series,
    evaluate_fit,
    fit,
    minimal_period,
)
from .floatsim import FloatPath, simulate_float
from .svgrender import RenderPath, RenderSpec, render_svg
from .cli import (
    ParallelMoves,
    ParseError,
    ProblemConfig,
    parse_config,
    serialize_config,
)

__all__ = [name for name in dir() if not name.startswith("_")]
