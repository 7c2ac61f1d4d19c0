"""haargap: exact entropy machinery for diagonal flows on SL_n quotients.

Root systems, Lyapunov spectra and entropy bounds in rational arithmetic;
enumeration of admissible ergodic-component supports; an exact linear program
bounding the Haar-component weight from below; and floating-point validation
of the almost-orthogonality and oscillatory-decay estimates behind the bounds.
"""

from .cotlar_stein import (
    TOLERANCES,
    CotlarCheck,
    MatrixFamily,
    OscillatoryDecay,
    OscillatoryProblem,
    cotlar_bound_check,
    operator_norm,
    orthogonal_projector_family,
    oscillatory_decay,
    run_validation_suite,
    smooth_bump,
)
from .entropy import (
    DispersiveQuery,
    FastSlowSplit,
    LyapunovSpectrum,
    component_entropy_cap,
    conjectured_entropy_bound,
    dispersive_exponent,
    entropy_lower_bound,
    fast_slow_split,
    haar_entropy,
    lyapunov_spectrum,
)
from .rigidity import (
    LPModel,
    LPSolution,
    RigidityProblem,
    VertexReport,
    build_lp,
    default_test_directions,
    extremal_vertex_report,
    extreme_direction,
    inner_weight_formula,
    min_haar_weight,
    rigidity_problem,
    solve_lp,
    solve_min_haar,
    verify_solution,
)
from .roots import (
    CartanElement,
    Root,
    RootSystem,
    build_type_a,
    cartan,
    dominant_representative,
    evaluate_root,
    is_regular,
    weyl_orbit,
)
from .supports import (
    CapacityError,
    SupportSet,
    closure_of,
    enumerate_block_partitions,
    enumerate_symmetric_closed,
    is_admissible,
    make_support,
)

__version__ = "0.1.0"
