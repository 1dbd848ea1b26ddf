"""Distance-based ensemble bounds and accessible information for qubits.

The package evaluates, for several notions of state distinguishability, the
weighted average distance of ensemble members from the ensemble average, the
extremal divergence achievable by projective qubit measurements, and the
inequalities connecting the two; plus closed-form Bloch-sphere expressions,
fuzz harnesses for the bounding properties, and a CLI.
"""

from .cdivergence import (
    JointDistribution,
    bhattacharyya_c,
    d_of_joint,
    jsd_c,
    kolmogorov_c,
    make_joint,
    mutual_information,
    prob_error_c,
    relative_entropy_c,
)
from .ensemble import (
    Ensemble,
    EnsembleFormatError,
    dbhq,
    ensemble_from_json,
    ensemble_to_json,
    load_ensemble,
    make_ensemble,
    non_commutativity,
    purity,
    verify_property_f,
)
from .grid import backend_name, evaluate_axes
from .linalg import (
    Spectrum,
    as_density,
    eig,
    hs_norm,
    kron,
    mat_log2_on_support,
    mat_sqrt,
    trace_norm,
    von_neumann_entropy,
)
from .measurements import (
    GaiResult,
    OptimizerConfig,
    Povm,
    QubitVonNeumann,
    UnsupportedDimensionError,
    axis_from_s,
    check_theorem1,
    effects_from_axis,
    gai,
    joint_distribution,
    make_povm,
)
from .notions import ALL_NOTIONS, DistanceNotion
from .qdistance import (
    KrausChannel,
    apply_channel,
    bhattacharyya_q,
    bures_sq,
    check_dpi,
    hellinger_sq,
    qjsd,
    relative_entropy_q,
    trace_distance,
)
from .qubit import (
    DegenerateEnsembleError,
    b_joint_closed,
    binary_f,
    bloch_to_density,
    density_to_bloch,
    example_ensemble,
    hr_joint_closed,
    k_joint_closed,
    nc_closed,
    purity_closed,
    theorem2_axis,
    xb_closed,
    xk_closed,
    xsr_closed,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_NOTIONS",
    "DegenerateEnsembleError",
    "DistanceNotion",
    "Ensemble",
    "EnsembleFormatError",
    "GaiResult",
    "JointDistribution",
    "KrausChannel",
    "OptimizerConfig",
    "Povm",
    "QubitVonNeumann",
    "Spectrum",
    "UnsupportedDimensionError",
    "apply_channel",
    "as_density",
    "axis_from_s",
    "b_joint_closed",
    "backend_name",
    "bhattacharyya_c",
    "bhattacharyya_q",
    "binary_f",
    "bloch_to_density",
    "bures_sq",
    "check_dpi",
    "check_theorem1",
    "d_of_joint",
    "dbhq",
    "density_to_bloch",
    "eig",
    "effects_from_axis",
    "ensemble_from_json",
    "ensemble_to_json",
    "evaluate_axes",
    "example_ensemble",
    "gai",
    "hellinger_sq",
    "hr_joint_closed",
    "hs_norm",
    "joint_distribution",
    "jsd_c",
    "k_joint_closed",
    "kolmogorov_c",
    "kron",
    "load_ensemble",
    "make_ensemble",
    "make_joint",
    "make_povm",
    "mat_log2_on_support",
    "mat_sqrt",
    "mutual_information",
    "nc_closed",
    "non_commutativity",
    "prob_error_c",
    "purity",
    "purity_closed",
    "qjsd",
    "relative_entropy_c",
    "relative_entropy_q",
    "theorem2_axis",
    "trace_distance",
    "trace_norm",
    "verify_property_f",
    "von_neumann_entropy",
    "xb_closed",
    "xk_closed",
    "xsr_closed",
]
