"""Fold kinematics, actuation and tactile-feedback simulation toolkit."""

from .actuation import (
    ActuationCommand,
    ActuatorConfig,
    DEFAULT_CALIBRATION,
    actuation_time,
    cable_displacement,
    power_draw,
    servo_for_theta,
    theta_from_servo,
)
from .config import (
    SystemConfig,
    config_to_dict,
    default_config,
    load_config,
    parse_config,
    serialize_config,
)
from .errors import (
    ClampWarning,
    ConfigError,
    DomainError,
    InfeasibleError,
    OrifoldError,
    SingularityError,
)
from .export import (
    ReportData,
    write_crease_svg,
    write_mesh_obj,
    write_report,
    write_sweep_csv,
    write_testbed_csv,
)
from .forces import (
    EquilibriumResult,
    LoadCase,
    critical_theta,
    equilibrium_residuals,
    lateral_force_for_target,
    vertical_force,
)
from .geometry import (
    DimensionTable,
    Dimensions,
    FoldParams,
    FoldState,
    PROTOTYPE,
    SweepRow,
    dimensions,
    phi_from_theta,
    sweep,
    theta_from_height,
)
from .mesh import Mesh, folded_mesh
from .pattern import CreasePattern, crease_pattern
from .testbed import (
    ContactLocation,
    ContactMap,
    DEFAULT_CONTACT_LOCATIONS,
    DEFAULT_THICKNESS_OFFSET_MM,
    INTENSITY_LEVELS,
    TestbedConfig,
    height_report,
    intensity_schedule,
    simulate_testbed,
)

__version__ = "0.1.0"
