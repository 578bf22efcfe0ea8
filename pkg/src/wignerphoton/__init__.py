"""Wigner little group for massless momenta and photon polarization states."""

from .errors import (
    BadAxis,
    BadDeterminant,
    BadPhase,
    DegenerateBranch,
    DegenerateMomentum,
    NotHermitian,
    NotNull,
    PipelineSyntaxError,
    ShapeViolation,
    SouthPoleSingularity,
    SuperluminalVelocity,
    WignerError,
    ZeroState,
)
from .little_group import (
    ABCCoefficients,
    LittleGroupElement,
    abc_coefficients,
    closed_form_little_group,
    standard_boost,
    transform_null_momentum,
    wigner_decompose,
    wigner_decompose_rotated_gauge,
    wigner_matrix,
    wigner_phase_of_direction,
)
from .minkowski import (
    FourVector,
    UnitDirection,
    apply_lorentz,
    direction_of,
    is_null,
    minkowski_dot,
    verify_lorentz,
)
from .photon_states import (
    HelicityAmplitudeField,
    PolarizedState,
    SpectralProfile,
    linear_polarization_density,
    monochromatic_state,
    reduced_density,
    state_field,
    transform_density,
    transform_field,
    transform_state,
    von_neumann_entropy,
)
from .pipeline import PipelineSpec, parse_pipeline
from .spinor_cover import (
    compose,
    four_vector_from_hermitian,
    hermitian_from_four_vector,
    lorentz_of_spinor,
    make_boost,
    make_rotation,
    spinor_act,
)

__version__ = "0.1.0"
