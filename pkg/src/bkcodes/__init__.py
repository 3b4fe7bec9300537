"""Linear codes over B_k = F_{p^r}[v_1..v_k]/(v_i^2 = v_i, v_i v_j = v_j v_i)."""

__version__ = "0.1.0"

from .field import GF, base_weight, construct_field, field_inv, field_mul  # noqa: E402
from .ring import (  # noqa: E402
    Ideal,
    Ring,
    RingElement,
    conjugate,
    gamma_coeff,
    gray_Phi,
    gray_phi,
    gray_phi_inv,
    ideal_collapse,
    ideal_dual,
    is_unit,
    make_ring,
    maximal_ideals,
    pi_project,
    ring_mul,
    theta_combine,
    theta_decompose,
)
from .codes import (  # noqa: E402
    Code,
    check_independence,
    code_components,
    code_enumerate,
    code_new,
    crt_combine,
    dual,
    gray_image,
    minimal_generating_set,
    rank_profile,
    self_dual_status,
)
from .weights import (  # noqa: E402
    char_matrix,
    cwe,
    hamming_we,
    lee_weight,
    macwilliams,
    swe,
    unit_classes,
)
from .bounds import min_distance, rank_identity_check, singleton_report  # noqa: E402
from .cyclic import (  # noqa: E402
    component_cyclic_check,
    cyclic_component_generators,
    is_quasi_cyclic,
    lift_generators,
    shift,
)
