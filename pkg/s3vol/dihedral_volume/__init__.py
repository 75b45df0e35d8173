"""Dihedral angle formula stack: q, z0, L, Δ, U, V and the volume."""

from s3vol.dihedral_volume.derivatives import (
    a_dDelta_da,
    a_dL_da,
    dU_dtheta,
    eqz_rational,
    phi,
    psi,
    z_dL_dz,
)
from s3vol.dihedral_volume.formulas import (
    L_eval,
    U_eval,
    V_eval,
    delta0,
    delta_eval,
    delta_real_closed_form,
    q_coefficients,
    z_aux,
)
from s3vol.dihedral_volume.models import QCoefficients, VolumeResult
from s3vol.dihedral_volume.theorem import (
    PI_SQUARED,
    TWO_PI_SQUARED,
    arg_neg_q2,
    reduce_volume,
    volume_from_angles,
)
