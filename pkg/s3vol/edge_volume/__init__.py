"""Edge length formula stack: ã, z̃0, L̃, ∂Re L̃/∂l and the volume."""

from s3vol.edge_volume.params import L_tilde, TildeParams, dReL_dl, tilde_params
from s3vol.edge_volume.theorem import volume_from_lengths, volume_via_dual
