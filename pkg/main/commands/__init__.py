from .algebra import cmd_algebra
from .identity import cmd_coord_table, cmd_gpi_cert, cmd_gpi_gens, cmd_gpi_verify, cmd_identity
from .ideal import cmd_ideal, cmd_member, cmd_radical_verify, cmd_scan, cmd_vanish
from .transform import cmd_conj, cmd_eval, cmd_norm, cmd_normalize, cmd_phi, cmd_psi

__all__ = [
    'cmd_algebra', 'cmd_coord_table', 'cmd_gpi_cert', 'cmd_gpi_gens', 'cmd_gpi_verify',
    'cmd_identity', 'cmd_ideal', 'cmd_member', 'cmd_radical_verify', 'cmd_scan', 'cmd_vanish',
    'cmd_conj', 'cmd_eval', 'cmd_norm', 'cmd_normalize', 'cmd_phi', 'cmd_psi',
]
