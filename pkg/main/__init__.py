from .commands import *

COMMANDS = {
    'normalize': cmd_normalize,
    'identity': cmd_identity,
    'eval': cmd_eval,
    'conj': cmd_conj,
    'norm': cmd_norm,
    'phi': cmd_phi,
    'psi': cmd_psi,
    'coord-table': cmd_coord_table,
    'gpi-gens': cmd_gpi_gens,
    'gpi-cert': cmd_gpi_cert,
    'gpi-verify': cmd_gpi_verify,
    'ideal': cmd_ideal,
    'member': cmd_member,
    'radical-verify': cmd_radical_verify,
    'vanish': cmd_vanish,
    'scan': cmd_scan,
    'algebra': cmd_algebra,
}

__all__ = ['COMMANDS']
