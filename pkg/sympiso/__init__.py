"""
`sympiso` compares quantum stabilizer codes through their classical images.

A stabilizer group S of Pauli operators on n qudits maps, by forgetting
phases, onto a self-orthogonal code C in R^2n for R = F_p or Z/dZ. Maps
between such codes that preserve the symplectic weight and form come in two
kinds: all symplectic isometries, and the monomial ones built from 2x2 blocks
and a slot permutation. Only the monomial ones lift to local Clifford
operators, and the gap between the two is where locally unitary but not
locally Clifford equivalent states can hide.

The Gist
---------------------------------------

    from sympiso import RingSpec, StabilizerCode, symp_group, rmon_sl_group

    F2 = RingSpec.prime_field(2)
    code = StabilizerCode.from_rows([[0, 1, 1, 1, 1, 0, 0, 0, 0, 0],
                                     [1, 0, 1, 0, 0, 0, 0, 0, 1, 1],
                                     [1, 0, 0, 0, 1, 0, 1, 1, 0, 0]], F2)
    symp_group(code).order      # 168
    rmon_sl_group(code).order   # 8

The quantum side works with exact matrices over cyclotomic fields:

    from sympiso import code_to_stabilizer, stabilizer_state_basis, lu_witness

    state = stabilizer_state_basis(code_to_stabilizer(self_dual_code))

Every exhaustive step refuses to enumerate more than `max_enum` candidates
(default 2**20, or the SYMPISO_MAX_ENUM environment variable) and can spread
its work over processes with a `ShardedSearch`.

Getting Started
---------------------------------------

The command line runs the built-in reference instances:

    sympiso reference
    sympiso reference --only symp-vs-mon

Contributing Guide
---------------------------------------

Work in a virtualenv with an editable install:

    pip install -e .[dev]
    ./test_local.sh
"""

from .algebra import Cyclotomic, RingSpec
from .matrix import Matrix
from .stabcode import StabilizerCode, concat_p_fold, dual, is_self_dual, is_self_orthogonal, min_distance, socle_lift
from .isometry import MonomialMap, rmon_group, rmon_sl_between, rmon_sl_group, symp_between, symp_group
from .pauli import PauliOperator, StabilizerGroup, code_to_stabilizer
from .quantum import clifford_lift_sl2, lcp_verify, lu_witness, rank_profile, stabilizer_state_basis
from .search import ShardedSearch
from .logger import BaseLogger

__version__ = "0.1.0"
