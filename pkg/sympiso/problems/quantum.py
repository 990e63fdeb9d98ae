import time
from typing import Optional

from sympiso.isometry import rmon_sl_between, symp_between
from sympiso.logger import RunReport
from sympiso.matrix import Matrix
from sympiso.pauli import StabilizerGroup, code_to_stabilizer, permute_pauli
from sympiso.problems import fixtures
from sympiso.problems.problem import Problem
from sympiso.quantum import (NOT_LU_EQUIVALENT, StateBasis, format_bipartition, is_root_of_unity, lcp_verify,
                             lu_witness, rank_profile, stabilizer_state_basis)
from sympiso.search import ShardedSearch
from sympiso.stabcode import is_self_dual


def _state_is(basis: StateBasis, expected) -> bool:
    reference = StateBasis.from_vector(expected, basis.n, basis.d, basis.conductor)
    return basis.dimension == 1 and basis.vector() == reference.vector()


class LcpThreeQubit(Problem):
    """Two three-qubit stabilizer states related by a local Clifford and a cyclic slot permutation."""
    name = 'lcp-three-qubit'
    label = 'Ex-Ex11'
    description = "an SL_2-monomial map lifts to a local Clifford U with S' = U sigma(S) U^dagger"

    def run(self, max_enum: Optional[int] = None, search: Optional[ShardedSearch] = None) -> RunReport:
        start = time.perf_counter()
        report = self.report()
        code = fixtures.code(fixtures.LCP_G, 'C')
        image = fixtures.code(fixtures.LCP_G_IMAGE, "C'")
        monomial = fixtures.lcp_map()
        source, target = code_to_stabilizer(code), code_to_stabilizer(image)
        permuted = StabilizerGroup([permute_pauli(monomial.perm, g) for g in source], n=code.n, spec=code.spec)
        report.check('stabilizer of C', source.strings() == fixtures.LCP_STABILIZER, f"{source}")
        report.check("stabilizer of C'", target.strings() == fixtures.LCP_STABILIZER_IMAGE, f"{target}")
        report.check('state of C', _state_is(stabilizer_state_basis(source, max_enum), fixtures.LCP_STATE))
        report.check('state of sigma(C)',
                     _state_is(stabilizer_state_basis(permuted, max_enum), fixtures.LCP_PERMUTED_STATE))
        report.check("state of C'", _state_is(stabilizer_state_basis(target, max_enum),
                                              fixtures.gaussian(fixtures.LCP_STATE_IMAGE)))
        outcome = lcp_verify(code, image, monomial, max_enum=max_enum)
        report.check("map sends C onto C'", outcome.mapped)
        report.check("local Clifford conjugates S onto S' exactly", outcome.exact)
        report.check('states agree', outcome.states_match)
        report.check('scalar (1+i)/2 up to a global phase',
                     outcome.ratio is not None and outcome.ratio_scale_exp == 0 and
                     is_root_of_unity(outcome.ratio / fixtures.lcp_ratio()), f"{outcome.ratio!r}")
        report.results = outcome.to_json()
        report.seconds = time.perf_counter() - start
        return report


class NotLuFourQubit(Problem):
    """Symplectically equivalent self-dual codes whose states are not even LU equivalent."""
    name = 'not-lu-four-qubit'
    label = 'Ex-LCP'
    description = 'no SL_2-monomial map between the codes, and a rank 4 versus rank 2 reshaping of the states'

    def run(self, max_enum: Optional[int] = None, search: Optional[ShardedSearch] = None) -> RunReport:
        start = time.perf_counter()
        report = self.report()
        code = fixtures.code(fixtures.NOT_LU_G, 'C')
        image = fixtures.code(fixtures.NOT_LU_G_IMAGE, "C'")
        report.check('both self-dual', is_self_dual(code) and is_self_dual(image))
        identity = Matrix.identity(code.k, code.spec)
        symplectic = symp_between(code, image, max_enum=max_enum, search=search)
        report.check('row map is a symplectic isometry', any(w.B == identity for w in symplectic))
        monomial = rmon_sl_between(code, image, max_enum=max_enum, search=search)
        report.check('no monomial map', not monomial)
        source, target = code_to_stabilizer(code), code_to_stabilizer(image)
        report.check('stabilizer of C', source.strings() == fixtures.NOT_LU_STABILIZER, f"{source}")
        report.check("stabilizer of C'", target.strings() == fixtures.NOT_LU_STABILIZER_IMAGE, f"{target}")
        state = stabilizer_state_basis(source, max_enum)
        state_image = stabilizer_state_basis(target, max_enum)
        report.check('state of C', _state_is(state, fixtures.NOT_LU_STATE))
        report.check("state of C'", _state_is(state_image, fixtures.NOT_LU_STATE_IMAGE))
        verdict = lu_witness(state, state_image)
        report.check('not LU equivalent', verdict.verdict == NOT_LU_EQUIVALENT, str(verdict))
        report.check('witness cut and ranks',
                     verdict.bipartition == fixtures.NOT_LU_CUT and verdict.ranks == fixtures.NOT_LU_RANKS)
        report.results = {
            'symplectic_maps': len(symplectic),
            'monomial_maps': len(monomial),
            'verdict': verdict.to_json(),
            'profile': {format_bipartition(cut): rank for cut, rank in rank_profile(state).items()},
            'profile_image': {format_bipartition(cut): rank for cut, rank in rank_profile(state_image).items()},
        }
        report.seconds = time.perf_counter() - start
        return report
