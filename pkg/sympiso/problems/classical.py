import time
from typing import Optional

from sympiso.algebra import RingSpec
from sympiso.isometry import (IsometrySubgroup, is_isometry_matrix, rmon_group, rmon_sl_between, rmon_sl_group,
                              symp_group)
from sympiso.logger import RunReport
from sympiso.matrix import GroupShape, Matrix, group_order
from sympiso.problems import fixtures
from sympiso.problems.problem import Problem
from sympiso.search import ShardedSearch
from sympiso.stabcode import (compatible_partners, concat_p_fold, dual, extension_weight_tables, is_self_orthogonal,
                              self_dual_extensions, socle_lift)


class NonMonomialIsometry(Problem):
    """Two generator matrices of one code whose row-to-row map is a symplectic isometry but not monomial."""
    name = 'non-monomial-isometry'
    label = 'Ex-NonEx1'
    description = 'row-to-row isometry between two generator matrices of one code with no SL_2-monomial witness'

    def run(self, max_enum: Optional[int] = None, search: Optional[ShardedSearch] = None) -> RunReport:
        start = time.perf_counter()
        report = self.report()
        first = fixtures.code(fixtures.NON_MONOMIAL_N1, 'im N1', interleaved=True)
        second = fixtures.code(fixtures.NON_MONOMIAL_N2, 'im N2', interleaved=True)
        identity = Matrix.identity(first.k, first.spec)
        report.check('same code', first == second)
        report.check('row map is a symplectic isometry', is_isometry_matrix(first, second, identity))
        witnesses = rmon_sl_between(first, second, max_enum=max_enum, search=search)
        report.check('row map has no monomial witness', all(w.B != identity for w in witnesses))
        report.results = {'codewords': first.size, 'monomial_witnesses': len(witnesses)}
        report.seconds = time.perf_counter() - start
        return report


class SympVsMon(Problem):
    """A five-qubit code whose symplectic group is all of GL_3(F_2) while its monomial group has order 8."""
    name = 'symp-vs-mon'
    label = 'E-Ex2'
    description = 'Symp(C) = GL_3(F_2) of order 168 against rMon_SL(C) of order 8'

    def __init__(self, with_constructions: bool = True):
        self.with_constructions = with_constructions

    def run(self, max_enum: Optional[int] = None, search: Optional[ShardedSearch] = None) -> RunReport:
        start = time.perf_counter()
        report = self.report()
        code = fixtures.code(fixtures.SYMP_VS_MON, 'C')
        symp = symp_group(code, max_enum=max_enum, search=search)
        rmon_sl = rmon_sl_group(code, max_enum=max_enum, search=search)
        report.check('self-orthogonal', is_self_orthogonal(code))
        report.check('Symp order', symp.order == fixtures.SYMP_VS_MON_SYMP_ORDER, f"{symp.order}")
        report.check('Symp is all of GL_3', symp.order == group_order(code.spec, GroupShape.GL, code.k))
        report.check('rMon_SL order', rmon_sl.order == fixtures.SYMP_VS_MON_RMON_SL_ORDER, f"{rmon_sl.order}")
        report.check('rMon_SL inside Symp', rmon_sl.issubset(symp))
        report.results = {'symp': symp.to_json(), 'rmon_sl': rmon_sl.to_json()}
        if self.with_constructions:
            self._constructions(report, code, symp, max_enum, search)
        report.seconds = time.perf_counter() - start
        return report

    @staticmethod
    def _constructions(report: RunReport, code, symp: IsometrySubgroup, max_enum, search):
        doubled = concat_p_fold(code)
        report.check('concatenation keeps Symp', symp_group(doubled, max_enum=max_enum, search=search) == symp)
        report.check('concatenation keeps rMon',
                     rmon_group(doubled, max_enum=max_enum, search=search) ==
                     rmon_group(code, max_enum=max_enum, search=search))
        lifted = socle_lift(code, RingSpec.modular(4))
        lifted_symp = symp_group(lifted, max_enum=max_enum, search=search)
        report.check('socle lift keeps Symp order', lifted_symp.order == fixtures.SYMP_VS_MON_SYMP_ORDER)


class ExtensionTables(Problem):
    """Self-dual extensions of a code and of its image under an isometry, compared through coset weights."""
    name = 'extension-tables'
    label = 'Ex-Extension2'
    description = 'three self-dual extensions on each side; only C_1 and its image share a weight distribution'

    def run(self, max_enum: Optional[int] = None, search: Optional[ShardedSearch] = None) -> RunReport:
        start = time.perf_counter()
        report = self.report()
        tables = []
        for label, generators, checks in (('C', fixtures.EXTENSION_G, fixtures.EXTENSION_H),
                                          ('f(C)', fixtures.EXTENSION_G_IMAGE, fixtures.EXTENSION_H_IMAGE)):
            code = fixtures.code(generators, label, interleaved=True)
            perp = fixtures.code(checks, f"{label}^perp", interleaved=True)
            report.check(f'dual of {label}', dual(code) == perp)
            h4, h5 = perp.generators.row(3), perp.generators.row(4)
            h45 = tuple((x + y) % 2 for x, y in zip(h4, h5))
            named = [code.extend(h) for h in (h4, h5, h45)]
            found = self_dual_extensions(code, max_enum=max_enum)
            report.check(f'three self-dual extensions of {label}',
                         len(found) == 3 and set(found) == set(named))
            side = [extension_weight_tables(code, extension) for extension in named]
            distributions = [tuple(sorted(w for table in t for w in table.weights)) for t in side]
            report.check(f'coset weights of {label}', distributions == fixtures.EXTENSION_DISTRIBUTIONS,
                         f"{distributions}")
            tables.append(side)
        partners = compatible_partners(tables[0], tables[1])
        report.check('first extension pairs only with first', partners[0] == [0], f"{partners}")
        report.results = {'partners': partners}
        report.seconds = time.perf_counter() - start
        return report
