"""
The `sympiso` command line. Every command builds a `RunReport`, prints it as
text or json and hands it to the logger chosen with --log/--verbose.

Exit codes: 0 when every check passed, 1 when a check or an internal
verification failed, 2 on malformed input, 3 when an enumeration cap was hit.
"""
import functools
import json
import time
from dataclasses import dataclass
from typing import List, Optional

import click

from sympiso import __version__
from sympiso.algebra import RingSpec
from sympiso.exceptions import EnumerationCapError, MalformedInputError, SympisoError, VerificationError
from sympiso.isometry import (Action, Flavor, closure, monomial_between, monomial_group, rmon_group, symp_between,
                              symp_group, verify_structure_theorem)
from sympiso.logger import BaseLogger, RunReport, SummaryLogger
from sympiso.matrix import Matrix
from sympiso.pauli import code_to_stabilizer, parse_pauli, pauli_commutes, pauli_mul, pauli_string
from sympiso.problems import EXAMPLE_LABELS, REFERENCE_PROBLEMS, find_problem
from sympiso.quantum import StateBasis, clifford_lift_sl2, lcp_verify, lu_witness, stabilizer_state_basis
from sympiso.search import ShardedSearch
from sympiso.serialization import CodeSerializer, format_code
from sympiso.stabcode import (StabilizerCode, concat_p_fold, dual, is_self_dual, is_self_orthogonal, min_distance,
                              socle_lift)

EXIT_FAILED = 1
EXIT_MALFORMED = 2
EXIT_CAP = 3


@dataclass
class Settings:
    max_enum: Optional[int]
    jobs: int
    fmt: str
    logger: Optional[BaseLogger]
    _search: Optional[ShardedSearch] = None

    @property
    def search(self) -> ShardedSearch:
        if self._search is None:
            self._search = ShardedSearch(concurrent_workers=self.jobs)
        return self._search

    def close(self):
        if self._search is not None:
            self._search.close()

    def emit(self, report: RunReport):
        if self.fmt == 'json':
            click.echo(report.dumps())
        else:
            click.echo(render_text(report))
        if self.logger is not None:
            self.logger.log(report)


def render_text(report: RunReport) -> str:
    lines = [f"{report.command} [{report.digest}]"]
    for key, value in report.results.items():
        if isinstance(value, str) and '\n' in value:
            lines.append(f"{key}:")
            lines.extend(f"  {line}" for line in value.rstrip('\n').split('\n'))
        elif isinstance(value, (dict, list)):
            lines.append(f"{key}: {json.dumps(value)}")
        else:
            lines.append(f"{key}: {value}")
    for check in report.checks:
        detail = f" ({check.detail})" if check.detail else ''
        lines.append(f"{'pass' if check.passed else 'FAIL'}  {check.name}{detail}")
    lines.append('pass' if report.passed else 'FAIL')
    return '\n'.join(lines)


def _fail(ctx: click.Context, error: Exception, code: int):
    click.echo(f"error: {error}", err=True)
    ctx.exit(code)


def reported(func):
    """Run a command body returning a RunReport; print it and map failures to exit codes."""
    @functools.wraps(func)
    @click.pass_context
    def wrapper(ctx: click.Context, *args, **kwargs):
        settings: Settings = ctx.obj
        start = time.perf_counter()
        try:
            report = func(settings, *args, **kwargs)
        except EnumerationCapError as error:
            return _fail(ctx, error, EXIT_CAP)
        except VerificationError as error:
            return _fail(ctx, error, EXIT_FAILED)
        except (SympisoError, OSError) as error:
            return _fail(ctx, error, EXIT_MALFORMED)
        report.seconds = time.perf_counter() - start
        settings.emit(report)
        if not report.passed:
            ctx.exit(EXIT_FAILED)
        return report
    return wrapper


def _read(path: str) -> str:
    with open(path, 'r') as file:
        return file.read()


def _load_code(path: str) -> StabilizerCode:
    code = CodeSerializer().load(path)
    if not isinstance(code, StabilizerCode):
        raise MalformedInputError(f"{path} does not hold a code")
    return code


@click.group()
@click.version_option(__version__, prog_name='sympiso')
@click.option('--max-enum', type=int, default=None, envvar='SYMPISO_MAX_ENUM',
              help='Largest search space any exhaustive step may enumerate.')
@click.option('--jobs', type=int, default=1, show_default=True, help='Worker processes for sharded searches.')
@click.option('--format', 'fmt', type=click.Choice(['text', 'json']), default='text', show_default=True)
@click.option('--log', 'log_file', type=click.Path(dir_okay=False), default=None, help='Append one line per check.')
@click.option('--verbose', is_flag=True, help='Also log a summary line per report to stdout.')
@click.pass_context
def cli(ctx: click.Context, max_enum, jobs, fmt, log_file, verbose):
    """Stabilizer codes, their symplectic isometries and local Clifford equivalence."""
    logger = None
    if log_file is not None:
        logger = BaseLogger(target=log_file, stdout=verbose)
    elif verbose:
        logger = SummaryLogger(stdout=True)
    ctx.obj = Settings(max_enum=max_enum, jobs=jobs, fmt=fmt, logger=logger)
    ctx.call_on_close(ctx.obj.close)


@cli.group()
def code():
    """Inspect and construct stabilizer codes."""


@code.command('check')
@click.argument('path', type=click.Path(dir_okay=False))
@reported
def code_check(settings: Settings, path):
    """Self-orthogonality, self-duality, dual generators and minimum distance."""
    source = _load_code(path)
    report = RunReport('code check', inputs=[_read(path)])
    orthogonal = is_self_orthogonal(source)
    report.results = {
        'ring': str(source.spec), 'n': source.n, 'k': source.k, 'size': source.size,
        'self_orthogonal': orthogonal,
        'self_dual': is_self_dual(source),
        'dual': format_code(dual(source)),
    }
    if orthogonal:
        report.results['min_distance'] = min_distance(source, max_enum=settings.max_enum)
    return report


@code.command('concat')
@click.argument('path', type=click.Path(dir_okay=False))
@click.option('--times', type=int, default=None, help='Number of copies; defaults to the characteristic.')
@click.option('--output', type=click.Path(dir_okay=False), default=None)
@reported
def code_concat(settings: Settings, path, times, output):
    """Pair-block repetition of a code."""
    result = concat_p_fold(_load_code(path), times=times)
    return _code_report('code concat', path, result, output)


@code.command('lift')
@click.argument('path', type=click.Path(dir_okay=False))
@click.option('--ring', 'ring', required=True, help='Target ring Z/p^e, e.g. Z/4.')
@click.option('--output', type=click.Path(dir_okay=False), default=None)
@reported
def code_lift(settings: Settings, path, ring, output):
    """Embed a code over F_p into the socle of Z/p^e."""
    result = socle_lift(_load_code(path), RingSpec.parse(ring))
    return _code_report('code lift', path, result, output)


def _code_report(command: str, path: str, result: StabilizerCode, output: Optional[str]) -> RunReport:
    report = RunReport(command, inputs=[_read(path)])
    if output is not None:
        CodeSerializer().dump(result, output)
    report.results = {'code': format_code(result), 'self_orthogonal': is_self_orthogonal(result)}
    return report


@cli.group()
def iso():
    """Isometry groups of codes and maps between codes."""


@iso.command('symp')
@click.argument('path', type=click.Path(dir_okay=False))
@click.option('--elements', is_flag=True, help='List every group element.')
@reported
def iso_symp(settings: Settings, path, elements):
    """Symp(C) inside GL_k."""
    group = symp_group(_load_code(path), max_enum=settings.max_enum, search=settings.search)
    report = RunReport('iso symp', inputs=[_read(path)])
    report.results = group.to_json(include_elements=elements)
    return report


@iso.command('mon')
@click.argument('path', type=click.Path(dir_okay=False))
@click.option('--flavor', type=click.Choice(['sl', 'gl']), default='sl', show_default=True)
@click.option('--elements', is_flag=True, help='List every group element.')
@reported
def iso_mon(settings: Settings, path, flavor, elements):
    """rMon_SL(C) or rMon(C), with the number of monomial maps behind them."""
    group, result = monomial_group(_load_code(path), Flavor(flavor), max_enum=settings.max_enum,
                                   search=settings.search)
    report = RunReport('iso mon', inputs=[_read(path)])
    report.results = {**group.to_json(include_elements=elements),
                      'monomial_maps': result.map_count, 'matrices': result.matrix_count}
    return report


@iso.command('between')
@click.argument('first', type=click.Path(dir_okay=False))
@click.argument('second', type=click.Path(dir_okay=False))
@click.option('--flavor', type=click.Choice(['sl', 'gl']), default='sl', show_default=True)
@reported
def iso_between(settings: Settings, first, second, flavor):
    """Symp(C, C') and the monomial maps from C onto C'."""
    source, target = _load_code(first), _load_code(second)
    symplectic = symp_between(source, target, max_enum=settings.max_enum, search=settings.search)
    monomial = monomial_between(source, target, Flavor(flavor), max_enum=settings.max_enum, search=settings.search)
    report = RunReport('iso between', inputs=[_read(first), _read(second)])
    report.results = {
        'symplectic': len(symplectic),
        'monomial_maps': monomial.map_count,
        'monomial_matrices': monomial.matrix_count,
        'witnesses': [w.to_json() for w in monomial.witnesses],
        'symplectically_equivalent': bool(symplectic),
        'monomially_equivalent': bool(monomial.maps),
    }
    return report


@iso.command('closure')
@click.argument('path', type=click.Path(dir_okay=False))
@click.option('--action', 'action', type=click.Choice(['O', 'O#']), default='O', show_default=True)
@click.option('--group', 'which', type=click.Choice(['symp', 'rmon']), default=None,
              help='Group to close; defaults to symp for O and rmon for O#.')
@reported
def iso_closure(settings: Settings, path, action, which):
    """Closure of Symp(C) or rMon(C) in GL_k under an orbit action."""
    source = _load_code(path)
    action = Action.parse(action)
    which = which or ('symp' if action is Action.POINTS else 'rmon')
    build = symp_group if which == 'symp' else rmon_group
    group = build(source, max_enum=settings.max_enum, search=settings.search)
    closed = closure(group, action, max_enum=settings.max_enum, search=settings.search)
    report = RunReport('iso closure', inputs=[_read(path), action.value, which])
    report.results = {'group': group.to_json(), 'closure': closed.to_json()}
    report.check(f'{which} group is closed under {action.value}', closed == group)
    return report


@iso.command('verify-structure')
@click.option('--n', 'n', type=int, required=True)
@click.option('--ring', 'ring', required=True)
@reported
def iso_verify_structure(settings: Settings, n, ring):
    """Symplectic isometries of R^2n are exactly the SL_2-monomial maps."""
    outcome = verify_structure_theorem(n, RingSpec.parse(ring), max_enum=settings.max_enum, search=settings.search)
    report = RunReport('iso verify-structure', inputs=[str(n), ring])
    report.results = outcome.to_json()
    report.check('isometries equal monomial maps', outcome.equal)
    return report


@cli.group()
def pauli():
    """Pauli operator arithmetic."""


@pauli.command('mul')
@click.argument('operators', nargs=-1, required=True)
@click.option('--ring', 'ring', default='Z/2', show_default=True)
@reported
def pauli_mul_command(settings: Settings, operators, ring):
    """Product of Pauli strings, left to right."""
    spec = RingSpec.parse(ring)
    parsed = [parse_pauli(text, spec) for text in operators]
    result = parsed[0]
    for p in parsed[1:]:
        result = pauli_mul(result, p)
    report = RunReport('pauli mul', inputs=list(operators))
    report.results = {'product': pauli_string(result)}
    return report


@pauli.command('commutes')
@click.argument('first')
@click.argument('second')
@click.option('--ring', 'ring', default='Z/2', show_default=True)
@reported
def pauli_commutes_command(settings: Settings, first, second, ring):
    spec = RingSpec.parse(ring)
    report = RunReport('pauli commutes', inputs=[first, second])
    report.results = {'commutes': pauli_commutes(parse_pauli(first, spec), parse_pauli(second, spec))}
    return report


@cli.group()
def stab():
    """Stabilizer groups."""


@stab.command('from-code')
@click.argument('path', type=click.Path(dir_okay=False))
@reported
def stab_from_code(settings: Settings, path):
    """The stabilizer group whose image is the code."""
    group = code_to_stabilizer(_load_code(path)).validate(settings.max_enum)
    report = RunReport('stab from-code', inputs=[_read(path)])
    report.results = {'generators': group.strings(), 'order': len(group.elements(settings.max_enum))}
    return report


@cli.group()
def quantum():
    """Stabilizer states, Clifford lifts and local equivalence."""


def _load_state(path: str, max_enum: Optional[int]) -> StateBasis:
    loaded = CodeSerializer().load(path)
    if isinstance(loaded, StabilizerCode):
        return stabilizer_state_basis(code_to_stabilizer(loaded), max_enum)
    return loaded


@quantum.command('state')
@click.argument('path', type=click.Path(dir_okay=False))
@click.option('--output', type=click.Path(dir_okay=False), default=None, help='Write the basis as json.')
@reported
def quantum_state(settings: Settings, path, output):
    """A basis of the code space of the code's stabilizer group."""
    basis = stabilizer_state_basis(code_to_stabilizer(_load_code(path)), settings.max_enum)
    if output is not None:
        CodeSerializer().dump(basis, output, method='json')
    report = RunReport('quantum state', inputs=[_read(path)])
    report.results = {'dimension': basis.dimension,
                      'vectors': [[repr(x) for x in column] for column in basis.columns]}
    return report


@quantum.command('lcp')
@click.argument('first', type=click.Path(dir_okay=False))
@click.argument('second', type=click.Path(dir_okay=False))
@click.option('--map', 'map_path', type=click.Path(dir_okay=False), required=True)
@reported
def quantum_lcp(settings: Settings, first, second, map_path):
    """Check that a monomial map lifts to a local Clifford equivalence."""
    source, target = _load_code(first), _load_code(second)
    monomial = CodeSerializer().load(map_path, spec=source.spec)
    outcome = lcp_verify(source, target, monomial, max_enum=settings.max_enum)
    report = RunReport('quantum lcp', inputs=[_read(first), _read(second), _read(map_path)])
    report.results = outcome.to_json()
    report.check('local Clifford equivalence', outcome.passed)
    return report


@quantum.command('lu-witness')
@click.argument('first', type=click.Path(dir_okay=False))
@click.argument('second', type=click.Path(dir_okay=False))
@reported
def quantum_lu_witness(settings: Settings, first, second):
    """Refute LU equivalence of two states (json state files or self-dual code files)."""
    verdict = lu_witness(_load_state(first, settings.max_enum), _load_state(second, settings.max_enum))
    report = RunReport('quantum lu-witness', inputs=[_read(first), _read(second)])
    report.results = {'verdict': str(verdict), **{f"witness_{k}": v for k, v in verdict.to_json().items()}}
    return report


@quantum.command('lift')
@click.option('--matrix', 'matrix', required=True, help='Entries a,b,c,d of M = [[a, b], [c, d]].')
@click.option('--d', 'd', type=int, default=2, show_default=True)
@reported
def quantum_lift(settings: Settings, matrix, d):
    """A single-qudit Clifford U with Psi(U P U^dagger) = Psi(P) M."""
    try:
        a, b, c, e = (int(x) for x in matrix.split(','))
    except ValueError:
        raise MalformedInputError(f"--matrix needs four comma separated integers, got {matrix!r}")
    spec = RingSpec.modular(d)
    unitary = clifford_lift_sl2(Matrix([[a, b], [c, e]], spec), spec)
    report = RunReport('quantum lift', inputs=[matrix, str(d)])
    report.results = {'scale': f"1/sqrt({d})^{unitary.scale_exp}",
                      'conductor': unitary.conductor,
                      'entries': [[repr(x) for x in row] for row in unitary.mat.entries]}
    return report


def _run_problems(settings: Settings, command: str, keys: List[str]) -> RunReport:
    report = RunReport(command, inputs=keys)
    for key in keys:
        outcome = find_problem(key).run(max_enum=settings.max_enum, search=settings.search)
        if settings.logger is not None:
            settings.logger.log(outcome)
        report.results[key] = {'passed': outcome.passed, 'results': outcome.results}
        for check in outcome.checks:
            report.check(f"{key}: {check.name}", check.passed, check.detail)
    return report


@cli.command('reference')
@click.option('--only', 'only', type=click.Choice(sorted(REFERENCE_PROBLEMS)), default=None)
@reported
def reference(settings: Settings, only):
    """Recompute every built-in reference instance against its known answers."""
    return _run_problems(settings, 'reference', [only] if only else list(REFERENCE_PROBLEMS))


@cli.group()
def paper():
    """Built-in instances under their published example labels."""


@paper.command('examples')
@click.option('--only', 'only', type=click.Choice(list(EXAMPLE_LABELS)), default=None)
@reported
def paper_examples(settings: Settings, only):
    """Run Ex-NonEx1, E-Ex2, Ex-Extension2, Ex-Ex11 and Ex-LCP end to end."""
    return _run_problems(settings, 'paper examples', [only] if only else list(EXAMPLE_LABELS))


def main():
    cli(prog_name='sympiso')
