from pytest import fixture

from sympiso.algebra import RingSpec
from sympiso.problems import fixtures
from sympiso.search import ShardedSearch
from sympiso.stabcode import StabilizerCode


@fixture(scope='module')
def f2():
    return RingSpec.prime_field(2)


@fixture(scope='module')
def f3():
    return RingSpec.prime_field(3)


@fixture(scope='module')
def z4():
    return RingSpec.modular(4)


@fixture(scope='module')
def symp_vs_mon_code():
    return fixtures.code(fixtures.SYMP_VS_MON, 'C')


@fixture(scope='module')
def lcp_code():
    return fixtures.code(fixtures.LCP_G, 'C')


@fixture(scope='module')
def lcp_image():
    return fixtures.code(fixtures.LCP_G_IMAGE, "C'")


@fixture(scope='module')
def not_lu_code():
    return fixtures.code(fixtures.NOT_LU_G, 'C')


@fixture(scope='module')
def not_lu_image():
    return fixtures.code(fixtures.NOT_LU_G_IMAGE, "C'")


@fixture(scope='module')
def extension_code():
    return fixtures.code(fixtures.EXTENSION_G, 'C', interleaved=True)


@fixture(scope='module')
def extension_dual():
    return fixtures.code(fixtures.EXTENSION_H, 'C^perp', interleaved=True)


@fixture(scope='module')
def bell_code(f2):
    """<XX, ZZ>"""
    return StabilizerCode.from_rows([[1, 1, 0, 0], [0, 0, 1, 1]], f2)


@fixture(scope='module')
def repetition_code(f2):
    """<ZZI, IZZ>, not self-dual."""
    return StabilizerCode.from_rows([[0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 1, 1]], f2)


@fixture(scope='function')
def pooled_search():
    search = ShardedSearch(concurrent_workers=2)
    yield search
    search.close()


@fixture(scope='function')
def code_file(tmpdir):
    """Write the five-qubit reference code to a text file and return its path."""
    path = tmpdir.join('code.txt')
    path.write('# symp versus mon\nring=F2 n=5 k=3\n'
               '0 1 1 1 1 0 0 0 0 0\n'
               '1 0 1 0 0 0 0 0 1 1\n'
               '1 0 0 0 1 0 1 1 0 0\n')
    return path.strpath
