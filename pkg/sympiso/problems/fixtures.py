"""
Generator matrices and expected values of the built-in reference instances.

Codes are given in (a | b) layout unless the name says interleaved.
"""
from fractions import Fraction

from sympiso.algebra import Cyclotomic, RingSpec
from sympiso.helpers.permutation import parse_cycles
from sympiso.isometry import MonomialMap
from sympiso.stabcode import StabilizerCode

F2 = RingSpec.prime_field(2)


def _bits(*rows: str):
    return [[int(c) for c in row.replace(' ', '').replace('|', '')] for row in rows]


# non-monomial isometry: two generator matrices of one code, interleaved
NON_MONOMIAL_N1 = _bits('10 01 10 10', '01 10 00 10', '01 00 01 00', '01 01 00 01')
NON_MONOMIAL_N2 = _bits('11 10 11 01', '01 01 00 01', '00 11 00 11', '00 01 01 01')

# symplectic versus monomial automorphisms on five qubits
SYMP_VS_MON = _bits('01111|00000', '10100|00011', '10001|01100')
SYMP_VS_MON_SYMP_ORDER = 168
SYMP_VS_MON_RMON_SL_ORDER = 8

# self-dual extensions and coset weight tables, interleaved
EXTENSION_G = _bits('10 00 00 11', '00 10 00 00', '01 00 10 10')
EXTENSION_H = EXTENSION_G + _bits('01 00 00 10', '01 00 01 01')
EXTENSION_G_IMAGE = _bits('10 00 00 10', '00 01 00 00', '01 00 10 01')
EXTENSION_H_IMAGE = EXTENSION_G_IMAGE + _bits('01 00 00 01', '10 00 01 00')
EXTENSION_LOW = (1, 2, 2, 2, 3, 3, 3, 4)
EXTENSION_HIGH = (2, 2, 3, 3, 3, 3, 4, 4)
EXTENSION_DISTRIBUTIONS = [EXTENSION_LOW, EXTENSION_HIGH, EXTENSION_HIGH]

# three-qubit LCP equivalence
LCP_G = _bits('101|010', '011|100', '000|111')
LCP_G_IMAGE = _bits('101|111', '100|011', '110|101')
LCP_BLOCKS = (((1, 0), (1, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)))
LCP_CYCLES = '(123)'
LCP_STABILIZER = ['XZX', 'ZXX', 'ZZZ']
LCP_STABILIZER_IMAGE = ['YZY', 'XZZ', 'YXZ']
LCP_STATE = (1, 0, 0, -1, 0, 1, 1, 0)
LCP_PERMUTED_STATE = (1, 0, 0, 1, 0, -1, 1, 0)
# (real, imaginary) parts
LCP_STATE_IMAGE = ((1, 0), (1, 0), (0, -1), (0, 1), (1, 0), (-1, 0), (0, -1), (0, -1))
LCP_RATIO = (Fraction(1, 2), Fraction(1, 2))

# four-qubit states that are symplectically but not LU equivalent
NOT_LU_G = _bits('1011|0100', '0101|1000', '0000|1010', '0000|1101')
NOT_LU_G_IMAGE = _bits('1111|1001', '0011|0100', '0000|0011', '0011|1000')
NOT_LU_STABILIZER = ['XZXX', 'ZXIX', 'ZIZI', 'ZZIZ']
NOT_LU_STABILIZER_IMAGE = ['YXXY', 'IZXX', 'IIZZ', 'ZIXX']
NOT_LU_STATE = (1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0)
NOT_LU_STATE_IMAGE = (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1)
NOT_LU_CUT = ((1, 2), (3, 4))
NOT_LU_RANKS = (4, 2)


def code(rows, name: str, interleaved: bool = False) -> StabilizerCode:
    build = StabilizerCode.from_interleaved if interleaved else StabilizerCode.from_rows
    return build(rows, F2, name=name)


def lcp_map() -> MonomialMap:
    return MonomialMap(LCP_BLOCKS, parse_cycles(LCP_CYCLES, 3), F2)


def lcp_ratio() -> Cyclotomic:
    """(1 + i) / 2"""
    return Cyclotomic(4, list(LCP_RATIO))


def gaussian(values):
    """Entries a + bi as elements of Q(i)."""
    return [Cyclotomic(4, [re, im]) for re, im in values]
