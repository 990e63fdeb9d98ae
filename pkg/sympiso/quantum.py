"""
Exact matrices for Pauli operators, stabilizer states and local Cliffords.

The computational basis of (C^d)^n is indexed by R^n with slot 1 least
significant, so a state vector stacks the columns of its reshapings.
Matrices carry entries in Q(omega) and a power of 1/sqrt(d) kept apart
(`ScaledMatrix`), so no arithmetic is ever rounded.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import isprime

from sympiso.algebra import Cyclotomic, RingSpec
from sympiso.exceptions import CodeMembershipError, MalformedInputError, UnsupportedRingError, VerificationError
from sympiso.isometry import Flavor, MonomialMap
from sympiso.matrix import CyclotomicMatrix, Matrix, rank_exact
from sympiso.pauli import (PauliOperator, StabilizerGroup, code_to_stabilizer, conjugate_local, pauli_mul,
                           permute_pauli, psi)
from sympiso.stabcode import StabilizerCode, symplectic_gram
from sympiso.utils import guard_enumeration

Block = Tuple[Tuple[int, int], Tuple[int, int]]


class ScaledMatrix:
    """mat / sqrt(d)^scale_exp, kept with scale_exp in {0, 1}.

    :param mat: Entries in a cyclotomic field.
    :param scale_exp: Power of 1/sqrt(d).
    :param d: Qudit dimension.
    """
    __slots__ = ('mat', 'scale_exp', 'd')

    def __init__(self, mat: CyclotomicMatrix, scale_exp: int, d: int):
        while scale_exp >= 2:
            mat, scale_exp = mat.scale(Fraction(1, d)), scale_exp - 2
        while scale_exp < 0:
            mat, scale_exp = mat.scale(d), scale_exp + 2
        self.mat = mat
        self.scale_exp = scale_exp
        self.d = d

    @classmethod
    def identity(cls, size: int, conductor: int, d: int) -> 'ScaledMatrix':
        return cls(CyclotomicMatrix.identity(size, conductor), 0, d)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.mat.shape

    @property
    def conductor(self) -> int:
        return self.mat.conductor

    def __matmul__(self, other: 'ScaledMatrix') -> 'ScaledMatrix':
        return ScaledMatrix(self.mat @ other.mat, self.scale_exp + other.scale_exp, self.d)

    def kron(self, other: 'ScaledMatrix') -> 'ScaledMatrix':
        return ScaledMatrix(self.mat.kron(other.mat), self.scale_exp + other.scale_exp, self.d)

    def dagger(self) -> 'ScaledMatrix':
        return ScaledMatrix(self.mat.dagger(), self.scale_exp, self.d)

    def scale(self, scalar) -> 'ScaledMatrix':
        return ScaledMatrix(self.mat.scale(scalar), self.scale_exp, self.d)

    def __add__(self, other: 'ScaledMatrix') -> 'ScaledMatrix':
        if self.scale_exp != other.scale_exp:
            raise MalformedInputError("cannot add matrices scaled by different powers of sqrt(d)")
        return ScaledMatrix(self.mat + other.mat, self.scale_exp, self.d)

    def __eq__(self, other):
        if not isinstance(other, ScaledMatrix):
            return NotImplemented
        return self.d == other.d and self.scale_exp == other.scale_exp and self.mat == other.mat

    def __hash__(self):
        return hash((self.d, self.scale_exp, self.mat))

    def __repr__(self):
        return f"ScaledMatrix({self.mat!r} / sqrt({self.d})^{self.scale_exp})"

    def ratio_to(self, other: 'ScaledMatrix') -> Optional[Cyclotomic]:
        """The lambda with self = lambda * other, when both carry the same power of sqrt(d)."""
        if self.shape != other.shape or self.scale_exp != other.scale_exp:
            return None
        ratio = None
        for row, other_row in zip(self.mat.entries, other.mat.entries):
            for x, y in zip(row, other_row):
                if y.is_zero():
                    if not x.is_zero():
                        return None
                    continue
                if ratio is None:
                    ratio = x / y
                elif x != ratio * y:
                    return None
        return ratio

    def equal_up_to_phase(self, other: 'ScaledMatrix') -> bool:
        """True when self = omega * other for a root of unity omega."""
        ratio = self.ratio_to(other)
        return ratio is not None and is_root_of_unity(ratio)


def is_root_of_unity(value: Cyclotomic) -> bool:
    conductor = value.conductor
    return any(value == Cyclotomic.root(conductor, t) or value == -Cyclotomic.root(conductor, t)
               for t in range(conductor))


def _conductor(spec: RingSpec) -> int:
    return spec.phase_order


def basis_index(x: Sequence[int], d: int) -> int:
    index = 0
    for value in reversed(x):
        index = index * d + value
    return index


def basis_vectors(n: int, d: int) -> List[Tuple[int, ...]]:
    """R^n in basis index order."""
    return [tuple(reversed(x)) for x in product(range(d), repeat=n)]


def pauli_matrix(p: PauliOperator, max_enum: Optional[int] = None) -> ScaledMatrix:
    """The matrix of omega^l X(a)Z(b): column x has omega^l chi(b.x) in row x + a."""
    spec = p.spec
    d, n = spec.modulus, p.n
    guard_enumeration(d ** n, max_enum, "Hilbert space dimension")
    conductor = _conductor(spec)
    step = spec.phase_order // spec.char
    size = d ** n
    rows = [[0] * size for _ in range(size)]
    for x in basis_vectors(n, d):
        target = tuple((xi + ai) % d for xi, ai in zip(x, p.a))
        exponent = p.phase_exp + step * (sum(bi * xi for bi, xi in zip(p.b, x)) % d)
        rows[basis_index(target, d)][basis_index(x, d)] = Cyclotomic.root(conductor, exponent)
    return ScaledMatrix(CyclotomicMatrix(rows, conductor), 0, d)


def _root_exponent(value: Cyclotomic, order: int) -> Optional[int]:
    for t in range(order):
        if value == Cyclotomic.root(order, t):
            return t
    return None


def identify_pauli(matrix: ScaledMatrix, spec: RingSpec, n: int) -> PauliOperator:
    """Read omega^l X(a)Z(b) off its matrix.

    :raises VerificationError: when the matrix is not a Pauli operator.
    """
    d = spec.modulus
    if matrix.scale_exp != 0 or matrix.shape != (d ** n, d ** n):
        raise VerificationError("not the matrix of a Pauli operator on this space")
    order = spec.phase_order
    step = order // spec.char
    vectors = basis_vectors(n, d)

    def column_entry(column: int) -> Tuple[int, int]:
        nonzero = [i for i in range(d ** n) if not matrix.mat[i, column].is_zero()]
        if len(nonzero) != 1:
            raise VerificationError(f"column {column} is not monomial")
        exponent = _root_exponent(matrix.mat[nonzero[0], column], order)
        if exponent is None:
            raise VerificationError(f"entry in column {column} is not a power of omega")
        return nonzero[0], exponent

    row, phase = column_entry(0)
    a = vectors[row]
    b = []
    for j in range(n):
        unit = tuple(1 if i == j else 0 for i in range(n))
        _, exponent = column_entry(basis_index(unit, d))
        shift = (exponent - phase) % order
        if shift % step:
            raise VerificationError("phase pattern does not come from a character")
        b.append(shift // step)
    candidate = PauliOperator(phase, a, tuple(b), spec)
    if pauli_matrix(candidate) != matrix:
        raise VerificationError("matrix is not a Pauli operator")
    return candidate


def conjugate(unitary: ScaledMatrix, operator: ScaledMatrix) -> ScaledMatrix:
    return unitary @ operator @ unitary.dagger()


def clifford_images(unitary: ScaledMatrix, spec: RingSpec) -> Tuple[PauliOperator, PauliOperator]:
    """(U X U^dagger, U Z U^dagger) for a single-qudit Clifford U."""
    x = pauli_matrix(PauliOperator(0, (1,), (0,), spec))
    z = pauli_matrix(PauliOperator(0, (0,), (1,), spec))
    return identify_pauli(conjugate(unitary, x), spec, 1), identify_pauli(conjugate(unitary, z), spec, 1)


def clifford_action(unitary: ScaledMatrix, spec: RingSpec) -> Block:
    """M(U) with Psi(U P U^dagger) = Psi(P) M for row vectors."""
    image_x, image_z = clifford_images(unitary, spec)
    return (psi(image_x), psi(image_z))


def _qubit_generators() -> List[ScaledMatrix]:
    i = Cyclotomic.root(4, 1)
    rotation = CyclotomicMatrix([[1, i], [i, 1]], 4)
    hadamard = CyclotomicMatrix([[1, 1], [1, -1]], 4)
    phase = CyclotomicMatrix([[1, 0], [0, i]], 4)
    return [ScaledMatrix(rotation, 1, 2), ScaledMatrix(hadamard, 1, 2), ScaledMatrix(phase, 0, 2)]


def _odd_prime_generators(p: int) -> List[ScaledMatrix]:
    """Fourier, quadratic phase, and the multiplier |x> -> |2x>."""
    half = pow(2, -1, p)
    fourier = CyclotomicMatrix([[Cyclotomic.root(p, j * k) for k in range(p)] for j in range(p)], p)
    phase = CyclotomicMatrix([[Cyclotomic.root(p, x * x * half) if x == y else 0 for y in range(p)]
                              for x in range(p)], p)
    multiplier = CyclotomicMatrix([[1 if x == (2 * y) % p else 0 for y in range(p)] for x in range(p)], p)
    return [ScaledMatrix(fourier, 1, p), ScaledMatrix(phase, 0, p), ScaledMatrix(multiplier, 0, p)]


def _check_lift_ring(spec: RingSpec):
    d = spec.modulus
    if d != 2 and not (d % 2 and isprime(d)):
        raise UnsupportedRingError(f"Clifford lifts are available for d = 2 and odd primes, not d = {d}")


def _matmul_block(left: Block, right: Block, d: int) -> Block:
    return tuple(tuple(sum(left[i][k] * right[k][j] for k in range(2)) % d for j in range(2)) for i in range(2))


@lru_cache(maxsize=None)
def lift_table(d: int) -> Dict[Block, ScaledMatrix]:
    """A lift U(M) for every M in SL_2(Z/dZ), found breadth first from the generator gates.

    Each step right-multiplies M by the action of a gate and left-multiplies U
    by the gate, following M(U_a U_b) = M(U_b) M(U_a).
    """
    spec = RingSpec.modular(d)
    _check_lift_ring(spec)
    gates = _qubit_generators() if d == 2 else _odd_prime_generators(d)
    steps = [(clifford_action(gate, spec), gate) for gate in gates]
    identity: Block = ((1, 0), (0, 1))
    table = {identity: ScaledMatrix.identity(d, _conductor(spec), d)}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for action, gate in steps:
            block = _matmul_block(current, action, d)
            if block not in table:
                table[block] = gate @ table[current]
                queue.append(block)
    return table


def _as_block(matrix, spec: RingSpec) -> Block:
    if isinstance(matrix, Matrix):
        rows = matrix.to_rows()
    else:
        rows = [[int(x) for x in row] for row in matrix]
    if len(rows) != 2 or any(len(row) != 2 for row in rows):
        raise MalformedInputError(f"expected a 2x2 matrix, got {rows}")
    d = spec.modulus
    return tuple(tuple(int(x) % d for x in row) for row in rows)


def clifford_lift_sl2(matrix, spec: RingSpec) -> ScaledMatrix:
    """A single-qudit Clifford U with Psi(U P U^dagger) = Psi(P) M for all P.

    :param matrix: M in SL_2(Z/dZ), as a `Matrix` or nested sequence.
    :raises UnsupportedRingError: unless d = 2 or d is an odd prime.
    :raises VerificationError: if the lift fails its conjugation check.
    """
    _check_lift_ring(spec)
    block = _as_block(matrix, spec)
    d = spec.modulus
    if (block[0][0] * block[1][1] - block[0][1] * block[1][0]) % d != 1:
        raise MalformedInputError(f"{block} is not in SL_2(Z/{d})")
    unitary = lift_table(d)[block]
    if clifford_action(unitary, spec) != block:
        raise VerificationError(f"lift of {block} fails its conjugation check")
    return unitary


@dataclass
class LocalClifford:
    """U_1 (x) ... (x) U_n together with the slot permutation of a monomial map."""
    lifts: List[ScaledMatrix]
    perm: Tuple[int, ...]
    spec: RingSpec
    images: List[Tuple[PauliOperator, PauliOperator]] = field(repr=False)

    @property
    def unitary(self) -> ScaledMatrix:
        """The tensor product with slot 1 as the least significant factor."""
        result = self.lifts[-1]
        for lift in reversed(self.lifts[:-1]):
            result = result.kron(lift)
        return result

    def conjugate_pauli(self, p: PauliOperator) -> PauliOperator:
        """U sigma(P) U^dagger computed slot by slot."""
        return conjugate_local(permute_pauli(self.perm, p), self.images)


def clifford_of_monomial(monomial: MonomialMap) -> LocalClifford:
    if monomial.flavor is not Flavor.SL:
        raise MalformedInputError("only SL_2-monomial maps lift to local Cliffords")
    if monomial.n == 0:
        raise MalformedInputError("a map on zero slots has no Clifford")
    lifts = [clifford_lift_sl2(block, monomial.spec) for block in monomial.blocks]
    images = [clifford_images(lift, monomial.spec) for lift in lifts]
    return LocalClifford(lifts=lifts, perm=monomial.perm, spec=monomial.spec, images=images)


@dataclass
class StateBasis:
    """Columns spanning Q(S), each scaled so its first nonzero entry is 1."""
    columns: List[List[Cyclotomic]]
    n: int
    d: int
    conductor: int

    @property
    def dimension(self) -> int:
        return len(self.columns)

    def vector(self) -> List[Cyclotomic]:
        if self.dimension != 1:
            raise MalformedInputError(f"the code space has dimension {self.dimension}, not a single state")
        return self.columns[0]

    def as_matrix(self) -> CyclotomicMatrix:
        return CyclotomicMatrix([list(row) for row in zip(*self.columns)], self.conductor)

    def to_json(self) -> dict:
        return {'d': self.d, 'n': self.n, 'conductor': self.conductor, 'scale_exp': 0,
                'vectors': [[[str(c) for c in x.embed(self.conductor).coeffs] for x in column]
                            for column in self.columns]}

    @classmethod
    def from_json(cls, data: dict) -> 'StateBasis':
        try:
            conductor, n, d = int(data['conductor']), int(data['n']), int(data['d'])
            columns = [[Cyclotomic(conductor, [Fraction(c) for c in x]) for x in column] for column in data['vectors']]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as error:
            raise MalformedInputError(f"malformed state file: {error}")
        if any(len(column) != d ** n for column in columns):
            raise MalformedInputError(f"state vectors must have {d ** n} entries")
        return cls(columns=columns, n=n, d=d, conductor=conductor)

    @classmethod
    def from_vector(cls, values: Sequence, n: int, d: int, conductor: int) -> 'StateBasis':
        column = [x if isinstance(x, Cyclotomic) else Cyclotomic.rational(conductor, x) for x in values]
        return cls(columns=[_normalize_column(column)], n=n, d=d, conductor=conductor)


def _normalize_column(column: List[Cyclotomic]) -> List[Cyclotomic]:
    lead = next(x for x in column if not x.is_zero())
    inverse = lead.inverse()
    return [x * inverse for x in column]


def stabilizer_projector(group: StabilizerGroup, max_enum: Optional[int] = None) -> ScaledMatrix:
    """Product over generators of (1/d) sum_t P^t."""
    spec, n = group.spec, group.n
    d = spec.modulus
    guard_enumeration(d ** n, max_enum, "Hilbert space dimension")
    projector = ScaledMatrix.identity(d ** n, _conductor(spec), d)
    for generator in group:
        power = PauliOperator.identity(n, spec)
        total = None
        for _ in range(d):
            term = pauli_matrix(power)
            total = term if total is None else total + term
            power = pauli_mul(power, generator)
        projector = projector @ total.scale(Fraction(1, d))
    return projector


def stabilizer_state_basis(group: StabilizerGroup, max_enum: Optional[int] = None) -> StateBasis:
    """A basis of the joint +1 eigenspace, read off the projector's columns.

    :raises VerificationError: when the rank differs from d^n / |S|.
    """
    spec, n = group.spec, group.n
    d = spec.modulus
    expected = d ** n // group.code().size
    projector = stabilizer_projector(group, max_enum=max_enum)
    chosen: List[List[Cyclotomic]] = []
    for j in range(d ** n):
        column = projector.mat.column_values(j)
        if all(x.is_zero() for x in column):
            continue
        trial = CyclotomicMatrix([list(row) for row in zip(*(chosen + [column]))], projector.conductor)
        if rank_exact(trial) > len(chosen):
            chosen.append(column)
        if len(chosen) == expected:
            break
    rank = rank_exact(projector.mat)
    if len(chosen) != expected or rank != expected:
        raise VerificationError(f"projector has rank {rank}, expected {expected}")
    return StateBasis(columns=[_normalize_column(c) for c in chosen], n=n, d=d, conductor=projector.conductor)


def apply_to_basis(unitary: ScaledMatrix, basis: StateBasis) -> ScaledMatrix:
    column_matrix = ScaledMatrix(basis.as_matrix(), 0, basis.d)
    return unitary @ column_matrix


def same_span(left: CyclotomicMatrix, right: CyclotomicMatrix) -> bool:
    rank = rank_exact(left)
    return rank == rank_exact(right) == rank_exact(left.hstack(right))


@dataclass
class LcpReport:
    """Outcome of checking that a monomial map lifts to an LCP equivalence of the stabilizer codes."""
    mapped: bool
    exact: bool
    correction: Optional[PauliOperator]
    states_match: bool
    ratio: Optional[Cyclotomic]
    ratio_scale_exp: int
    conjugated: List[PauliOperator]
    target: StabilizerGroup

    @property
    def passed(self) -> bool:
        return self.mapped and (self.exact or self.correction is not None) and self.states_match

    def to_json(self) -> dict:
        from sympiso.pauli import pauli_string
        return {
            'mapped': self.mapped,
            'exact': self.exact,
            'correction': pauli_string(self.correction) if self.correction is not None else None,
            'states_match': self.states_match,
            'ratio': self.ratio.to_json() if self.ratio is not None else None,
            'ratio_scale_exp': self.ratio_scale_exp,
            'conjugated': [pauli_string(p) for p in self.conjugated],
            'target': self.target.strings(),
            'passed': self.passed,
        }


def _phase_table(group: StabilizerGroup, max_enum: Optional[int]) -> Dict[Tuple[int, ...], int]:
    return {psi(element): element.phase_exp for element in group.elements(max_enum)}


def pauli_correction(conjugated: Sequence[PauliOperator], target: StabilizerGroup,
                     max_enum: Optional[int] = None) -> Optional[PauliOperator]:
    """X(r)Z(s) whose conjugation turns every conjugated generator into the element of target with its Psi image.

    Conjugating X(a)Z(b) by X(r)Z(s) multiplies it by chi(<(r, s), (a, b)>),
    so the phases give a linear system in (r, s) over R.
    """
    spec, n = target.spec, target.n
    phases = _phase_table(target, max_enum)
    step = spec.phase_order // spec.char
    shifts = []
    for p in conjugated:
        wanted = phases.get(psi(p))
        if wanted is None:
            return None
        delta = (wanted - p.phase_exp) % spec.phase_order
        if delta % step:
            return None
        shifts.append(delta // step)
    images = Matrix([psi(p) for p in conjugated], spec, cols=2 * n)
    system = symplectic_gram(n, spec) @ images.T
    solution = system.solve_left(shifts)
    if solution is None:
        return None
    return PauliOperator.from_vector(solution, spec)


def _conjugate_by_pauli(p: PauliOperator, correction: PauliOperator) -> PauliOperator:
    inverse = correction ** (correction.spec.phase_order * correction.spec.modulus - 1)
    return pauli_mul(pauli_mul(correction, p), inverse)


def _check_onto(code: StabilizerCode, target: StabilizerCode, monomial: MonomialMap):
    if code.n != monomial.n or target.n != monomial.n:
        raise MalformedInputError("code lengths and map size differ")
    for row in code.generators.to_rows():
        if not target.contains(monomial.apply(row)):
            raise CodeMembershipError(f"the map sends {row} outside the target code")
    if code.size != target.size:
        raise CodeMembershipError("the map cannot be onto a code of a different size")


def _cross_check(unitary: ScaledMatrix, originals: StabilizerGroup, images: Sequence[PauliOperator],
                 max_enum: Optional[int]):
    for original, image in zip(originals, images):
        if conjugate(unitary, pauli_matrix(original, max_enum)) != pauli_matrix(image, max_enum):
            raise VerificationError(f"symbolic and matrix conjugation disagree on {original}")


def _corrected(conjugated: Sequence[PauliOperator], target_group: StabilizerGroup,
               target_phases: Dict[Tuple[int, ...], int], max_enum: Optional[int]) -> Optional[PauliOperator]:
    correction = pauli_correction(conjugated, target_group, max_enum)
    if correction is None:
        return None
    fixed = (_conjugate_by_pauli(p, correction) for p in conjugated)
    if any(target_phases.get(psi(c)) != c.phase_exp for c in fixed):
        raise VerificationError("Pauli correction does not fix the phases")
    return correction


def _compare_states(unitary: ScaledMatrix, permuted: StabilizerGroup, target_group: StabilizerGroup,
                    max_enum: Optional[int]) -> Tuple[bool, Optional[Cyclotomic], int]:
    image = apply_to_basis(unitary, stabilizer_state_basis(permuted, max_enum))
    expected = stabilizer_state_basis(target_group, max_enum)
    if not same_span(image.mat, expected.as_matrix()):
        return False, None, 0
    if expected.dimension != 1:
        return True, None, 0
    ratio = ScaledMatrix(image.mat, 0, image.d).ratio_to(ScaledMatrix(expected.as_matrix(), 0, image.d))
    return True, ratio, image.scale_exp


def lcp_verify(code: StabilizerCode, target: StabilizerCode, monomial: MonomialMap,
               max_enum: Optional[int] = None, check_matrices: bool = True) -> LcpReport:
    """Check that U sigma(S) U^dagger equals S' for the local Clifford lifted from a code map.

    :param check_matrices: Also conjugate the full matrices and compare them
        with the symbolic result.
    :raises CodeMembershipError: when the map does not send the code onto the target.
    """
    _check_onto(code, target, monomial)
    source_group = code_to_stabilizer(code)
    target_group = code_to_stabilizer(target)
    local = clifford_of_monomial(monomial)
    conjugated = [local.conjugate_pauli(g) for g in source_group]
    permuted = StabilizerGroup([permute_pauli(local.perm, g) for g in source_group], n=code.n, spec=code.spec)
    unitary = local.unitary if check_matrices else None
    if unitary is not None:
        _cross_check(unitary, permuted, conjugated, max_enum)
    mapped = StabilizerGroup(conjugated, n=code.n, spec=code.spec).code() == target
    target_phases = _phase_table(target_group, max_enum)
    exact = mapped and all(target_phases.get(psi(p)) == p.phase_exp for p in conjugated)
    correction = _corrected(conjugated, target_group, target_phases, max_enum) if mapped and not exact else None
    states_match, ratio, ratio_scale = False, None, 0
    if mapped and (exact or correction is not None):
        if unitary is None:
            unitary = local.unitary
        if correction is not None:
            unitary = pauli_matrix(correction, max_enum) @ unitary
        states_match, ratio, ratio_scale = _compare_states(unitary, permuted, target_group, max_enum)
    return LcpReport(mapped=mapped, exact=exact, correction=correction, states_match=states_match,
                     ratio=ratio, ratio_scale_exp=ratio_scale, conjugated=conjugated, target=target_group)


Bipartition = Tuple[Tuple[int, ...], Tuple[int, ...]]


def bipartitions(n: int) -> List[Bipartition]:
    """Cuts A | B of slots 1..n with slot 1 in A and B nonempty, ordered by smaller side, then A."""
    slots = tuple(range(1, n + 1))
    cuts = []
    for size in range(1, n):
        for rest in combinations(slots[1:], size - 1):
            side = (1,) + rest
            cuts.append((side, tuple(s for s in slots if s not in side)))
    return sorted(cuts, key=lambda cut: (min(len(cut[0]), len(cut[1])), cut[0]))


def format_bipartition(cut: Bipartition) -> str:
    return '{' + ','.join(map(str, cut[0])) + '}|{' + ','.join(map(str, cut[1])) + '}'


def _state_of(state) -> Tuple[List[Cyclotomic], int, int, int]:
    if isinstance(state, StateBasis):
        return state.vector(), state.n, state.d, state.conductor
    raise MalformedInputError(f"expected a StateBasis, got {type(state).__name__}")


def reshape_rank(vector: Sequence[Cyclotomic], n: int, d: int, cut: Bipartition, conductor: int) -> int:
    side_a, side_b = [s - 1 for s in cut[0]], [s - 1 for s in cut[1]]
    rows = []
    for xa in product(range(d), repeat=len(side_a)):
        row = []
        for xb in product(range(d), repeat=len(side_b)):
            x = [0] * n
            for slot, value in zip(side_a, xa):
                x[slot] = value
            for slot, value in zip(side_b, xb):
                x[slot] = value
            row.append(vector[basis_index(x, d)])
        rows.append(row)
    return rank_exact(CyclotomicMatrix(rows, conductor))


def rank_profile(state: StateBasis) -> Dict[Bipartition, int]:
    """Rank of the d^|A| x d^|B| reshaping of a pure state for every cut."""
    vector, n, d, conductor = _state_of(state)
    return {cut: reshape_rank(vector, n, d, cut, conductor) for cut in bipartitions(n)}


def rank_multisets(profile: Dict[Bipartition, int]) -> Dict[int, List[int]]:
    """Ranks grouped by the size of the smaller side."""
    grouped: Dict[int, List[int]] = {}
    for (side_a, side_b), rank in profile.items():
        grouped.setdefault(min(len(side_a), len(side_b)), []).append(rank)
    return {size: sorted(ranks) for size, ranks in sorted(grouped.items())}


NOT_LU_EQUIVALENT = 'not-LU-equivalent'
INCONCLUSIVE = 'inconclusive'


@dataclass
class LuVerdict:
    verdict: str
    bipartition: Optional[Bipartition] = None
    ranks: Optional[Tuple[int, int]] = None

    def __str__(self):
        if self.bipartition is None:
            return self.verdict
        return f"{self.verdict}, bipartition {format_bipartition(self.bipartition)}, " \
               f"ranks {self.ranks[0]} vs {self.ranks[1]}"

    def to_json(self) -> dict:
        return {'verdict': self.verdict,
                'bipartition': format_bipartition(self.bipartition) if self.bipartition else None,
                'ranks': list(self.ranks) if self.ranks else None}


def lu_witness(first: StateBasis, second: StateBasis) -> LuVerdict:
    """Refute local unitary equivalence with a cut whose reshaping ranks differ; never claims equivalence."""
    if first.n != second.n or first.d != second.d:
        raise MalformedInputError("states live on different spaces")
    left, right = rank_profile(first), rank_profile(second)
    for cut in bipartitions(first.n):
        if left[cut] != right[cut]:
            return LuVerdict(NOT_LU_EQUIVALENT, cut, (left[cut], right[cut]))
    return LuVerdict(INCONCLUSIVE)
