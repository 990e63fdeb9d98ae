"""
Symbolic Pauli operators omega^l X(a) Z(b) over Z/dZ.

Phases are exponents of omega, a primitive root of unity of order c-bar
(d for odd d, 2d for even d). Nothing here builds a matrix; see
`sympiso.quantum` for that.
"""
import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from sympiso.algebra import RingSpec
from sympiso.exceptions import MalformedInputError, NotAStabilizerError, NotSelfOrthogonalError
from sympiso.matrix import Matrix, Vector
from sympiso.stabcode import StabilizerCode, symp_inner, symp_weight
from sympiso.utils import guard_enumeration

_LETTERS = {(0, 0): 'I', (1, 0): 'X', (0, 1): 'Z', (1, 1): 'Y'}
_SLOTS = {letter: pair for pair, letter in _LETTERS.items()}
_QUBIT_PHASES = {0: '', 1: '+i', 2: '-1', 3: '-i'}
_PHASE_TOKENS = {'': 0, '+': 0, '+1': 0, '1': 0, '+i': 1, 'i': 1, '-1': 2, '-': 2, '-i': 3}
_QUBIT_STRING = re.compile(r'^\s*(?P<phase>[+-]?1?i?)\s*(?P<letters>[IXYZ]+)\s*$')
_SLOT_TOKEN = re.compile(r'^X\^(?P<a>\d+)Z\^(?P<b>\d+)$')
_OMEGA_TOKEN = re.compile(r'^w\^(?P<l>-?\d+)$')


@dataclass(frozen=True)
class PauliOperator:
    """omega^phase_exp X(a) Z(b) on n qudits of dimension d."""
    phase_exp: int
    a: Vector
    b: Vector
    spec: RingSpec

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise MalformedInputError(f"X and Z parts have lengths {len(self.a)} and {len(self.b)}")
        d = self.spec.modulus
        object.__setattr__(self, 'phase_exp', self.phase_exp % self.spec.phase_order)
        object.__setattr__(self, 'a', tuple(int(x) % d for x in self.a))
        object.__setattr__(self, 'b', tuple(int(x) % d for x in self.b))

    @classmethod
    def identity(cls, n: int, spec: RingSpec) -> 'PauliOperator':
        return cls(0, (0,) * n, (0,) * n, spec)

    @classmethod
    def from_vector(cls, vector: Sequence[int], spec: RingSpec, phase_exp: int = 0) -> 'PauliOperator':
        n = len(vector) // 2
        return cls(phase_exp, tuple(vector[:n]), tuple(vector[n:]), spec)

    @classmethod
    def single(cls, slot: int, n: int, spec: RingSpec, a: int = 0, b: int = 0, phase_exp: int = 0):
        xs, zs = [0] * n, [0] * n
        xs[slot], zs[slot] = a, b
        return cls(phase_exp, tuple(xs), tuple(zs), spec)

    @property
    def n(self) -> int:
        return len(self.a)

    def __mul__(self, other: 'PauliOperator') -> 'PauliOperator':
        return pauli_mul(self, other)

    def __pow__(self, exponent: int) -> 'PauliOperator':
        result = PauliOperator.identity(self.n, self.spec)
        for _ in range(exponent % (self.spec.phase_order * self.spec.modulus)):
            result = pauli_mul(result, self)
        return result

    def is_identity(self) -> bool:
        return self.phase_exp == 0 and not any(self.a) and not any(self.b)

    def is_phase(self) -> bool:
        return not any(self.a) and not any(self.b)

    def __str__(self):
        return pauli_string(self)


def _check_pair(p: PauliOperator, q: PauliOperator):
    if p.spec != q.spec or p.n != q.n:
        raise MalformedInputError(f"cannot combine Paulis on {p.n} qudits over {p.spec} and {q.n} over {q.spec}")


def pauli_mul(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """X(a)Z(b) X(a')Z(b') = chi(b.a') X(a+a')Z(b+b')."""
    _check_pair(p, q)
    spec = p.spec
    twist = sum(x * y for x, y in zip(p.b, q.a)) % spec.modulus
    phase = p.phase_exp + q.phase_exp + (spec.phase_order // spec.char) * twist
    return PauliOperator(phase,
                         tuple(x + y for x, y in zip(p.a, q.a)),
                         tuple(x + y for x, y in zip(p.b, q.b)),
                         spec)


def psi(p: PauliOperator) -> Vector:
    """Forget the phase: omega^l X(a)Z(b) -> (a | b)."""
    return p.a + p.b


def pauli_commutes(p: PauliOperator, q: PauliOperator) -> bool:
    _check_pair(p, q)
    return symp_inner(psi(p), psi(q), p.spec) == 0


def pauli_weight(p: PauliOperator) -> int:
    return symp_weight(psi(p))


def permute_pauli(perm: Sequence[int], p: PauliOperator) -> PauliOperator:
    """sigma(P) = omega^l X(sigma(a)) Z(sigma(b)) with sigma(a)_i = a_sigma(i)."""
    if sorted(perm) != list(range(p.n)):
        raise MalformedInputError(f"{tuple(perm)} is not a permutation of {p.n} slots")
    return PauliOperator(p.phase_exp, tuple(p.a[j] for j in perm), tuple(p.b[j] for j in perm), p.spec)


def conjugate_local(p: PauliOperator, images: Sequence[Tuple[PauliOperator, PauliOperator]]) -> PauliOperator:
    """U P U^dagger for U a tensor of single-qudit Cliffords.

    :param images: For each slot, the single-qudit Paulis U_i X U_i^dagger and
        U_i Z U_i^dagger.
    """
    if len(images) != p.n:
        raise MalformedInputError(f"{len(images)} slot images for a Pauli on {p.n} qudits")
    n, spec = p.n, p.spec
    result = PauliOperator(p.phase_exp, (0,) * n, (0,) * n, spec)
    factors = [(slot, 0, power) for slot, power in enumerate(p.a)]
    factors += [(slot, 1, power) for slot, power in enumerate(p.b)]
    for slot, which, power in factors:
        image = images[slot][which]
        embedded = PauliOperator.single(slot, n, spec, image.a[0], image.b[0], image.phase_exp)
        for _ in range(power):
            result = pauli_mul(result, embedded)
    return result


def pauli_string(p: PauliOperator) -> str:
    """Letters I, X, Y, Z for qubits with Y = iXZ; X^aZ^b tokens otherwise."""
    if p.spec.modulus == 2:
        letters = ''.join(_LETTERS[pair] for pair in zip(p.a, p.b))
        leading = (p.phase_exp - letters.count('Y')) % 4
        return _QUBIT_PHASES[leading] + letters
    tokens = [f"X^{x}Z^{z}" for x, z in zip(p.a, p.b)]
    if p.phase_exp:
        tokens.insert(0, f"w^{p.phase_exp}")
    return ' '.join(tokens)


def parse_pauli(text: str, spec: RingSpec) -> PauliOperator:
    """Inverse of `pauli_string`.

    :raises MalformedInputError: on a bad token.
    """
    if spec.modulus == 2:
        match = _QUBIT_STRING.match(text)
        if match is None or match.group('phase') not in _PHASE_TOKENS:
            raise MalformedInputError(f"cannot parse Pauli string {text!r}")
        letters = match.group('letters')
        pairs = [_SLOTS[letter] for letter in letters]
        phase = _PHASE_TOKENS[match.group('phase')] + letters.count('Y')
        return PauliOperator(phase, tuple(x for x, _ in pairs), tuple(z for _, z in pairs), spec)
    tokens = text.split()
    phase = 0
    if tokens and _OMEGA_TOKEN.match(tokens[0]):
        phase = int(_OMEGA_TOKEN.match(tokens[0]).group('l'))
        tokens = tokens[1:]
    xs, zs = [], []
    for token in tokens:
        match = _SLOT_TOKEN.match(token)
        if match is None:
            raise MalformedInputError(f"bad slot token {token!r} in {text!r}")
        xs.append(int(match.group('a')))
        zs.append(int(match.group('b')))
    if not xs:
        raise MalformedInputError(f"no slots in Pauli string {text!r}")
    return PauliOperator(phase, tuple(xs), tuple(zs), spec)


class StabilizerGroup:
    """The group generated by commuting Paulis, none of them a bare phase.

    :param generators: The generating Paulis, all on n qudits over one ring.
    """

    def __init__(self, generators: Sequence[PauliOperator], n: Optional[int] = None,
                 spec: Optional[RingSpec] = None):
        self.generators = tuple(generators)
        if not self.generators and (n is None or spec is None):
            raise MalformedInputError("an empty stabilizer group needs n and spec")
        self.n = self.generators[0].n if self.generators else n
        self.spec = self.generators[0].spec if self.generators else spec
        for generator in self.generators:
            if generator.n != self.n or generator.spec != self.spec:
                raise MalformedInputError("stabilizer generators act on different spaces")

    def __iter__(self) -> Iterator[PauliOperator]:
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"StabilizerGroup<{', '.join(self.strings())}>"

    def strings(self) -> List[str]:
        return [pauli_string(g) for g in self.generators]

    def code(self) -> StabilizerCode:
        rows = [psi(g) for g in self.generators]
        return StabilizerCode(Matrix(rows, self.spec, cols=2 * self.n))

    def elements(self, max_enum: Optional[int] = None) -> List[PauliOperator]:
        """Every group element, found by closing the generators under products."""
        identity = PauliOperator.identity(self.n, self.spec)
        guard_enumeration(self.spec.modulus ** len(self.generators), max_enum, "stabilizer group")
        seen = {identity}
        queue = deque([identity])
        while queue:
            current = queue.popleft()
            for generator in self.generators:
                product = pauli_mul(current, generator)
                if product not in seen:
                    seen.add(product)
                    queue.append(product)
        return sorted(seen, key=lambda p: (p.a + p.b, p.phase_exp))

    @property
    def order(self) -> int:
        return len(self.elements())

    def validate(self, max_enum: Optional[int] = None) -> 'StabilizerGroup':
        """Check that the generators commute, have order dividing d, and generate no bare phase.

        :raises NotAStabilizerError: naming the first failing condition.
        """
        for p, q in combinations(self.generators, 2):
            if not pauli_commutes(p, q):
                raise NotAStabilizerError(f"{pauli_string(p)} and {pauli_string(q)} do not commute")
        for generator in self.generators:
            if not (generator ** self.spec.modulus).is_identity():
                raise NotAStabilizerError(f"{pauli_string(generator)} does not have order dividing {self.spec.modulus}")
        for element in self.elements(max_enum):
            if element.is_phase() and not element.is_identity():
                raise NotAStabilizerError(f"the group contains the phase omega^{element.phase_exp}")
        return self


def stabilizer_phase(vector: Sequence[int], spec: RingSpec) -> int:
    """Phase exponent making X(a)Z(b) an element of order dividing d: a.b for even d, 0 for odd d."""
    if spec.char % 2:
        return 0
    n = len(vector) // 2
    return sum(int(x) * int(z) for x, z in zip(vector[:n], vector[n:])) % spec.phase_order


def code_to_stabilizer(code: StabilizerCode) -> StabilizerGroup:
    """One Pauli per generator row with the phase from `stabilizer_phase`, so that Psi(S) = C."""
    if not code.self_orthogonal:
        raise NotSelfOrthogonalError(f"{code!r} is not self-orthogonal")
    generators = [PauliOperator.from_vector(row, code.spec, stabilizer_phase(row, code.spec))
                  for row in code.generators.to_rows()]
    return StabilizerGroup(generators, n=code.n, spec=code.spec)
