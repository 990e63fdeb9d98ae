"""
Classical stabilizer codes: submodules of R^2n under the symplectic form.

Vectors are written (a | b) with a, b in R^n. The interleaved layout
(a_1, b_1 | a_2, b_2 | ...) is reached with `gamma`; in that layout the
symplectic weight is the Hamming weight over pair blocks.
"""
from collections import Counter
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from sympiso.algebra import RingSpec
from sympiso.exceptions import (CodeMembershipError, MalformedInputError, NotSelfOrthogonalError,
                                UnsupportedRingError)
from sympiso.matrix import CanonicalForm, Matrix, Vector, canonicalize, kernel
from sympiso.utils import guard_enumeration


def _halves(vector: Sequence[int]) -> Tuple[Sequence[int], Sequence[int]]:
    if len(vector) % 2:
        raise MalformedInputError(f"symplectic vectors have even length, got {len(vector)}")
    n = len(vector) // 2
    return vector[:n], vector[n:]


def symp_inner(u: Sequence[int], v: Sequence[int], spec: RingSpec) -> int:
    """<(a, b), (a', b')> = b.a' - b'.a"""
    if len(u) != len(v):
        raise MalformedInputError(f"vectors of length {len(u)} and {len(v)}")
    a, b = _halves(u)
    a_, b_ = _halves(v)
    return (sum(int(x) * int(y) for x, y in zip(b, a_)) - sum(int(x) * int(y) for x, y in zip(b_, a))) % spec.modulus


def symp_weight(vector: Sequence[int]) -> int:
    a, b = _halves(vector)
    return sum(1 for x, y in zip(a, b) if x or y)


def symp_weights(vectors: np.ndarray) -> np.ndarray:
    """Symplectic weight of every row of a 2D array."""
    n = vectors.shape[1] // 2
    return np.count_nonzero((vectors[:, :n] != 0) | (vectors[:, n:] != 0), axis=1)


def gamma(vector: Sequence[int]) -> Vector:
    """(a_1..a_n | b_1..b_n) -> (a_1, b_1 | ... | a_n, b_n)"""
    a, b = _halves(vector)
    return tuple(int(x) for pair in zip(a, b) for x in pair)


def gamma_inv(vector: Sequence[int]) -> Vector:
    _halves(vector)
    return tuple(int(x) for x in vector[0::2]) + tuple(int(x) for x in vector[1::2])


def gamma_permutation(n: int) -> List[int]:
    """Column order taking (a | b) layout to the interleaved layout."""
    return [column for i in range(n) for column in (i, n + i)]


def gamma_inv_permutation(n: int) -> List[int]:
    return [2 * i for i in range(n)] + [2 * i + 1 for i in range(n)]


def symplectic_gram(n: int, spec: RingSpec) -> Matrix:
    """Omega with u @ Omega @ v.T = <u, v>."""
    gram = np.zeros((2 * n, 2 * n), dtype=np.int64)
    gram[:n, n:] = -np.eye(n, dtype=np.int64)
    gram[n:, :n] = np.eye(n, dtype=np.int64)
    return Matrix(gram, spec, cols=2 * n)


class StabilizerCode:
    """A submodule of R^2n given by generator rows in (a | b) layout.

    The given rows are kept when they already form a minimal generating set,
    so that row-indexed maps between two codes stay meaningful; otherwise the
    canonical rows replace them.

    :param generators: k x 2n generator matrix.
    :param name: Optional label used in reports.
    """

    def __init__(self, generators: Matrix, name: Optional[str] = None):
        if generators.cols % 2:
            raise MalformedInputError(f"generator matrix needs an even number of columns, got {generators.cols}")
        canonical = canonicalize(generators)
        self.canonical: CanonicalForm = canonical
        self.generators = generators if generators.rows == canonical.rank else canonical.form
        self.spec = generators.spec
        self.n = generators.cols // 2
        self.name = name

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], spec: RingSpec, n: Optional[int] = None,
                  name: Optional[str] = None) -> 'StabilizerCode':
        cols = 2 * n if n is not None else None
        return cls(Matrix(rows, spec, cols=cols), name=name)

    @classmethod
    def from_interleaved(cls, rows: Sequence[Sequence[int]], spec: RingSpec, n: Optional[int] = None,
                         name: Optional[str] = None) -> 'StabilizerCode':
        return cls.from_rows([gamma_inv(row) for row in rows], spec, n=n, name=name)

    @classmethod
    def zero(cls, n: int, spec: RingSpec) -> 'StabilizerCode':
        return cls(Matrix.zeros(0, 2 * n, spec))

    @classmethod
    def full(cls, n: int, spec: RingSpec) -> 'StabilizerCode':
        return cls(Matrix.identity(2 * n, spec))

    @property
    def k(self) -> int:
        return self.canonical.rank

    @property
    def size(self) -> int:
        return self.canonical.span_size

    def interleaved(self) -> Matrix:
        return self.generators.take_columns(gamma_permutation(self.n))

    @cached_property
    def codeword_array(self) -> np.ndarray:
        return self.canonical.span_array()

    def codewords(self) -> Iterator[Vector]:
        return self.canonical.span()

    def contains(self, vector: Sequence[int]) -> bool:
        return self.canonical.contains(vector)

    def extend(self, vector: Sequence[int]) -> 'StabilizerCode':
        row = Matrix([list(vector)], self.spec, cols=2 * self.n)
        return StabilizerCode(self.generators.vstack(row))

    def key(self) -> Tuple[Vector, ...]:
        return self.canonical.form.key()

    def __eq__(self, other):
        if not isinstance(other, StabilizerCode):
            return NotImplemented
        return self.spec == other.spec and self.n == other.n and self.key() == other.key()

    def __hash__(self):
        return hash((self.spec, self.n, self.key()))

    def __repr__(self):
        label = f"{self.name}: " if self.name else ''
        return f"StabilizerCode({label}{self.spec}, n={self.n}, k={self.k})"

    @cached_property
    def self_orthogonal(self) -> bool:
        return is_self_orthogonal(self)

    def dual(self) -> 'StabilizerCode':
        return dual(self)


def dual(code: StabilizerCode) -> StabilizerCode:
    """C^perp as the left kernel of v -> v @ Omega @ G.T."""
    form = symplectic_gram(code.n, code.spec) @ code.generators.T
    return StabilizerCode(kernel(form))


def is_self_orthogonal(code: StabilizerCode) -> bool:
    gram = code.generators @ symplectic_gram(code.n, code.spec) @ code.generators.T
    return not np.any(gram.array)


def is_self_dual(code: StabilizerCode) -> bool:
    return is_self_orthogonal(code) and dual(code) == code


def min_distance(code: StabilizerCode, max_enum: Optional[int] = None) -> int:
    """min wt_s over C^perp - C, or over C - {0} when C is self-dual."""
    perp = dual(code)
    guard_enumeration(perp.size, max_enum, "dual code")
    if perp == code:
        candidates = code.codeword_array
        weights = symp_weights(candidates)
        nonzero = weights[np.any(candidates != 0, axis=1)]
        if nonzero.size == 0:
            raise MalformedInputError("the zero code of length 0 has no distance")
        return int(nonzero.min())
    vectors = perp.codeword_array
    weights = symp_weights(vectors)
    for index in np.argsort(weights, kind='stable'):
        if not code.contains(vectors[index]):
            return int(weights[index])
    raise MalformedInputError("C^perp - C is empty, so the code has no distance")


def concat_p_fold(code: StabilizerCode, times: Optional[int] = None) -> StabilizerCode:
    """The code {(x | x | ... | x)} of pair-block repetitions, back in (a | b) layout.

    :param times: Number of copies; defaults to the characteristic, for which
        the result is self-orthogonal.
    """
    if not code.spec.is_field:
        raise UnsupportedRingError(f"concatenation is defined over prime fields, not {code.spec}")
    times = code.spec.char if times is None else times
    if times < 1:
        raise MalformedInputError(f"need at least one copy, got {times}")
    interleaved = code.interleaved().array
    repeated = np.hstack([interleaved] * times)
    n = code.n * times
    rows = repeated[:, gamma_inv_permutation(n)]
    label = f"{code.name}|x{times}" if code.name else None
    return StabilizerCode(Matrix(rows, code.spec, cols=2 * n), name=label)


def socle_lift(code: StabilizerCode, target: RingSpec) -> StabilizerCode:
    """Embed a code over F_p into (alpha R)^2n for R = Z/p^e."""
    local = target.local_data
    if not code.spec.is_field or local is None or local.prime != code.spec.char:
        raise UnsupportedRingError(f"cannot lift a code over {code.spec} into the socle of {target}")
    rows = code.generators.array * local.socle
    label = f"{code.name}@{target}" if code.name else None
    return StabilizerCode(Matrix(rows, target, cols=2 * code.n), name=label)


def is_socle_code(code: StabilizerCode) -> bool:
    local = code.spec.local_data
    return local is not None and not np.any(code.generators.array % local.socle)


def socle_reduce(code: StabilizerCode) -> StabilizerCode:
    """The residue-field code rho(C) of a socle code; fields pass through."""
    if code.spec.is_field:
        return code
    if not is_socle_code(code):
        raise UnsupportedRingError(f"code over {code.spec} does not live in the socle")
    local = code.spec.local_data
    residue = RingSpec.prime_field(local.prime)
    rows = code.generators.array // local.socle
    return StabilizerCode(Matrix(rows, residue, cols=2 * code.n), name=code.name)


class CosetWeightTable:
    """Symplectic weights of the translates v + c of a coset representative.

    :param representative: v.
    :param weights: wt_s(v + c), one per codeword c in enumeration order.
    """

    def __init__(self, representative: Vector, weights: Sequence[int]):
        self.representative = representative
        self.weights = tuple(int(w) for w in weights)

    @property
    def distribution(self) -> Tuple[int, ...]:
        return tuple(sorted(self.weights))

    def counts(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.weights).items()))

    def __len__(self):
        return len(self.weights)

    def __eq__(self, other):
        if not isinstance(other, CosetWeightTable):
            return NotImplemented
        return self.distribution == other.distribution

    def __repr__(self):
        return f"CosetWeightTable({self.representative}, {list(self.weights)})"


def coset_weight_table(code: StabilizerCode, vector: Sequence[int]) -> CosetWeightTable:
    if code.contains(vector):
        raise CodeMembershipError(f"{tuple(vector)} lies in the code, so it does not name a proper coset")
    translates = np.mod(code.codeword_array + np.asarray(vector, dtype=np.int64), code.spec.modulus)
    return CosetWeightTable(tuple(int(x) for x in vector), symp_weights(translates))


def coset_representatives(code: StabilizerCode, larger: StabilizerCode) -> List[Vector]:
    """Lexicographically least vector of every coset of code in larger other than code itself."""
    seen = set()
    representatives = []
    for vector in sorted(larger.codewords()):
        if code.contains(vector):
            continue
        translates = np.mod(code.codeword_array + np.asarray(vector, dtype=np.int64), code.spec.modulus)
        coset = frozenset(tuple(int(x) for x in row) for row in translates)
        if coset in seen:
            continue
        seen.add(coset)
        representatives.append(vector)
    return representatives


def extension_weight_tables(code: StabilizerCode, extension: StabilizerCode) -> List[CosetWeightTable]:
    """Weight tables of every coset making up extension - code."""
    return [coset_weight_table(code, vector) for vector in coset_representatives(code, extension)]


def self_dual_extensions(code: StabilizerCode, max_enum: Optional[int] = None) -> List[StabilizerCode]:
    """All self-dual D with C <= D <= C^perp, sorted by canonical form.

    Grows self-orthogonal codes one vector of their dual at a time; any such
    vector keeps the code self-orthogonal because the form is alternating.
    """
    if not code.self_orthogonal:
        raise NotSelfOrthogonalError(f"{code!r} is not self-orthogonal")
    guard_enumeration(dual(code).size, max_enum, "dual code")
    found: Dict[Tuple[Vector, ...], StabilizerCode] = {}
    frontier = {code.key(): code}
    while frontier:
        grown: Dict[Tuple[Vector, ...], StabilizerCode] = {}
        for current in frontier.values():
            perp = dual(current)
            if perp == current:
                found[current.key()] = current
                continue
            for vector in perp.codewords():
                if not current.contains(vector):
                    extended = current.extend(vector)
                    grown.setdefault(extended.key(), extended)
        frontier = grown
    return [found[key] for key in sorted(found)]


def compatible_partners(tables_a: Sequence[Sequence[CosetWeightTable]],
                        tables_b: Sequence[Sequence[CosetWeightTable]]) -> List[List[int]]:
    """For each extension on one side, the extensions on the other side whose
    weight distribution over extension - code is the same."""
    def distribution(tables: Sequence[CosetWeightTable]) -> Tuple[int, ...]:
        return tuple(sorted(w for table in tables for w in table.weights))

    right = [distribution(tables) for tables in tables_b]
    return [[j for j, other in enumerate(right) if other == distribution(tables)] for tables in tables_a]
