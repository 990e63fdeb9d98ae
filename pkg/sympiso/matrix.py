"""
Dense exact linear algebra over Z/dZ and over cyclotomic fields.

`Matrix` wraps a read-only numpy array of canonical residues together with
its `RingSpec`. Row spans are compared through `canonicalize`, which returns
the reduced row echelon form over a prime field and the Howell form over
Z/dZ; both are unique per row span, so two generator matrices describe the
same code exactly when their canonical forms are equal.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations, product
from math import gcd, prod
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import factorint
try:
    from sympy import igcdex
except ImportError:
    from sympy.core.intfunc import igcdex

from sympiso.algebra import Cyclotomic, RingSpec
from sympiso.exceptions import MalformedInputError, NonInvertibleError
from sympiso.utils import guard_enumeration, unit_normalizer

Vector = Tuple[int, ...]


class Matrix:
    """A rows x cols matrix of canonical residues over a ring.

    :param entries: Anything `numpy.asarray` turns into a 2D integer array.
        Values are reduced modulo the ring.
    :param spec: The ring.
    :param cols: Column count, only needed when `entries` has no rows.
    """
    __slots__ = ('spec', '_array')

    def __init__(self, entries, spec: RingSpec, cols: Optional[int] = None):
        array = np.asarray(entries, dtype=np.int64)
        if array.size == 0:
            if cols is None:
                cols = array.shape[1] if array.ndim == 2 else 0
            array = np.zeros((array.shape[0] if array.ndim == 2 else 0, cols), dtype=np.int64)
        if array.ndim != 2:
            raise MalformedInputError(f"a matrix needs two dimensions, got shape {array.shape}")
        array = np.mod(array, spec.modulus)
        array.setflags(write=False)
        self.spec = spec
        self._array = array

    @classmethod
    def identity(cls, size: int, spec: RingSpec) -> 'Matrix':
        return cls(np.eye(size, dtype=np.int64), spec, cols=size)

    @classmethod
    def zeros(cls, rows: int, cols: int, spec: RingSpec) -> 'Matrix':
        return cls(np.zeros((rows, cols), dtype=np.int64), spec, cols=cols)

    @property
    def array(self) -> np.ndarray:
        return self._array

    @property
    def rows(self) -> int:
        return self._array.shape[0]

    @property
    def cols(self) -> int:
        return self._array.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._array.shape

    @property
    def T(self) -> 'Matrix':
        return Matrix(self._array.T, self.spec, cols=self.rows)

    def row(self, index: int) -> Vector:
        return tuple(int(x) for x in self._array[index])

    def to_rows(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def key(self) -> Tuple[Vector, ...]:
        return tuple(self.to_rows())

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.to_rows())

    def __len__(self):
        return self.rows

    def __getitem__(self, index):
        return self._array[index]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.spec == other.spec and self.shape == other.shape and bool(np.all(self._array == other._array))

    def __hash__(self):
        return hash((self.spec, self.shape, self._array.tobytes()))

    def __repr__(self):
        body = '; '.join(' '.join(str(x) for x in row) for row in self.to_rows())
        return f"Matrix[{self.spec}]({self.rows}x{self.cols}: {body})"

    def _check(self, other: 'Matrix'):
        if other.spec != self.spec:
            raise MalformedInputError(f"cannot combine matrices over {self.spec} and {other.spec}")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.cols != other.rows:
                raise MalformedInputError(f"shape mismatch {self.shape} @ {other.shape}")
            return Matrix(self._array @ other._array, self.spec, cols=other.cols)
        return NotImplemented

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check(other)
        return Matrix(self._array + other._array, self.spec, cols=self.cols)

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check(other)
        return Matrix(self._array - other._array, self.spec, cols=self.cols)

    def __neg__(self) -> 'Matrix':
        return Matrix(-self._array, self.spec, cols=self.cols)

    def __mul__(self, scalar: int) -> 'Matrix':
        return Matrix(self._array * int(scalar), self.spec, cols=self.cols)

    __rmul__ = __mul__

    def vstack(self, other: 'Matrix') -> 'Matrix':
        self._check(other)
        return Matrix(np.vstack([self._array, other._array]), self.spec, cols=self.cols)

    def hstack(self, other: 'Matrix') -> 'Matrix':
        self._check(other)
        return Matrix(np.hstack([self._array, other._array]), self.spec, cols=self.cols + other.cols)

    def take_columns(self, columns: Sequence[int]) -> 'Matrix':
        return Matrix(self._array[:, list(columns)], self.spec, cols=len(columns))

    def take_rows(self, rows: Sequence[int]) -> 'Matrix':
        return Matrix(self._array[list(rows), :], self.spec, cols=self.cols)

    def apply(self, vector: Sequence[int]) -> Vector:
        """Row-vector action vector @ self."""
        result = np.mod(np.asarray(vector, dtype=np.int64) @ self._array, self.spec.modulus)
        return tuple(int(x) for x in result)

    def det_mod(self) -> int:
        if self.rows != self.cols:
            raise MalformedInputError(f"determinant of a non-square {self.shape} matrix")
        return _det_int(self.to_rows()) % self.spec.modulus

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.spec.is_unit(self.det_mod())

    def inverse(self) -> 'Matrix':
        return inverse(self)

    def canonicalize(self) -> 'CanonicalForm':
        return canonicalize(self)

    def kernel(self) -> 'Matrix':
        return kernel(self)

    def solve_left(self, target: Sequence[int]) -> Optional[Vector]:
        return solve_left(self, target)


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical generating rows of a row span.

    :param form: The RREF (prime modulus) or Howell form (composite modulus).
    :param pivots: Leading column of each row.
    """
    form: Matrix
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.form.rows

    @property
    def pivot_values(self) -> Tuple[int, ...]:
        return tuple(int(self.form[i, c]) for i, c in enumerate(self.pivots))

    @property
    def span_size(self) -> int:
        d = self.form.spec.modulus
        return prod(d // value for value in self.pivot_values)

    def contains(self, vector: Sequence[int]) -> bool:
        return reduce_vector(self, vector) is not None

    def coefficient_ranges(self) -> List[range]:
        d = self.form.spec.modulus
        return [range(d // value) for value in self.pivot_values]

    def span_array(self) -> np.ndarray:
        """All vectors of the span, one per row, without repetition."""
        d = self.form.spec.modulus
        if self.rank == 0:
            return np.zeros((1, self.form.cols), dtype=np.int64)
        coefficients = np.array(list(product(*self.coefficient_ranges())), dtype=np.int64)
        return np.mod(coefficients @ self.form.array, d)

    def span(self) -> Iterator[Vector]:
        for row in self.span_array():
            yield tuple(int(x) for x in row)


def reduce_vector(canonical: CanonicalForm, vector: Sequence[int]) -> Optional[Vector]:
    """Coefficients expressing vector in the canonical rows, or None when outside the span."""
    d = canonical.form.spec.modulus
    rest = np.mod(np.asarray(vector, dtype=np.int64), d)
    coefficients = []
    for index, column in enumerate(canonical.pivots):
        row = canonical.form.array[index]
        value = int(row[column])
        entry = int(rest[column])
        if entry % value:
            return None
        coefficient = entry // value
        coefficients.append(coefficient)
        if coefficient:
            rest = np.mod(rest - coefficient * row, d)
    if np.any(rest):
        return None
    return tuple(coefficients)


def _det_int(rows: List[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant over the integers."""
    m = [list(map(int, row)) for row in rows]
    size = len(m)
    if size == 0:
        return 1
    sign, previous = 1, 1
    for i in range(size - 1):
        if m[i][i] == 0:
            swap = next((j for j in range(i + 1, size) if m[j][i]), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for j in range(i + 1, size):
            for col in range(i + 1, size):
                m[j][col] = (m[j][col] * m[i][i] - m[j][i] * m[i][col]) // previous
        previous = m[i][i]
    return sign * m[-1][-1]


def _pack_gf2(rows: List[Sequence[int]], cols: int) -> List[int]:
    return [int(''.join(str(int(x)) for x in row), 2) if cols else 0 for row in rows]


def _unpack_gf2(packed: List[int], cols: int) -> List[List[int]]:
    return [[(value >> (cols - 1 - c)) & 1 for c in range(cols)] for value in packed]


def _rref_gf2(rows: List[Sequence[int]], cols: int) -> Tuple[List[List[int]], List[int]]:
    """Reduced row echelon form over F_2 with rows packed into integers."""
    packed = [value for value in _pack_gf2(rows, cols) if value]
    pivots, r = [], 0
    for c in range(cols):
        bit = 1 << (cols - 1 - c)
        j = next((i for i in range(r, len(packed)) if packed[i] & bit), None)
        if j is None:
            continue
        packed[r], packed[j] = packed[j], packed[r]
        for i in range(len(packed)):
            if i != r and packed[i] & bit:
                packed[i] ^= packed[r]
        pivots.append(c)
        r += 1
    return _unpack_gf2(packed[:r], cols), pivots


def _howell_rows(rows: List[Sequence[int]], cols: int, d: int) -> Tuple[List[List[int]], List[int]]:
    """Howell form of the row span over Z/dZ.

    Pivots are divisors of d, entries above a pivot are reduced below it, and
    every pivot row that is a zero divisor contributes its annihilated multiple
    so that the rows with leading zeros span every such vector of the module.
    """
    rows = [[int(x) % d for x in row] for row in rows]
    pivots, r = [], 0
    for c in range(cols):
        j = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if j is None:
            continue
        rows[r], rows[j] = rows[j], rows[r]
        unit = unit_normalizer(rows[r][c], d)
        if unit != 1:
            rows[r] = [(unit * x) % d for x in rows[r]]
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if b:
                a = rows[r][c]
                s, t, g = igcdex(a, b)
                top = [(s * x + t * y) % d for x, y in zip(rows[r], rows[i])]
                bottom = [((-b // g) * x + (a // g) * y) % d for x, y in zip(rows[r], rows[i])]
                rows[r], rows[i] = top, bottom
        pivot = rows[r][c]
        for i in range(r):
            q = rows[i][c] // pivot
            if q:
                rows[i] = [(x - q * y) % d for x, y in zip(rows[i], rows[r])]
        if pivot != 1:
            annihilated = [((d // pivot) * x) % d for x in rows[r]]
            if any(annihilated):
                rows.append(annihilated)
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def canonicalize(matrix: Matrix) -> CanonicalForm:
    """RREF over a prime modulus, Howell form otherwise; zero rows dropped."""
    d, cols = matrix.spec.modulus, matrix.cols
    rows = matrix.to_rows()
    if d == 2:
        form, pivots = _rref_gf2(rows, cols)
    else:
        form, pivots = _howell_rows(rows, cols, d)
    return CanonicalForm(form=Matrix(form, matrix.spec, cols=cols), pivots=tuple(pivots))


def kernel(matrix: Matrix) -> Matrix:
    """Generators of the left kernel {v : v @ matrix = 0}, in canonical form."""
    augmented = matrix.hstack(Matrix.identity(matrix.rows, matrix.spec))
    canonical = canonicalize(augmented)
    rows = [row[matrix.cols:] for row in canonical.form.to_rows() if not any(row[:matrix.cols])]
    return Matrix(rows, matrix.spec, cols=matrix.rows)


def solve_left(matrix: Matrix, target: Sequence[int]) -> Optional[Vector]:
    """Some x with x @ matrix = target, or None when target is outside the row span."""
    if len(target) != matrix.cols:
        raise MalformedInputError(f"target of length {len(target)} for a matrix with {matrix.cols} columns")
    negated = Matrix([[-int(x) for x in target]], matrix.spec, cols=matrix.cols)
    null = kernel(negated.vstack(matrix))
    if null.rows == 0 or int(null[0, 0]) != 1:
        return None
    return null.row(0)[1:]


def inverse(matrix: Matrix) -> Matrix:
    size = matrix.rows
    if size != matrix.cols:
        raise MalformedInputError(f"cannot invert a non-square {matrix.shape} matrix")
    canonical = canonicalize(matrix.hstack(Matrix.identity(size, matrix.spec)))
    form = canonical.form
    if canonical.pivots[:size] != tuple(range(size)) or form.rows != size \
            or not np.array_equal(form.array[:, :size], np.eye(size, dtype=np.int64)):
        raise NonInvertibleError(f"matrix is not invertible over {matrix.spec}")
    return Matrix(form.array[:, size:], matrix.spec, cols=size)


def span_size(matrix: Matrix) -> int:
    return canonicalize(matrix).span_size


class GroupShape(Enum):
    GL = 'GL'
    SL = 'SL'
    SYMMETRIC = 'S'


def group_order(spec: RingSpec, shape: GroupShape, k: int) -> int:
    """|GL_k(Z/dZ)|, |SL_k(Z/dZ)| or k!."""
    if shape is GroupShape.SYMMETRIC:
        return prod(range(1, k + 1))
    order = 1
    for p, e in factorint(spec.modulus).items():
        field = prod(p ** k - p ** i for i in range(k))
        order *= p ** ((e - 1) * k * k) * field
    if shape is GroupShape.SL:
        order //= len(spec.units())
    return order


def _gl_field_rows(spec: RingSpec, k: int) -> Iterator[Tuple[Vector, ...]]:
    """Invertible k x k matrices over a prime field, rows chosen outside the running span."""
    q = spec.modulus
    vectors = list(product(range(q), repeat=k))

    def extend(chosen: Tuple[Vector, ...], span: frozenset):
        if len(chosen) == k:
            yield chosen
            return
        for vector in vectors:
            if vector in span:
                continue
            grown = frozenset(tuple((s + c * v) % q for s, v in zip(base, vector))
                              for base in span for c in range(q))
            yield from extend(chosen + (vector,), grown)

    yield from extend((), frozenset({(0,) * k}))


def enumerate_group(spec: RingSpec, shape: GroupShape, k: int,
                    max_enum: Optional[int] = None) -> Iterator[Union[Matrix, Tuple[int, ...]]]:
    """Every element of GL_k(R), SL_k(R) or S_k exactly once, in lexicographic order.

    Matrices are yielded as `Matrix`, permutations as tuples of images of 0..k-1.

    :raises EnumerationCapError: when the group order exceeds the cap.
    """
    order = group_order(spec, shape, k)
    guard_enumeration(order, max_enum, f"{shape.value}_{k}({spec})")
    if shape is GroupShape.SYMMETRIC:
        yield from permutations(range(k))
        return
    if shape is GroupShape.GL and spec.is_field:
        for rows in _gl_field_rows(spec, k):
            yield Matrix(rows, spec, cols=k)
        return
    guard_enumeration(spec.modulus ** (k * k), max_enum, f"{k}x{k} matrices over {spec}")
    for entries in product(range(spec.modulus), repeat=k * k):
        rows = [entries[i * k:(i + 1) * k] for i in range(k)]
        det = _det_int(rows) % spec.modulus
        if (shape is GroupShape.SL and det == 1) or (shape is GroupShape.GL and spec.is_unit(det)):
            yield Matrix(rows, spec, cols=k)


Scalar = Union[Cyclotomic, int, Fraction]


class CyclotomicMatrix:
    """A dense matrix with entries in Q(zeta_conductor).

    Entries are held as tuples of `Cyclotomic`; zeros are skipped in products,
    which keeps monomial operators such as Pauli matrices cheap.
    """
    __slots__ = ('conductor', 'entries')

    def __init__(self, entries: Sequence[Sequence[Scalar]], conductor: int):
        self.conductor = conductor
        self.entries = tuple(tuple(self._coerce(x) for x in row) for row in entries)
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise MalformedInputError("ragged cyclotomic matrix")

    def _coerce(self, value: Scalar) -> Cyclotomic:
        if isinstance(value, Cyclotomic):
            if value.conductor == self.conductor:
                return value
            return value.embed(self.conductor)
        return Cyclotomic.rational(self.conductor, value)

    @classmethod
    def identity(cls, size: int, conductor: int) -> 'CyclotomicMatrix':
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], conductor)

    @classmethod
    def zeros(cls, rows: int, cols: int, conductor: int) -> 'CyclotomicMatrix':
        return cls([[0] * cols for _ in range(rows)], conductor)

    @classmethod
    def column(cls, values: Sequence[Scalar], conductor: int) -> 'CyclotomicMatrix':
        return cls([[value] for value in values], conductor)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Cyclotomic:
        i, j = index
        return self.entries[i][j]

    def column_values(self, j: int) -> List[Cyclotomic]:
        return [row[j] for row in self.entries]

    def with_conductor(self, conductor: int) -> 'CyclotomicMatrix':
        return self if conductor == self.conductor else CyclotomicMatrix(self.entries, conductor)

    def _align(self, other: 'CyclotomicMatrix') -> Tuple['CyclotomicMatrix', 'CyclotomicMatrix']:
        if other.conductor == self.conductor:
            return self, other
        conductor = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.with_conductor(conductor), other.with_conductor(conductor)

    def __matmul__(self, other: 'CyclotomicMatrix') -> 'CyclotomicMatrix':
        left, right = self._align(other)
        if left.cols != right.rows:
            raise MalformedInputError(f"shape mismatch {left.shape} @ {right.shape}")
        zero = Cyclotomic.zero(left.conductor)
        columns = [[(i, x) for i, x in enumerate(right.column_values(j)) if not x.is_zero()] for j in range(right.cols)]
        result = []
        for row in left.entries:
            out = []
            for column in columns:
                total = zero
                for i, x in column:
                    if not row[i].is_zero():
                        total = total + row[i] * x
                out.append(total)
            result.append(out)
        return CyclotomicMatrix(result, left.conductor)

    def __add__(self, other: 'CyclotomicMatrix') -> 'CyclotomicMatrix':
        left, right = self._align(other)
        if left.shape != right.shape:
            raise MalformedInputError(f"shape mismatch {left.shape} + {right.shape}")
        return CyclotomicMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(left.entries, right.entries)],
                                left.conductor)

    def __neg__(self) -> 'CyclotomicMatrix':
        return CyclotomicMatrix([[-a for a in row] for row in self.entries], self.conductor)

    def __sub__(self, other: 'CyclotomicMatrix') -> 'CyclotomicMatrix':
        return self + (-other)

    def scale(self, scalar: Scalar) -> 'CyclotomicMatrix':
        if isinstance(scalar, Cyclotomic) and scalar.conductor != self.conductor:
            conductor = self.conductor * scalar.conductor // gcd(self.conductor, scalar.conductor)
            return self.with_conductor(conductor).scale(scalar.embed(conductor))
        return CyclotomicMatrix([[a * scalar for a in row] for row in self.entries], self.conductor)

    def dagger(self) -> 'CyclotomicMatrix':
        """Conjugate transpose."""
        return CyclotomicMatrix([[self.entries[i][j].conj() for i in range(self.rows)] for j in range(self.cols)],
                                self.conductor)

    def transpose(self) -> 'CyclotomicMatrix':
        return CyclotomicMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                                self.conductor)

    def kron(self, other: 'CyclotomicMatrix') -> 'CyclotomicMatrix':
        left, right = self._align(other)
        rows = []
        for row in left.entries:
            for inner in right.entries:
                rows.append([a * b if not a.is_zero() else a for a in row for b in inner])
        return CyclotomicMatrix(rows, left.conductor)

    def take_columns(self, columns: Sequence[int]) -> 'CyclotomicMatrix':
        return CyclotomicMatrix([[row[j] for j in columns] for row in self.entries], self.conductor)

    def hstack(self, other: 'CyclotomicMatrix') -> 'CyclotomicMatrix':
        left, right = self._align(other)
        return CyclotomicMatrix([r + s for r, s in zip(left.entries, right.entries)], left.conductor)

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicMatrix):
            return NotImplemented
        left, right = self._align(other)
        return left.entries == right.entries

    def __hash__(self):
        return hash((self.conductor, self.entries))

    def __repr__(self):
        return f"CyclotomicMatrix(conductor={self.conductor}, shape={self.shape})"

    def rank(self) -> int:
        return rank_exact(self)


def rank_exact(matrix: CyclotomicMatrix) -> int:
    """Rank over Q(zeta_m) by fraction-free elimination.

    Each step replaces row j by pivot * row_j - entry * row_r, so no field
    inverse is ever taken.
    """
    rows = [list(row) for row in matrix.entries]
    rank = 0
    for c in range(matrix.cols):
        j = next((i for i in range(rank, len(rows)) if not rows[i][c].is_zero()), None)
        if j is None:
            continue
        rows[rank], rows[j] = rows[j], rows[rank]
        pivot = rows[rank][c]
        for i in range(rank + 1, len(rows)):
            entry = rows[i][c]
            if not entry.is_zero():
                rows[i] = [pivot * x - entry * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank
