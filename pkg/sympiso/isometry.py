"""
Symplectic isometries of R^2n and the isometry groups of a code.

A monomial map sends pair block i of the interleaved vector gamma(v) to
x_sigma(i) A_i. An automorphism f of a code C with generator matrix G is
recorded through Phi as the unique B in GL_k(F_q) with f(xG) = xBG, which
turns every group here into a set of k x k matrices over the residue field.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from sympiso.algebra import RingSpec
from sympiso.exceptions import EnumerationCapError, MalformedInputError, NonInvertibleError
from sympiso.helpers.permutation import format_cycles, is_permutation
from sympiso.matrix import GroupShape, Matrix, canonicalize, enumerate_group, group_order, inverse
from sympiso.search import ShardedSearch, resolve_search
from sympiso.stabcode import (StabilizerCode, gamma, gamma_inv, gamma_permutation, socle_reduce, symp_weights,
                              symplectic_gram)
from sympiso.utils import guard_enumeration, resolve_max_enum

Block = Tuple[Tuple[int, int], Tuple[int, int]]
Key = Tuple[Tuple[int, ...], ...]

J: Block = ((0, -1), (1, 0))
IDENTITY_BLOCK: Block = ((1, 0), (0, 1))


class Flavor(Enum):
    SL = 'sl'
    GL = 'gl'

    @property
    def shape(self) -> GroupShape:
        return GroupShape.SL if self is Flavor.SL else GroupShape.GL


def _block_det(block: Block) -> int:
    (a, b), (c, d) = block
    return a * d - b * c


@dataclass(frozen=True)
class MonomialMap:
    """diag(A_1, ..., A_n)(P_sigma (x) I_2) acting on rows in the interleaved layout.

    :param blocks: A_1..A_n as row-major 2x2 tuples.
    :param perm: sigma as images of 0..n-1; pair i of the image is x_sigma(i) A_i.
    :param spec: The ring.
    :param flavor: SL requires det A_i = 1, GL a unit determinant.
    """
    blocks: Tuple[Block, ...]
    perm: Tuple[int, ...]
    spec: RingSpec
    flavor: Flavor = Flavor.SL

    def __post_init__(self):
        d = self.spec.modulus
        blocks = tuple(tuple(tuple(int(x) % d for x in row) for row in block) for block in self.blocks)
        object.__setattr__(self, 'blocks', blocks)
        object.__setattr__(self, 'perm', tuple(int(i) for i in self.perm))
        if len(self.blocks) != len(self.perm) or not is_permutation(self.perm):
            raise MalformedInputError(f"{len(self.blocks)} blocks with permutation {self.perm}")
        for block in self.blocks:
            det = _block_det(block) % d
            if self.flavor is Flavor.SL and det != 1:
                raise MalformedInputError(f"block {block} has determinant {det}, not 1")
            if not self.spec.is_unit(det):
                raise MalformedInputError(f"block {block} is not invertible over {self.spec}")

    @classmethod
    def identity(cls, n: int, spec: RingSpec) -> 'MonomialMap':
        return cls((IDENTITY_BLOCK,) * n, tuple(range(n)), spec)

    @classmethod
    def permutation(cls, perm: Sequence[int], spec: RingSpec) -> 'MonomialMap':
        """tau_sigma: permute slots, identity blocks."""
        return cls((IDENTITY_BLOCK,) * len(perm), tuple(perm), spec)

    @classmethod
    def tau(cls, slot: int, n: int, spec: RingSpec) -> 'MonomialMap':
        """tau_i: J in one slot, identity elsewhere."""
        blocks = [IDENTITY_BLOCK] * n
        blocks[slot] = J
        return cls(tuple(blocks), tuple(range(n)), spec)

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        return apply_monomial(self, vector)

    def matrix(self) -> Matrix:
        """F with v @ F = apply(v) in the (a | b) layout."""
        size = 2 * self.n
        rows = [self.apply(tuple(1 if j == i else 0 for j in range(size))) for i in range(size)]
        return Matrix(rows, self.spec, cols=size)

    def key(self) -> Tuple:
        return self.perm, self.blocks

    def __str__(self):
        blocks = ' '.join('[' + ','.join(str(x) for row in block for x in row) + ']' for block in self.blocks)
        return f"{blocks} perm={format_cycles(self.perm)}"


def apply_monomial(monomial: MonomialMap, vector: Sequence[int]) -> Tuple[int, ...]:
    if len(vector) != 2 * monomial.n:
        raise MalformedInputError(f"vector of length {len(vector)} for a map on {monomial.n} slots")
    d = monomial.spec.modulus
    pairs = gamma(vector)
    image = []
    for block, source in zip(monomial.blocks, monomial.perm):
        x, z = pairs[2 * source], pairs[2 * source + 1]
        (a, b), (c, e) = block
        image.extend(((x * a + z * c) % d, (x * b + z * e) % d))
    return gamma_inv(image)


def _key(array: np.ndarray) -> Key:
    return tuple(tuple(int(x) for x in row) for row in array)


def mulclose(generators: Sequence[np.ndarray], identity: np.ndarray, modulus: int,
             limit: Optional[int] = None) -> Dict[Key, np.ndarray]:
    """Close a set of invertible matrices under multiplication."""
    found = {_key(identity): identity}
    frontier = [identity]
    while frontier:
        grown = []
        for element in frontier:
            for generator in generators:
                product_ = np.mod(element @ generator, modulus)
                key = _key(product_)
                if key not in found:
                    found[key] = product_
                    grown.append(product_)
                    if limit is not None and len(found) > limit:
                        return found
        frontier = grown
    return found


class IsometrySubgroup:
    """A subgroup of GL_k(F_q) given by all of its elements.

    Construction picks generators greedily and checks that they generate
    exactly the given set, which certifies the group axioms.

    :param elements: The k x k matrices.
    :param k: Matrix size.
    :param spec: The residue field.
    :param name: Optional label used in reports.
    """

    def __init__(self, elements: Iterable[Matrix], k: int, spec: RingSpec, name: Optional[str] = None,
                 verify: bool = True):
        self.k = k
        self.spec = spec
        self.name = name
        self._elements: Dict[Key, Matrix] = {}
        for element in elements:
            if element.shape != (k, k) or element.spec != spec:
                raise MalformedInputError(f"{element!r} is not a {k}x{k} matrix over {spec}")
            self._elements.setdefault(element.key(), element)
        self.generators = self._pick_generators()
        if verify:
            self.verify()

    @classmethod
    def trivial(cls, k: int, spec: RingSpec, name: Optional[str] = None) -> 'IsometrySubgroup':
        return cls([Matrix.identity(k, spec)], k, spec, name=name)

    @classmethod
    def full(cls, k: int, spec: RingSpec, max_enum: Optional[int] = None) -> 'IsometrySubgroup':
        return cls(enumerate_group(spec, GroupShape.GL, k, max_enum), k, spec, name=f"GL_{k}({spec})")

    def _pick_generators(self) -> List[Matrix]:
        identity = np.eye(self.k, dtype=np.int64)
        generators, span = [], {_key(identity)}
        for key in sorted(self._elements):
            if key not in span:
                generators.append(self._elements[key])
                span = set(mulclose([g.array for g in generators], identity, self.spec.modulus,
                                    limit=len(self._elements)))
        return generators

    def verify(self) -> 'IsometrySubgroup':
        identity = np.eye(self.k, dtype=np.int64)
        if _key(identity) not in self._elements:
            raise MalformedInputError("the identity is missing, so this is not a group")
        closed = mulclose([g.array for g in self.generators], identity, self.spec.modulus,
                          limit=len(self._elements))
        if set(closed) != set(self._elements):
            raise MalformedInputError(f"{len(self._elements)} matrices are not closed under multiplication")
        return self

    @property
    def order(self) -> int:
        return len(self._elements)

    def __len__(self):
        return self.order

    def __iter__(self):
        return (self._elements[key] for key in sorted(self._elements))

    def __contains__(self, element: Matrix) -> bool:
        return element.key() in self._elements

    def keys(self) -> frozenset:
        return frozenset(self._elements)

    def __eq__(self, other):
        if not isinstance(other, IsometrySubgroup):
            return NotImplemented
        return self.k == other.k and self.spec == other.spec and self.keys() == other.keys()

    def __hash__(self):
        return hash((self.k, self.spec, self.keys()))

    def issubset(self, other: 'IsometrySubgroup') -> bool:
        return self.keys() <= other.keys()

    def __repr__(self):
        label = f"{self.name}, " if self.name else ''
        return f"<IsometrySubgroup {label}order {self.order} in GL_{self.k}({self.spec})>"

    def to_json(self, include_elements: bool = False) -> dict:
        result = {'k': self.k, 'field': str(self.spec), 'order': self.order,
                  'generators': [list(map(list, g.key())) for g in self.generators]}
        if include_elements:
            result['elements'] = [list(map(list, key)) for key in sorted(self._elements)]
        return result


@dataclass(frozen=True)
class CodeMapWitness:
    """B with f(xG) = xBG' for a map f from source onto target, and the monomial map behind f if known."""
    B: Matrix
    source: StabilizerCode = field(repr=False)
    target: StabilizerCode = field(repr=False)
    monomial: Optional[MonomialMap] = None

    def to_json(self) -> dict:
        result = {'B': [list(row) for row in self.B.key()]}
        if self.monomial is not None:
            result['blocks'] = [[x for row in block for x in row] for block in self.monomial.blocks]
            result['perm'] = [i + 1 for i in self.monomial.perm]
        return result


@dataclass
class MonomialSearchResult:
    """Outcome of a monomial search: every map found and the distinct matrices they induce."""
    maps: List[MonomialMap]
    witnesses: List[CodeMapWitness]
    nodes: int

    @property
    def map_count(self) -> int:
        return len(self.maps)

    @property
    def matrix_count(self) -> int:
        return len(self.witnesses)


def _residue_pair(source: StabilizerCode, target: StabilizerCode) -> Tuple[StabilizerCode, StabilizerCode]:
    if source.n != target.n or source.spec != target.spec:
        raise MalformedInputError(f"codes of length {source.n} over {source.spec} and {target.n} over {target.spec}")
    return socle_reduce(source), socle_reduce(target)


def _index_weights(code: StabilizerCode) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All coefficient vectors x, base-q index weights, and wt_s(xG) in index order."""
    q, k = code.spec.modulus, code.generators.rows
    coefficients = np.array(list(product(range(q), repeat=k)), dtype=np.int64).reshape(q ** k, k)
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    weights = symp_weights(np.mod(coefficients @ code.generators.array, q))
    return coefficients, powers, weights


def phi(code: StabilizerCode, target: StabilizerCode, images: Matrix) -> Optional[Matrix]:
    """The B with images = B G', solved on the pivot columns of G'; None if a row leaves the target."""
    canonical = canonicalize(target.generators)
    pivots = list(canonical.pivots)
    if len(pivots) != target.generators.rows:
        raise MalformedInputError("the target generators are not independent")
    try:
        restricted_inverse = inverse(target.generators.take_columns(pivots))
    except NonInvertibleError:
        raise MalformedInputError("the target generators do not have an information set")
    B = images.take_columns(pivots) @ restricted_inverse
    if B @ target.generators != images:
        return None
    return B


def is_isometry_matrix(code: StabilizerCode, target: StabilizerCode, B: Matrix, preserve_form: bool = True) -> bool:
    """wt_s(xBG') = wt_s(xG) for all x, and optionally <xBG', yBG'> = <xG, yG>."""
    source_q, target_q = _residue_pair(code, target)
    if B.shape != (source_q.k, target_q.k):
        return False
    return _IsometryCheck(source_q, target_q, preserve_form)(B)


def _gram(code: StabilizerCode) -> np.ndarray:
    return (code.generators @ symplectic_gram(code.n, code.spec) @ code.generators.T).array


class _IsometryCheck:
    """Predicate B -> wt_s(xBG') = wt_s(xG) for all x, via a lookup of target weights by base-q index."""

    def __init__(self, source: StabilizerCode, target: StabilizerCode, preserve_form: bool = True):
        self.q = source.spec.modulus
        self.coefficients, self.powers, self.weights = _index_weights(source)
        _, _, self.target_weights = _index_weights(target)
        self.grams = None
        if preserve_form and not (source.self_orthogonal and target.self_orthogonal):
            self.grams = _gram(source), _gram(target)

    def plausible(self) -> bool:
        return np.array_equal(np.sort(self.weights), np.sort(self.target_weights))

    def __call__(self, B: Matrix) -> bool:
        array = B.array
        index = np.mod(self.coefficients @ array, self.q) @ self.powers
        if not np.array_equal(self.target_weights[index], self.weights):
            return False
        if self.grams is not None:
            source_gram, target_gram = self.grams
            return np.array_equal(np.mod(array @ target_gram @ array.T, self.q), source_gram)
        return True


def symp_between(code: StabilizerCode, target: StabilizerCode, max_enum: Optional[int] = None,
                 search: Optional[ShardedSearch] = None, preserve_form: bool = True) -> List[CodeMapWitness]:
    """Every B in GL_k(F_q) with wt_s(xG) = wt_s(xBG') for all x (and form preservation).

    :param preserve_form: Also require the symplectic form to be preserved;
        automatic when both codes are self-orthogonal. Pass False for the
        weight-only group Iso(C) of a linear code.
    """
    source_q, target_q = _residue_pair(code, target)
    if source_q.k != target_q.k:
        return []
    check = _IsometryCheck(source_q, target_q, preserve_form)
    if not check.plausible():
        return []
    candidates = enumerate_group(source_q.spec, GroupShape.GL, source_q.k, max_enum)
    found = resolve_search(search).filter(check, candidates, key=lambda B: B.key())
    return [CodeMapWitness(B=B, source=code, target=target) for B in found]


def symp_group(code: StabilizerCode, max_enum: Optional[int] = None,
               search: Optional[ShardedSearch] = None) -> IsometrySubgroup:
    """Symp(C) as a subgroup of GL_k(F_q)."""
    witnesses = symp_between(code, code, max_enum=max_enum, search=search)
    residue = socle_reduce(code)
    return IsometrySubgroup([w.B for w in witnesses], residue.k, residue.spec, name='Symp')


def iso_group(code: StabilizerCode, max_enum: Optional[int] = None,
              search: Optional[ShardedSearch] = None) -> IsometrySubgroup:
    """Iso(C): weight preservation only, for linear codes that need not be self-orthogonal."""
    witnesses = symp_between(code, code, max_enum=max_enum, search=search, preserve_form=False)
    residue = socle_reduce(code)
    return IsometrySubgroup([w.B for w in witnesses], residue.k, residue.spec, name='Iso')


def _encode(pairs: np.ndarray, q: int) -> np.ndarray:
    """Base-q integer of each row."""
    result = np.zeros(pairs.shape[0], dtype=np.int64)
    for column in range(pairs.shape[1]):
        result = result * q + pairs[:, column]
    return result


class _MonomialSearch:
    """Depth-first search choosing, slot by slot, the source slot sigma(i) and the block A_i.

    A partial choice survives only when the prefix of every image codeword is
    the prefix of some target codeword.
    """

    def __init__(self, source: StabilizerCode, target: StabilizerCode, flavor: Flavor, cap: int):
        self.q = source.spec.modulus
        self.n = source.n
        self.cap = cap
        self.blocks = [tuple(map(tuple, block.key())) for block in enumerate_group(source.spec, flavor.shape, 2)]
        interleaved = source.codeword_array[:, gamma_permutation(source.n)]
        target_words = target.codeword_array[:, gamma_permutation(target.n)]
        self.prefixes = [set(_encode(target_words[:, :2 * (i + 1)], self.q).tolist()) for i in range(self.n)]
        arrays = [np.array(block, dtype=np.int64) for block in self.blocks]
        self.contributions = [[_encode(np.mod(interleaved[:, 2 * s:2 * s + 2] @ A, self.q), self.q) for A in arrays]
                              for s in range(self.n)]

    def run(self, first_slot: int) -> Tuple[List[Tuple[Tuple[int, ...], Tuple[int, ...]]], int]:
        """All (perm, block indices) with sigma(0) = first_slot, plus the number of nodes visited."""
        found, nodes = [], 0
        scale = self.q ** 2
        stack = [((), (), np.zeros(len(self.contributions[0][0]), dtype=np.int64))]
        while stack:
            perm, chosen, codes = stack.pop()
            if len(perm) == self.n:
                found.append((perm, chosen))
                continue
            depth = len(perm)
            sources = [first_slot] if depth == 0 else [s for s in range(self.n) if s not in perm]
            children = []
            for source in sources:
                for b, contribution in enumerate(self.contributions[source]):
                    nodes += 1
                    if nodes > self.cap:
                        raise EnumerationCapError(f"monomial search visited more than {self.cap} nodes")
                    extended = codes * scale + contribution
                    if all(code in self.prefixes[depth] for code in extended.tolist()):
                        children.append((perm + (source,), chosen + (b,), extended))
            stack.extend(reversed(children))
        return found, nodes


def monomial_between(code: StabilizerCode, target: StabilizerCode, flavor: Flavor = Flavor.SL,
                     max_enum: Optional[int] = None, search: Optional[ShardedSearch] = None) -> MonomialSearchResult:
    """Every monomial map M of the given flavor with C M = C', and the distinct B = Phi(M|C).

    The cap bounds the number of search nodes visited, not the nominal
    number of monomial maps, since prefix pruning cuts most of the tree.
    """
    source_q, target_q = _residue_pair(code, target)
    cap = resolve_max_enum(max_enum)
    if source_q.size != target_q.size:
        return MonomialSearchResult(maps=[], witnesses=[], nodes=0)
    spec = source_q.spec
    if source_q.n == 0:
        witnesses = [CodeMapWitness(B=Matrix.identity(source_q.k, spec), source=code, target=target,
                                    monomial=MonomialMap((), (), spec, flavor))]
        return MonomialSearchResult(maps=[witnesses[0].monomial], witnesses=witnesses, nodes=1)
    engine = _MonomialSearch(source_q, target_q, flavor, cap)
    shards = resolve_search(search).map_shards(engine.run, list(range(source_q.n)))
    nodes = sum(count for _, count in shards)
    guard_enumeration(nodes, cap, "monomial search")
    maps = [MonomialMap(tuple(engine.blocks[b] for b in chosen), perm, spec, flavor)
            for hits, _ in shards for perm, chosen in hits]
    maps.sort(key=MonomialMap.key)
    witnesses: Dict[Key, CodeMapWitness] = {}
    for monomial in maps:
        images = source_q.generators @ monomial.matrix()
        B = phi(source_q, target_q, images)
        if B is None:
            raise MalformedInputError(f"monomial map {monomial} does not map onto the target")
        witnesses.setdefault(B.key(), CodeMapWitness(B=B, source=code, target=target, monomial=monomial))
    return MonomialSearchResult(maps=maps, witnesses=[witnesses[key] for key in sorted(witnesses)], nodes=nodes)


def rmon_sl_between(code: StabilizerCode, target: StabilizerCode, max_enum: Optional[int] = None,
                    search: Optional[ShardedSearch] = None) -> List[CodeMapWitness]:
    return monomial_between(code, target, Flavor.SL, max_enum=max_enum, search=search).witnesses


def rmon_between(code: StabilizerCode, target: StabilizerCode, max_enum: Optional[int] = None,
                 search: Optional[ShardedSearch] = None) -> List[CodeMapWitness]:
    return monomial_between(code, target, Flavor.GL, max_enum=max_enum, search=search).witnesses


def monomial_group(code: StabilizerCode, flavor: Flavor = Flavor.SL, max_enum: Optional[int] = None,
                   search: Optional[ShardedSearch] = None) -> Tuple[IsometrySubgroup, MonomialSearchResult]:
    """The group of matrices induced by monomial maps fixing C, with the search result behind it."""
    name = 'rMon_SL' if flavor is Flavor.SL else 'rMon'
    result = monomial_between(code, code, flavor, max_enum=max_enum, search=search)
    residue = socle_reduce(code)
    group = IsometrySubgroup([w.B for w in result.witnesses], residue.k, residue.spec, name=name)
    return group, result


def rmon_sl_group(code: StabilizerCode, max_enum: Optional[int] = None,
                  search: Optional[ShardedSearch] = None) -> IsometrySubgroup:
    """rMon_SL(C): matrices induced by SL_2-monomial maps fixing C."""
    return monomial_group(code, Flavor.SL, max_enum, search)[0]


def rmon_group(code: StabilizerCode, max_enum: Optional[int] = None,
               search: Optional[ShardedSearch] = None) -> IsometrySubgroup:
    """rMon(C): matrices induced by GL_2-monomial maps fixing C."""
    return monomial_group(code, Flavor.GL, max_enum, search)[0]


def monomial_counts(code: StabilizerCode, flavor: Flavor = Flavor.SL, max_enum: Optional[int] = None,
                    search: Optional[ShardedSearch] = None) -> Tuple[int, int]:
    """(number of monomial maps fixing C, number of distinct induced matrices)."""
    result = monomial_between(code, code, flavor, max_enum=max_enum, search=search)
    return result.map_count, result.matrix_count


class Action(Enum):
    """Orbit spaces for closures: O (scalar classes of F_q^k) and O# (GL_2-classes of k x 2 matrices)."""
    POINTS = 'O'
    PAIRS = 'O#'

    @classmethod
    def parse(cls, label: str) -> 'Action':
        for action in cls:
            if label in (action.value, action.name.lower()):
                return action
        raise MalformedInputError(f"unknown action {label!r}; use O or O#")


def _point_classes(k: int, q: int, action: Action) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All points as arrays, their base-q indices, and the class id of each index."""
    spec = RingSpec.prime_field(q)
    width = 2 if action is Action.PAIRS else 1
    flat = np.array(list(product(range(q), repeat=k * width)), dtype=np.int64).reshape(q ** (k * width), k * width)
    points = flat.reshape(-1, k, width)
    representatives: Dict[Key, int] = {}
    classes = np.zeros(len(flat), dtype=np.int64)
    for index, point in enumerate(points):
        if action is Action.PAIRS:
            key = canonicalize(Matrix(point.T, spec, cols=k)).form.key()
        else:
            vector = point[:, 0]
            nonzero = np.flatnonzero(vector)
            scaled = vector if nonzero.size == 0 else np.mod(vector * spec.inverse(int(vector[nonzero[0]])), q)
            key = (tuple(int(x) for x in scaled),)
        classes[index] = representatives.setdefault(key, len(representatives))
    powers = q ** np.arange(k * width - 1, -1, -1, dtype=np.int64)
    return points, powers, classes


def _act(g: np.ndarray, points: np.ndarray, powers: np.ndarray, q: int, action: Action) -> np.ndarray:
    """Index of the image of every point: x -> x g on O, Y -> g Y on O#."""
    if action is Action.PAIRS:
        images = np.mod(np.einsum('ij,njw->niw', g, points), q)
    else:
        images = np.mod(np.einsum('nj,ji->ni', points[:, :, 0], g), q)[:, :, None]
    return images.reshape(len(points), -1) @ powers


def closure(group: IsometrySubgroup, action: Action, max_enum: Optional[int] = None,
            search: Optional[ShardedSearch] = None) -> IsometrySubgroup:
    """All g in GL_k(F_q) that map every H-orbit of the orbit space onto itself."""
    k, q = group.k, group.spec.modulus
    guard_enumeration(group_order(group.spec, GroupShape.GL, k), max_enum, f"closure in GL_{k}")
    points, powers, classes = _point_classes(k, q, action)
    labels = np.arange(classes.max() + 1)
    for h in group:
        image_classes = classes[_act(h.array, points, powers, q, action)]
        np.minimum.at(labels, classes, image_classes)
    point_labels = labels[classes]

    def predicate(g: Matrix) -> bool:
        return np.array_equal(labels[classes[_act(g.array, points, powers, q, action)]], point_labels)

    found = resolve_search(search).filter(predicate, enumerate_group(group.spec, GroupShape.GL, k, max_enum),
                                          key=lambda g: g.key())
    return IsometrySubgroup(found, k, group.spec, name=f"closure({group.name or 'H'}, {action.value})")


def is_closed(group: IsometrySubgroup, action: Action, max_enum: Optional[int] = None,
              search: Optional[ShardedSearch] = None) -> bool:
    return closure(group, action, max_enum=max_enum, search=search) == group


@dataclass
class StructureReport:
    """Isometries of the full space R^2n against the matrices of SL_2-monomial maps."""
    n: int
    spec: RingSpec
    isometries: int
    monomials: int
    equal: bool

    def to_json(self) -> dict:
        return {'n': self.n, 'ring': str(self.spec), 'isometries': self.isometries,
                'monomials': self.monomials, 'equal': self.equal}


def verify_structure_theorem(n: int, spec: RingSpec, max_enum: Optional[int] = None,
                             search: Optional[ShardedSearch] = None) -> StructureReport:
    """Compare the weight-and-form preserving elements of GL_2n(R) with the SL_2-monomial matrices."""
    size = 2 * n
    d = spec.modulus
    vectors = np.array(list(product(range(d), repeat=size)), dtype=np.int64).reshape(-1, size)
    weights = symp_weights(vectors)
    gram = symplectic_gram(n, spec).array

    def predicate(F: Matrix) -> bool:
        M = F.array
        if not np.array_equal(np.mod(M @ gram @ M.T, d), np.mod(gram, d)):
            return False
        return np.array_equal(symp_weights(np.mod(vectors @ M, d)), weights)

    isometries = resolve_search(search).filter(predicate, enumerate_group(spec, GroupShape.GL, size, max_enum),
                                               key=lambda F: F.key())
    blocks = [tuple(map(tuple, b.key())) for b in enumerate_group(spec, GroupShape.SL, 2, max_enum)]
    guard_enumeration(len(blocks) ** n * group_order(spec, GroupShape.SYMMETRIC, n), max_enum, "monomial maps")
    monomials = {MonomialMap(choice, perm, spec).matrix().key()
                 for perm in enumerate_group(spec, GroupShape.SYMMETRIC, n)
                 for choice in product(blocks, repeat=n)}
    isometry_keys = {F.key() for F in isometries}
    return StructureReport(n=n, spec=spec, isometries=len(isometry_keys), monomials=len(monomials),
                           equal=isometry_keys == monomials)
