import re
from typing import List, Sequence, Set, Tuple

from sympiso.exceptions import MalformedInputError

_CYCLE = re.compile(r'\(([^()]*)\)')


def identify_cycles(perm: Sequence[int]) -> List[Set[int]]:
    """Identify all cycles of a permutation given as a tuple of images.

    A cycle is found by following this procedure: given an index, look up
    its image, then the image of that, until one returns to the original index.

    :param perm: perm[i] is the image of i.
    :return: A list of cycles, fixed points included.
    """
    indices = set(range(len(perm)))
    cycles = []
    while indices:
        start = min(indices)
        cycle, index = set(), start
        while index not in cycle:
            cycle.add(index)
            index = perm[index]
        indices.difference_update(cycle)
        cycles.append(cycle)
    return cycles


def is_permutation(perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(len(perm)))


def parse_cycles(text: str, n: int) -> Tuple[int, ...]:
    """parse_cycles('(123)', 3) -> (1, 2, 0); slots are one-based, digits may be space separated."""
    perm = list(range(n))
    stripped = text.replace(' ', '')
    if stripped in ('', '()', 'id'):
        return tuple(perm)
    if _CYCLE.sub('', text).strip():
        raise MalformedInputError(f"cannot parse cycle notation {text!r}")
    for body in _CYCLE.findall(text):
        tokens = re.split(r'[\s,]+', body.strip()) if re.search(r'[\s,]', body.strip()) else list(body)
        try:
            points = [int(token) - 1 for token in tokens if token]
        except ValueError:
            raise MalformedInputError(f"cannot parse cycle {body!r}")
        if any(not 0 <= p < n for p in points) or len(set(points)) != len(points):
            raise MalformedInputError(f"cycle {body!r} is not a cycle on {n} points")
        for here, there in zip(points, points[1:] + points[:1]):
            perm[here] = there
    if not is_permutation(perm):
        raise MalformedInputError(f"cycles {text!r} overlap")
    return tuple(perm)


def format_cycles(perm: Sequence[int]) -> str:
    """Cycle notation with one-based slots; fixed points are omitted."""
    parts = []
    for cycle in identify_cycles(perm):
        if len(cycle) == 1:
            continue
        start = min(cycle)
        points, index = [start], perm[start]
        while index != start:
            points.append(index)
            index = perm[index]
        parts.append('(' + ' '.join(str(p + 1) for p in points) + ')')
    return ''.join(parts) or '()'


def parse_one_based(tokens: Sequence[str]) -> Tuple[int, ...]:
    """Images written one-based, as in 'perm: 2 3 1'."""
    try:
        perm = tuple(int(token) - 1 for token in tokens)
    except ValueError:
        raise MalformedInputError(f"permutation images must be integers, got {list(tokens)}")
    if not is_permutation(perm):
        raise MalformedInputError(f"{' '.join(tokens)} is not a permutation")
    return perm
