"""
Serializers read and write the files `sympiso` works with: stabilizer codes
(plain text or json), monomial maps (plain text) and stabilizer states
(json). The `CodeSerializer` dispatches on the file extension, much like a
checkpointing serializer picks between pickle and json.

Code files look like::

    # comments are allowed
    ring=F2 n=5 k=3
    0 1 1 1 1 0 0 0 0 0
    ...

with one generator per line in (a | b) order, or in (a_1, b_1, ..., a_n, b_n)
order when the header carries `layout=interleaved`.
"""
import json
import re
from datetime import datetime
from os.path import exists, isdir, join
from typing import Optional, Union

from sympiso.algebra import RingSpec
from sympiso.exceptions import MalformedInputError
from sympiso.helpers.permutation import parse_one_based
from sympiso.isometry import Flavor, MonomialMap
from sympiso.matrix import Matrix
from sympiso.quantum import StateBasis
from sympiso.stabcode import StabilizerCode, gamma_inv

_HEADER_FIELD = re.compile(r'^(?P<key>[a-z]+)=(?P<value>\S+)$')
_LAYOUTS = ('standard', 'interleaved')

Serializable = Union[StabilizerCode, MonomialMap, StateBasis]


def _content_lines(text: str):
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            yield line


def _parse_header(line: str) -> dict:
    fields = {}
    for token in line.split():
        match = _HEADER_FIELD.match(token)
        if match is None:
            raise MalformedInputError(f"bad header field {token!r}")
        fields[match.group('key')] = match.group('value')
    missing = {'ring', 'n'} - set(fields)
    if missing:
        raise MalformedInputError(f"code header lacks {', '.join(sorted(missing))}")
    return fields


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedInputError(f"{what} must be an integer, got {token!r}")


def parse_code(text: str, name: Optional[str] = None) -> StabilizerCode:
    """Read a code file.

    :raises MalformedInputError: on a bad header, a wrong row length or a row
        count that disagrees with k.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise MalformedInputError("empty code file")
    header = _parse_header(lines[0])
    spec = RingSpec.parse(header['ring'])
    n = _parse_int(header['n'], 'n')
    layout = header.get('layout', 'standard')
    if layout not in _LAYOUTS:
        raise MalformedInputError(f"unknown layout {layout!r}")
    rows = [[_parse_int(token, 'entry') for token in line.split()] for line in lines[1:]]
    if 'k' in header and _parse_int(header['k'], 'k') != len(rows):
        raise MalformedInputError(f"header says k={header['k']} but the file has {len(rows)} rows")
    for row in rows:
        if len(row) != 2 * n:
            raise MalformedInputError(f"row {row} has {len(row)} entries, expected {2 * n}")
    if layout == 'interleaved':
        rows = [list(gamma_inv(row)) for row in rows]
    return StabilizerCode(Matrix(rows, spec, cols=2 * n), name=name)


def format_code(code: StabilizerCode, layout: str = 'standard') -> str:
    if layout not in _LAYOUTS:
        raise MalformedInputError(f"unknown layout {layout!r}")
    matrix = code.interleaved() if layout == 'interleaved' else code.generators
    header = f"ring={code.spec} n={code.n} k={matrix.rows}"
    if layout == 'interleaved':
        header += " layout=interleaved"
    lines = [f"# {code.name}"] if code.name else []
    lines.append(header)
    lines.extend(' '.join(str(x) for x in row) for row in matrix.to_rows())
    return '\n'.join(lines) + '\n'


def code_to_json(code: StabilizerCode) -> dict:
    return {'kind': 'code', 'ring': str(code.spec), 'n': code.n, 'k': code.generators.rows,
            'generators': code.generators.to_rows(), 'name': code.name}


def code_from_json(data: dict) -> StabilizerCode:
    try:
        spec = RingSpec.parse(data['ring'])
        n = int(data['n'])
        return StabilizerCode(Matrix(data['generators'], spec, cols=2 * n), name=data.get('name'))
    except (KeyError, TypeError) as error:
        raise MalformedInputError(f"malformed code json: {error}")


def parse_map(text: str, spec: RingSpec, flavor: Flavor = Flavor.SL) -> MonomialMap:
    """Read n lines `a b c d` (row-major blocks) and a final `perm: i1 ... in` line."""
    lines = list(_content_lines(text))
    if not lines or not lines[-1].startswith('perm:'):
        raise MalformedInputError("map file must end with a 'perm:' line")
    perm = parse_one_based(lines[-1][len('perm:'):].split())
    blocks = []
    for line in lines[:-1]:
        values = [_parse_int(token, 'block entry') for token in line.split()]
        if len(values) != 4:
            raise MalformedInputError(f"block line {line!r} needs 4 entries")
        blocks.append(((values[0], values[1]), (values[2], values[3])))
    if len(blocks) != len(perm):
        raise MalformedInputError(f"{len(blocks)} blocks but a permutation of {len(perm)} slots")
    return MonomialMap(tuple(blocks), perm, spec, flavor)


def format_map(monomial: MonomialMap) -> str:
    lines = [' '.join(str(x) for row in block for x in row) for block in monomial.blocks]
    lines.append('perm: ' + ' '.join(str(i + 1) for i in monomial.perm))
    return '\n'.join(lines) + '\n'


class CodeSerializer:
    """The CodeSerializer handles codes, monomial maps and states on disk.

    :param target: Default directory to dump into when no path is given.
    """

    def __init__(self, target: Optional[str] = None):
        self.target = target

    def dump(self, obj: Serializable, path: Optional[str] = None, method: str = 'text') -> str:
        """Write obj to path and return the path.

        :param method: One of 'text' or 'json'. Maps only have a text form,
            states only a json form.
        """
        if method not in ('text', 'json'):
            raise ValueError(f'Invalid serialization method "{method}". Choose "text" or "json".')
        if isinstance(obj, StateBasis):
            method = 'json'
        if isinstance(obj, MonomialMap):
            method = 'text'
        filename = path if path is not None else self._new_file(self.target, method)
        with open(filename, 'w') as file:
            file.write(self.dumps(obj, method=method))
        return filename

    @staticmethod
    def dumps(obj: Serializable, method: str = 'text') -> str:
        if isinstance(obj, StabilizerCode):
            return json.dumps(code_to_json(obj)) if method == 'json' else format_code(obj)
        if isinstance(obj, MonomialMap):
            return format_map(obj)
        if isinstance(obj, StateBasis):
            return json.dumps({'kind': 'state', **obj.to_json()})
        raise TypeError(f"cannot serialize {type(obj).__name__}")

    def load(self, path: str, spec: Optional[RingSpec] = None) -> Serializable:
        """Load a code, map or state.

        Text files holding a 'perm:' line are maps and need spec; other text
        files are codes. Json files say what they hold in their 'kind' field.
        """
        if not exists(path):
            raise FileNotFoundError(f'Cannot load from "{path}": file does not exist.')
        with open(path, 'r') as file:
            text = file.read()
        if path.endswith('.json'):
            return self.loads_json(text)
        if re.search(r'^\s*perm:', text, flags=re.MULTILINE):
            if spec is None:
                raise MalformedInputError(f"loading the map in {path} needs a ring")
            return parse_map(text, spec)
        return parse_code(text)

    @staticmethod
    def loads_json(text: str) -> Serializable:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            raise MalformedInputError(f"invalid json: {error}")
        kind = data.get('kind', 'state' if 'vectors' in data else 'code') if isinstance(data, dict) else None
        if kind == 'code':
            return code_from_json(data)
        if kind == 'state':
            return StateBasis.from_json(data)
        raise MalformedInputError(f"unknown json content of kind {kind!r}")

    @staticmethod
    def _new_file(target: Optional[str], method: str) -> str:
        if target is None:
            raise ValueError('Serializer requires a target to dump to.')
        if not isdir(target):
            raise FileNotFoundError(f'Cannot dump to "{target}": is not a directory.')
        result = join(target, datetime.now().strftime("%Y%m%d-%H%M%S.%f") + ('.json' if method == 'json' else '.txt'))
        if exists(result):
            raise FileExistsError(f'Cannot dump to "{result}": file exists.')
        return result
