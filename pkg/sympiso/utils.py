from math import gcd
from os import environ
from typing import Optional

from sympy import mod_inverse

from sympiso.exceptions import EnumerationCapError, MalformedInputError

DEFAULT_MAX_ENUM = 2 ** 20
MAX_ENUM_VARIABLE = 'SYMPISO_MAX_ENUM'


def resolve_max_enum(max_enum: Optional[int] = None) -> int:
    """Resolve the enumeration cap.

    :param max_enum: Explicit cap. If None, the environment variable
        SYMPISO_MAX_ENUM is consulted, then the default of 2**20.
    :return: The cap as a positive integer.
    """
    if max_enum is None:
        raw = environ.get(MAX_ENUM_VARIABLE)
        if raw is None:
            return DEFAULT_MAX_ENUM
        try:
            max_enum = int(raw)
        except ValueError:
            raise MalformedInputError(f"{MAX_ENUM_VARIABLE} must be an integer, got {raw!r}")
    if max_enum < 1:
        raise MalformedInputError(f"enumeration cap must be positive, got {max_enum}")
    return max_enum


def guard_enumeration(size: int, max_enum: Optional[int], what: str) -> int:
    """Refuse to enumerate a search space larger than the cap.

    :param size: Nominal size of the search space.
    :param max_enum: Cap, resolved with `resolve_max_enum`.
    :param what: Description used in the error message.
    :return: The resolved cap.
    """
    cap = resolve_max_enum(max_enum)
    if size > cap:
        raise EnumerationCapError(f"{what}: search space of size {size} exceeds the cap of {cap}")
    return cap


def unit_normalizer(value: int, modulus: int) -> int:
    """Return a unit u of Z/modulus with u * value = gcd(value, modulus) (mod modulus)."""
    value %= modulus
    g = gcd(value, modulus)
    if value == 0:
        return 1
    reduced = modulus // g
    base = mod_inverse(value // g, reduced) if reduced > 1 else 0
    candidate = base
    while gcd(candidate, modulus) != 1:
        candidate += reduced
    return candidate % modulus
