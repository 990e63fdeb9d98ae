class SympisoError(Exception):
    pass


class NonInvertibleError(SympisoError, ArithmeticError):
    pass


class MalformedInputError(SympisoError, ValueError):
    pass


class EnumerationCapError(SympisoError, RuntimeError):
    pass


class UnsupportedRingError(SympisoError, ValueError):
    pass


class NotSelfOrthogonalError(SympisoError, ValueError):
    pass


class NotAStabilizerError(SympisoError, ValueError):
    pass


class CodeMembershipError(SympisoError, ValueError):
    pass


class VerificationError(SympisoError, AssertionError):
    pass
