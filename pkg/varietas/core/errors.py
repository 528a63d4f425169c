"""
errors.py — Exception taxonomy.

Library code raises these; the CLI turns any VarietasError into a usage
message and exit status 2.
"""

from typing import Optional


class VarietasError(Exception):
    """Base class for every error the library raises on purpose."""


class InputError(VarietasError):
    """Malformed or inconsistent input (dimension mismatch, variable capture, ...)."""


class ParseError(InputError):
    def __init__(self, message: str, position: int = 0, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class NotMultilinearError(InputError):
    pass


class UnknownOperationError(InputError):
    pass


class DegreeCapError(InputError):
    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(f"degree {degree} exceeds the degree cap {cap}")


class BasisError(InputError):
    def __init__(self, message: str, monomial: Optional[str] = None):
        self.monomial = monomial
        if monomial is not None:
            message = f"{message}: {monomial}"
        super().__init__(message)


class VarietyFileError(InputError):
    def __init__(self, message: str, path: str = "", line: int = 0):
        self.path = path
        self.line = line
        where = f"{path}:{line}: " if path else ""
        super().__init__(f"{where}{message}")
