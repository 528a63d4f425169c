"""inputs.py — Resolving variety references and identity files for the CLI."""

from functools import lru_cache
from pathlib import Path

from varietas.core.config import get_settings
from varietas.core.errors import InputError
from varietas.engine.presentation import (
    VarietyPresentation, load_identities, load_variety, named_variety, variety_names,
)
from varietas.terms.signature import JORDAN, LIE, Signature

SIGN_SIGNATURES = {"minus": LIE, "plus": JORDAN}


def find_path(ref: str, base: Path | None = None) -> Path | None:
    path = Path(ref)
    if path.exists():
        return path
    if base is not None and not path.is_absolute() and (base / path).exists():
        return base / path
    return None


@lru_cache(maxsize=None)
def load_ref(ref: str) -> VarietyPresentation:
    """A .var path, a built-in name, or a file <name>.var in the fixtures directory."""
    path = find_path(ref)
    if path is not None:
        return load_variety(path)
    if ref in variety_names():
        return named_variety(ref)
    fixture = Path(get_settings().fixtures_dir) / f"{ref}.var"
    if fixture.exists():
        return load_variety(fixture)
    raise InputError(f"no variety file or built-in variety named {ref!r}")


def load_ids(ref: str, sig: Signature, base: Path | None = None) -> list:
    path = find_path(ref, base)
    if path is None:
        raise InputError(f"identity file not found: {ref}")
    return load_identities(path, sig)


def sign_signature(sign: str) -> Signature:
    try:
        return SIGN_SIGNATURES[sign]
    except KeyError:
        raise InputError(f"sign must be plus or minus, got {sign!r}") from None
