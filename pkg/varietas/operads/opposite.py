"""opposite.py — The opposite variety: every product read right to left."""

from varietas.engine.presentation import VarietyPresentation
from varietas.terms.polynomial import mirror


def opposite(v: VarietyPresentation) -> VarietyPresentation:
    name = v.name[3:] if v.name.startswith("op-") else f"op-{v.name}"
    return VarietyPresentation(name, v.sig, tuple(mirror(f) for f in v.identities))
