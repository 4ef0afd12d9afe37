"""Catalog of model constructors keyed by ModelLabel."""

from __future__ import annotations

from ..sts import ModelLabel, TripleSystem, Z4Grading
from . import classical, g2, realforms, split
from .e8 import build_e8_split, e8_grading

ALIASES = {("e6nonsplit", 3): "e6su33", ("e6nonsplit", 5): "e6su51"}

# parameters of the families sampled by the acceptance suite
SMALL_PARAMETERS = {
    "special": [{"n": n} for n in (1, 2, 3)],
    "symplectic": [{"n": n} for n in (1, 2, 3)],
    "quaternionic": [{"n": n} for n in (1, 2, 3)],
    "orthogonal": [{"p": 3, "q": 0}, {"p": 2, "q": 1}, {"p": 4, "q": 0}, {"p": 3, "q": 1}, {"p": 2, "q": 2}],
    "unitarian": [{"p": p, "q": q} for s in range(1, 5) for q in range(s + 1) for p in [s - q] if p >= q],
}

_BUILDERS = {
    "special": lambda P: classical.build_special(P["n"]),
    "symplectic": lambda P: classical.build_symplectic(P["n"]),
    "quaternionic": lambda P: classical.build_quaternionic(P["n"]),
    "orthogonal": lambda P: classical.build_orthogonal(P["p"], P["q"]),
    "unitarian": lambda P: classical.build_unitarian(P["p"], P["q"]),
    "g2": lambda P: g2.build_g2(),
    "f4": lambda P: split.build_f4(),
    "e6split": lambda P: split.build_e6_split(),
    "e6su33": lambda P: realforms.build_e6_nonsplit(3),
    "e6su51": lambda P: realforms.build_e6_nonsplit(5),
    "e7split": lambda P: split.build_e7_split(),
    "e7so102": lambda P: realforms.build_e7_so102(),
    "e7sostar": lambda P: realforms.build_e7_sostar(),
    "e8split": lambda P: build_e8_split(),
    "e8nonsplit": lambda P: realforms.build_e8_nonsplit(),
}

_GRADINGS = {
    "special": lambda P: classical.special_grading(P["n"]),
    "symplectic": lambda P: classical.symplectic_grading(P["n"]),
    "quaternionic": lambda P: classical.quaternionic_grading(P["n"]),
    "orthogonal": lambda P: classical.orthogonal_grading(P["p"], P["q"]),
    "unitarian": lambda P: classical.unitarian_grading(P["p"], P["q"]),
    "g2": lambda P: g2.g2_grading(),
    "f4": lambda P: split.f4_grading(),
    "e6split": lambda P: split.e6_grading(),
    "e6su33": lambda P: realforms.e6_nonsplit_grading(3),
    "e6su51": lambda P: realforms.e6_nonsplit_grading(5),
    "e7split": lambda P: split.e7_grading(),
    "e7so102": lambda P: realforms.e7_so102_grading(),
    "e7sostar": lambda P: realforms.e7_sostar_grading(),
    "e8split": lambda P: e8_grading(),
    "e8nonsplit": lambda P: realforms.e8_nonsplit_grading(),
}

_CACHE: dict = {}


def make_label(family: str, **params) -> ModelLabel:
    """ModelLabel from a family name and parameters, resolving the e6nonsplit alias."""
    if family == "e6nonsplit":
        p = params.pop("p", None)
        if params or (family, p) not in ALIASES:
            raise ValueError("e6nonsplit takes p in {3, 5}")
        return ModelLabel(ALIASES[(family, p)])
    return ModelLabel.of(family, **params)


def build(label: ModelLabel) -> TripleSystem:
    """Build (and memoize) the triple system for a label."""
    if label not in _CACHE:
        _CACHE[label] = _BUILDERS[label.family](dict(label.params))
    return _CACHE[label]


def z4_grading_for(label: ModelLabel) -> Z4Grading:
    return _GRADINGS[label.family](dict(label.params))


def catalog_labels(small=True) -> list:
    """One label per exceptional family plus the sampled classical parameters."""
    out = []
    for family, plist in SMALL_PARAMETERS.items():
        out.extend(ModelLabel.of(family, **P) for P in (plist if small else plist[:1]))
    out.extend(ModelLabel(f) for f in _BUILDERS if f not in SMALL_PARAMETERS)
    return out


__all__ = ["ALIASES", "SMALL_PARAMETERS", "build", "catalog_labels", "make_label", "z4_grading_for"]
