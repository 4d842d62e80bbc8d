"""Duoidal structure checker.

Every command takes the text of a structure file and returns the decoded report,
with ``exit_code`` and ``outputs`` (constructed files keyed by stem) added.
"""

import json

from . import _duoidal

__all__ = ["validate", "construct", "roundtrip", "classify", "fixture", "fixture_catalog",
           "construct_targets", "size_budget", "set_size_budget"]

fixture_catalog = _duoidal.fixture_catalog
construct_targets = _duoidal.construct_targets
size_budget = _duoidal.size_budget
set_size_budget = _duoidal.set_size_budget


def _text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def validate(spec):
    return json.loads(_duoidal.validate(_text(spec)))


def construct(target, spec):
    return json.loads(_duoidal.construct(target, _text(spec)))


def roundtrip(spec):
    return json.loads(_duoidal.roundtrip(_text(spec)))


def classify(spec):
    return json.loads(_duoidal.classify(_text(spec)))


def fixture(name):
    """Catalog fixture as a dict. Raises ValueError for unknown names."""
    return json.loads(_duoidal.fixture(name))
