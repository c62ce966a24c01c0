"""Python face of the rough-structure workbench.

The compiled core exchanges JSON text; these wrappers accept and return
plain dicts/lists so callers never touch serialization. The raw bridge
stays available as ``rysw.raw``.
"""

import json

from . import _rysw as raw
from ._rysw import __version__, claim_ids, run_cli  # noqa: F401


def _dumps(document):
    return document if isinstance(document, str) else json.dumps(document)


def classify(map_document, base_dir="."):
    """Classification certificate for a correspondence map document."""
    return json.loads(raw.classify_json(_dumps(map_document), base_dir))


def space(space_document):
    """Canonical echo of an approximation-space document."""
    return json.loads(raw.space_report(_dumps(space_document)))


def quotient(space_document):
    """Rough-equality quotient of an equivalence space, with axiom status."""
    return json.loads(raw.quotient_report(_dumps(space_document)))


def compare(f_document, g_document, kind="theta-lu", base_dir="."):
    """Comparison verdict; ``g`` is rebuilt on ``f``'s systems."""
    return json.loads(raw.compare_json(_dumps(f_document), _dumps(g_document), kind, base_dir))


def verify_claim(claim_id, **options):
    """One registry claim result (max_size, samples, seed, algebra_bound)."""
    return json.loads(raw.verify_claim(claim_id, **options))
