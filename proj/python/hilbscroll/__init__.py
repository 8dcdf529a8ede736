"""Exact dimension counts for Hilbert-scheme components of special scrolls.

The heavy lifting is in the compiled ``_hilbscroll`` module; this package adds
``classify``/``gonal``/``project`` helpers that return parsed JSON.
"""

import json

from ._hilbscroll import *  # noqa: F401,F403
from ._hilbscroll import InputError, classify_json, gonal_json, make_gonal, project_json


def classify(d, g, h1, gonal=False):
    return json.loads(classify_json(d, g, h1, gonal))


def gonal(g, t, l, d, with_oracle=False):
    return json.loads(gonal_json(make_gonal(g, t, l, d), with_oracle))


def project(d, g, l, k, m):
    return json.loads(project_json(d, g, l, k, m))


__all__ = ["InputError", "classify", "gonal", "project"]
