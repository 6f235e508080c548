"""Exact q-series for the shelf families, with partition oracles and a verification runner."""

import json

from ._core import *  # noqa: F401,F403
from ._core import run_suite_json


def run_suite(suite, **config):
    """Run a verification suite and return the report as a dict."""
    return json.loads(run_suite_json(suite, **config))
