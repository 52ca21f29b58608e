"""Formulas, clones and constants over the four-element Magari algebra."""

import json
import os
import tempfile

from ._core import *  # noqa: F401,F403
from ._core import run_cli


def derive_constants(system_text, expand=True):
    """Derive the four constants from a twelve-member system given as system-file text.

    Returns the parsed JSON report, or raises ValueError with the CLI's message.
    """
    with tempfile.NamedTemporaryFile("w", suffix=".sys", delete=False) as fh:
        fh.write(system_text)
        path = fh.name
    try:
        args = ["derive-constants", "--sigma", path]
        if not expand:
            args.append("--no-expand")
        code, out, err = run_cli(args)
    finally:
        os.unlink(path)
    if code != 0:
        raise ValueError(err.strip() or f"derive-constants exited with {code}")
    return json.loads(out)
