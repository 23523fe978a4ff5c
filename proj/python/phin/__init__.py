"""Python front end for the phin command set.

Each call takes a JSON-compatible payload and returns the decoded result.
Failures raise PhinError carrying the exit code and the error body.
"""

import json

from ._phin import command_names
from ._phin import run_command as _run_command

__all__ = ["PhinError", "command_names", "run", "run_raw"]


class PhinError(Exception):
    def __init__(self, exit_code, body):
        self.exit_code = exit_code
        self.body = body
        error = body.get("error", {}) if isinstance(body, dict) else {}
        super().__init__(f"{error.get('kind', 'error')}: {error.get('message', '')}")


def run_raw(command, payload=None, p=2, n=None, f=None):
    """Returns (exit_code, canonical JSON text) without raising."""
    text = "" if payload is None else json.dumps(payload)
    return _run_command(command, text, p, n, f)


def run(command, payload=None, p=2, n=None, f=None):
    code, text = run_raw(command, payload, p=p, n=n, f=f)
    body = json.loads(text)
    if code != 0:
        raise PhinError(code, body)
    return body
