# tests/integration/conftest.py
"""
Pytest configuration and shared fixtures for integration tests

Integration tests call cli.main() in-process with the real universe loader
and service, or run the oracle suites against the library.
"""

import json
import sys
from io import StringIO
from unittest.mock import patch

import pytest

from linper.config import UNIVERSE_ENV_VAR


# ============================================================================
# Shared Fixtures
# ============================================================================

@pytest.fixture(autouse=True)
def builtin_universe_env(monkeypatch):
    """Make every test start from the built-in universe"""
    monkeypatch.delenv(UNIVERSE_ENV_VAR, raising=False)


@pytest.fixture
def universe_file(tmp_path):
    """
    Write a small universe file with just the trivial character

    Returns:
        Path: The JSON file
    """
    path = tmp_path / "universe.json"
    path.write_text(json.dumps({
        "lines": [{"id": "triv", "degree": 1, "dual": "triv", "pole": "symmetric", "trivial": True}],
        "max_length": 3,
        "max_height": 3,
    }), encoding="utf-8")
    return path


# ============================================================================
# Helper Functions
# ============================================================================

def run_cli_command(*args):
    """
    Run the CLI in-process and capture output

    Args:
        *args: Command arguments

    Returns:
        tuple: (stdout, stderr, exit_code)
    """
    from linper.cli import main

    stdout_capture = StringIO()
    stderr_capture = StringIO()

    with patch.object(sys, "argv", ["linper", *args]):
        with patch("sys.stdout", stdout_capture):
            with patch("sys.stderr", stderr_capture):
                try:
                    main()
                    exit_code = 0
                except SystemExit as e:
                    exit_code = e.code if e.code is not None else 0

    return stdout_capture.getvalue(), stderr_capture.getvalue(), exit_code


def run_json(*args):
    """
    Run a command that must succeed and decode its JSON document

    Returns:
        dict: The decoded document
    """
    stdout, stderr, code = run_cli_command(*args)
    assert code == 0, f"exit {code}\nSTDERR: {stderr}\nSTDOUT: {stdout}"
    return json.loads(stdout)
