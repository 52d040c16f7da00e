"""
Fixtures for E2E tests

E2E tests run the actual CLI via subprocess, as `python -m linper`.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from linper.config import UNIVERSE_ENV_VAR


PROJECT_ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture
def triv_universe(tmp_path):
    """
    Universe file with just the trivial character and small caps

    Returns:
        Path: The JSON file
    """
    path = tmp_path / "triv.json"
    path.write_text(json.dumps({
        "lines": [{"id": "triv", "degree": 1, "dual": "triv", "pole": "symmetric", "trivial": True}],
        "max_length": 3,
        "max_height": 3,
    }), encoding="utf-8")
    return path


def run_linper(*args, env_extra=None, cwd=None):
    """
    Run linper via subprocess

    Args:
        *args: Command arguments (e.g., 'orbits', '--k', '1', '--p', '2', '--q', '1')
        env_extra: Extra environment variables
        cwd: Working directory

    Returns:
        subprocess.CompletedProcess: Result with stdout, stderr, returncode

    Example:
        result = run_linper('parse', '[0,1]@rho2')
        assert result.returncode == 0
    """
    env = dict(os.environ)
    env.pop(UNIVERSE_ENV_VAR, None)
    src = str(PROJECT_ROOT / "src")
    env["PYTHONPATH"] = src + os.pathsep + env["PYTHONPATH"] if env.get("PYTHONPATH") else src
    if env_extra:
        env.update(env_extra)

    return subprocess.run(
        [sys.executable, "-m", "linper", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


def output_json(result):
    """Decode the JSON document a successful command printed"""
    assert_command_success(result)
    return json.loads(result.stdout)


def assert_command_success(result, expected_in_output=None):
    """Assert that command succeeded"""
    assert result.returncode == 0, (
        f"Command failed with exit code {result.returncode}\n"
        f"STDERR: {result.stderr}\n"
        f"STDOUT: {result.stdout}"
    )

    if expected_in_output:
        assert expected_in_output in result.stdout, (
            f"Expected '{expected_in_output}' in output\n"
            f"Got: {result.stdout}"
        )


def assert_command_failed(result, expected_exit_code=None, expected_in_stderr=None):
    """Assert that command failed with expected error"""
    assert result.returncode != 0, "Command should have failed but succeeded"

    if expected_exit_code:
        assert result.returncode == expected_exit_code, (
            f"Expected exit code {expected_exit_code}, got {result.returncode}"
        )

    if expected_in_stderr:
        assert expected_in_stderr in result.stderr, (
            f"Expected '{expected_in_stderr}' in stderr\n"
            f"Got: {result.stderr}"
        )
