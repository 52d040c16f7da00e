"""
Unit tests for linper.cli

Tests argument parsing, serializers and argument helpers.
"""

import argparse
import json
from fractions import Fraction

import pytest

from linper import __version__
from linper.cli import (
    _context,
    _int_list,
    _rep,
    build_parser,
    document,
    form_to_dict,
    rat_to_json,
    verdict_to_dict,
)
from linper.distinction import Form1, Form2
from linper.errors import InvalidInputError
from linper.models import DistinctionContext
from linper.search import SearchVerdict, TraceStep, VerdictStatus


class TestBuildParser:
    """Test argument parser construction"""

    def test_version(self, capsys):
        """Test --version exits 0 and prints the version"""
        with pytest.raises(SystemExit) as exc_info:
            build_parser().parse_args(["--version"])
        assert exc_info.value.code == 0
        assert __version__ in capsys.readouterr().out

    def test_global_flags(self):
        """Test --universe, --log-level and --no-color"""
        args = build_parser().parse_args(["--universe", "u.json", "--log-level", "DEBUG", "--no-color", "parse", "[0,0]@triv"])
        assert args.universe == "u.json"
        assert args.log_level == "DEBUG"
        assert args.no_color is True
        assert args.cmd == "parse"

    def test_universe_after_subcommand(self):
        """Test --universe given after the subcommand"""
        args = build_parser().parse_args(["crosscheck", "--universe", "u.json", "--max-degree", "2"])
        assert args.universe == "u.json"
        assert args.max_degree == 2

    def test_universe_default_kept(self):
        """Test the top-level value survives a subcommand without the flag"""
        assert build_parser().parse_args(["parse", "[0,0]@triv"]).universe is None
        args = build_parser().parse_args(["--universe", "top.json", "parse", "[0,0]@triv"])
        assert args.universe == "top.json"

    def test_jacquet_requires_k(self):
        """Test a missing --k is a usage error"""
        with pytest.raises(SystemExit) as exc_info:
            build_parser().parse_args(["jacquet", "[0,0]@triv"])
        assert exc_info.value.code == 2

    def test_distinguished_context_flags(self):
        """Test --p, --q and --a"""
        args = build_parser().parse_args(["distinguished", "--p", "3", "--q", "3", "--a", "1/2", "Sp([0,0]@rho2,3)"])
        assert (args.p, args.q, args.a) == (3, 3, "1/2")
        assert args.rep == "Sp([0,0]@rho2,3)"

    def test_rep_flag(self):
        """Test --rep as an alternative to the positional form"""
        args = build_parser().parse_args(["shape", "--rep", "[0,0]@triv"])
        assert args.rep_flag == "[0,0]@triv"

    def test_crosscheck_defaults(self):
        """Test crosscheck defaults"""
        args = build_parser().parse_args(["crosscheck"])
        assert args.max_degree == 8
        assert args.out is None
        assert args.no_complementary is False

    def test_unknown_log_level(self):
        """Test choices on --log-level"""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["--log-level", "LOUD", "crosscheck"])


class TestHelpers:
    """Test argument helpers"""

    def test_rep_missing(self):
        """Test no representation at all"""
        with pytest.raises(InvalidInputError):
            _rep(argparse.Namespace(rep=None, rep_flag=None))

    def test_rep_conflict(self):
        """Test positional and flag disagreeing"""
        with pytest.raises(InvalidInputError):
            _rep(argparse.Namespace(rep="[0,0]@triv", rep_flag="[1,1]@triv"))

    def test_int_list(self):
        """Test comma separated integers"""
        assert _int_list("2, 1", "nbar") == [2, 1]
        with pytest.raises(InvalidInputError):
            _int_list("2,a", "nbar")
        with pytest.raises(InvalidInputError):
            _int_list("", "nbar")

    def test_context(self):
        """Test context assembly"""
        assert _context(argparse.Namespace(p=None, q=None, a="0")) is None
        assert _context(argparse.Namespace(p=2, q=1, a="1/2")) == DistinctionContext(2, 1, Fraction(1, 2))
        with pytest.raises(InvalidInputError):
            _context(argparse.Namespace(p=2, q=None, a="0"))


class TestSerializers:
    """Test JSON serializers"""

    def test_rationals_are_strings(self):
        """Test p/q strings"""
        assert rat_to_json(Fraction(-1, 2)) == "-1/2"
        assert rat_to_json(Fraction(3)) == "3"

    def test_forms(self):
        """Test both forms and None"""
        assert form_to_dict(Form1(1, 1, 2, 2)) == {"form": "Form1", "i1": 1, "i2": 1, "i3": 2, "l": 2}
        assert form_to_dict(Form2(2, 2)) == {"form": "Form2", "i1": 2, "i2": 2}
        assert form_to_dict(None) is None

    def test_verdict(self):
        """Test a trace step"""
        step = TraceStep("C", "[-1,0]@chibar", "-2", DistinctionContext(2, 2))
        data = verdict_to_dict(SearchVerdict(VerdictStatus.POSSIBLE, (step,)))
        assert data == {
            "status": "Possible",
            "trace": [{"case": "C", "factor": "[-1,0]@chibar", "cut": "-2", "context": {"p": 2, "q": 2, "a": "0"}}],
        }

    def test_document(self):
        """Test the schema envelope"""
        data = json.loads(document("orbits", {"orbits": []}))
        assert data == {"schema": "linper/1", "command": "orbits", "orbits": []}
