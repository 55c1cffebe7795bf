"""
Tests for the command-line interface.
"""

import json

import pytest

from syzygy_python.cli import (
    _child_arguments,
    create_parser,
    main,
    run_betti_command,
    run_bounds_command,
    run_construct_command,
    run_resolve_command,
    run_verify_command,
)
from syzygy_python.config.settings import SyzygySettings
from syzygy_python.utils.golden import GOLDEN_DIR


def _parse(*argv):
    return create_parser().parse_args(list(argv))


@pytest.fixture
def cubic_csv(tmp_path, twisted_cubic_table):
    """Fixture providing the twisted cubic table as a CSV file."""
    path = tmp_path / "cubic.csv"
    path.write_text(twisted_cubic_table.to_csv() + "\n")
    return str(path)


@pytest.mark.unit
class TestParser:
    """Test argument parsing."""

    def test_verify_arguments(self):
        """Repeated --assert and --level accumulate."""
        args = _parse("verify", "t.csv", "--e", "4", "--d", "8", "--assert", "A(1,3)",
                      "--assert", "A(0,12)", "--level", "0")

        assert args.command == "verify"
        assert args.asserted == ["A(1,3)", "A(0,12)"]
        assert args.level == [0]
        assert args.k == 0
        assert args.output_format is None

    def test_format_choices(self):
        """Only the three formats are accepted."""
        with pytest.raises(SystemExit):
            _parse("betti", "S(3)", "--format", "json")

    def test_child_arguments(self):
        """Child runs carry field, seed and the truncation flag."""
        settings = SyzygySettings(default_field="qq", default_seed=5, degree_bound=4)
        argv = _child_arguments("ex-monomial-2e1", settings, truncated=True)

        assert argv[:6] == ["-m", "syzygy_python.cli", "reproduce", "ex-monomial-2e1", "--in-process", "--json"]
        assert argv[6:] == ["--field", "qq", "--seed", "5", "--degree-bound", "4", "--truncated"]


@pytest.mark.unit
class TestBoundsCommand:
    """Test the bounds command."""

    def test_bound_row_kv(self):
        """One offset as kv lines."""
        result = run_bounds_command(_parse("bounds", "--e", "2", "--m", "0", "--format", "kv"))

        assert result["output"] == (
            "bound.(e=2, k=0, m=0).p1=3\nbound.(e=2, k=0, m=0).p2=2\nbound.(e=2, k=0, m=0).p3=0"
        )

    def test_extremal_table_csv(self):
        """The extremal table for (4, 3) matches the golden quartic."""
        result = run_bounds_command(_parse("bounds", "--e", "4", "--extremal", "3", "--format", "csv"))

        expected = (GOLDEN_DIR / "ex-quartic-extremal.csv").read_text()
        assert result["output"].splitlines() == [
            line for line in expected.splitlines() if line and not line.startswith("#")
        ]

    def test_thresholds(self):
        """Degree thresholds and the explicit second threshold."""
        result = run_bounds_command(_parse("bounds", "--e", "4", "--thresholds", "--format", "kv"))

        assert result["output"] == "d_0=12\nd_1=5\nd_2=2\nsecond_hierarchy=16"

    def test_nothing_to_tabulate(self):
        """bounds without parameters is an error."""
        assert "Nothing to tabulate" in run_bounds_command(_parse("bounds"))["error"]

    def test_parameter_error(self):
        """Out-of-range parameters are reported, not raised."""
        assert "error" in run_bounds_command(_parse("bounds", "--e", "4", "--m", "9"))


@pytest.mark.unit
class TestVerifyCommand:
    """Test the verify command on stored tables."""

    def test_stored_table_kv(self, cubic_csv):
        """A stored extremal table passes."""
        result = run_verify_command(_parse("verify", cubic_csv, "--e", "2", "--d", "3", "--format", "kv"))

        assert result["exit_code"] == 0
        assert "extremal=true" in result["output"]
        assert result["output"].endswith("exit_code=0")

    def test_stored_table_csv(self, cubic_csv):
        """csv output lists one comparison per p."""
        result = run_verify_command(_parse("verify", cubic_csv, "--e", "2", "--d", "3", "--format", "csv"))

        assert result["output"].splitlines()[:2] == ["p,observed,bound,verdict", "1,3,3,equal"]

    def test_stored_table_needs_parameters(self, cubic_csv):
        """e and d cannot be read from a stored table."""
        assert "--e and --d" in run_verify_command(_parse("verify", cubic_csv))["error"]

    def test_unknown_hypothesis_exit_code(self):
        """At level one the golden quartic leaves hypotheses open."""
        path = str(GOLDEN_DIR / "ex-quartic-extremal.csv")
        result = run_verify_command(_parse("verify", path, "--e", "4", "--d", "8", "--k", "1", "--m", "3"))

        assert result["exit_code"] == 2

    def test_asserted_hypotheses_expose_violation(self):
        """Asserting both hypotheses turns the violation into exit code 1."""
        path = str(GOLDEN_DIR / "ex-quartic-extremal.csv")
        result = run_verify_command(_parse(
            "verify", path, "--e", "4", "--d", "8", "--k", "1", "--m", "3",
            "--assert", "A(1,3)", "--assert", "A(0,12)",
        ))

        assert result["exit_code"] == 1


@pytest.mark.integration
class TestComputeCommands:
    """Test the commands that construct and resolve ideals."""

    def test_construct_to_stdout(self):
        """The ideal file text goes to the output."""
        result = run_construct_command(_parse("construct", "S(3)"))

        assert "# spec: S(3)" in result["output"]
        assert "ring r=4 field=Fp:32003" in result["output"]

    def test_construct_then_betti(self, tmp_path):
        """A written ideal file resolves, and --csv-out writes a copy."""
        ideal_path = tmp_path / "cubic.ideal"
        csv_path = tmp_path / "cubic.csv"
        run_construct_command(_parse("construct", "S(3)", "-o", str(ideal_path)))

        result = run_betti_command(_parse(
            "betti", str(ideal_path), "--field", "qq", "--format", "csv", "--csv-out", str(csv_path)
        ))

        assert result["output"] == "i,j,beta\n0,0,1\n1,1,3\n2,1,2"
        assert csv_path.read_text() == result["output"] + "\n"

    def test_resolve_kv(self):
        """resolve prints invariants and self-checks."""
        result = run_resolve_command(_parse("resolve", "S(3)", "--format", "kv"))

        assert "degree=3" in result["output"]
        assert "check.frame=true" in result["output"]

    def test_verify_spec_reads_invariants(self):
        """Without --e and --d the resolution supplies them."""
        result = run_verify_command(_parse("verify", "S(3)", "--format", "kv"))

        assert result["output"].startswith("e=2\nd=3\n")
        assert result["exit_code"] == 0


@pytest.mark.unit
class TestMain:
    """Test the main entry point."""

    @pytest.mark.asyncio
    async def test_main_prints_output(self, capsys):
        """Output goes to stdout and the exit code is returned."""
        code = await main(["bounds", "--e", "2", "--m", "0", "--format", "kv"])

        assert code == 0
        assert "bound.(e=2, k=0, m=0).p1=3" in capsys.readouterr().out

    @pytest.mark.asyncio
    async def test_main_violation(self, tmp_path, capsys):
        """A bound violation exits with 1."""
        path = tmp_path / "bad.csv"
        path.write_text("i,j,beta\n0,0,1\n1,1,4\n2,1,2\n")

        assert await main(["verify", str(path), "--e", "2", "--d", "3"]) == 1

    @pytest.mark.asyncio
    async def test_main_error(self, capsys):
        """Errors go to stderr with exit code 1."""
        code = await main(["betti", "Q(1)"])

        assert code == 1
        assert "Error: Unknown construction" in capsys.readouterr().err

    @pytest.mark.asyncio
    async def test_main_unknown_target(self, capsys):
        """Unknown reproduce targets fail before any child process starts."""
        assert await main(["reproduce", "ex-nothing"]) == 1
        assert "Unknown target" in capsys.readouterr().err

    @pytest.mark.asyncio
    async def test_main_version(self, capsys):
        """version prints JSON."""
        from syzygy_python import __version__

        assert await main(["version"]) == 0
        assert json.loads(capsys.readouterr().out)["version"] == __version__

    @pytest.mark.asyncio
    async def test_main_without_command(self, capsys):
        """No command prints help."""
        assert await main([]) == 0
        assert "Available commands" in capsys.readouterr().out
