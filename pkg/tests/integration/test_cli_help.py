from typer.testing import CliRunner

from cdlattice.cli.main import app

runner = CliRunner()


def test_root_help_includes_global_options() -> None:
    result = runner.invoke(app, ["--help"], color=False)

    assert result.exit_code == 0
    stdout = result.stdout
    assert "--log-level" in stdout
    assert "--version" in stdout


def test_root_help_lists_commands() -> None:
    result = runner.invoke(app, ["--help"], color=False)

    assert result.exit_code == 0
    for command in ("describe", "verify", "sweep", "dot", "catalog", "schema"):
        assert command in result.stdout


def test_verify_help_lists_options() -> None:
    result = runner.invoke(app, ["verify", "--help"], color=False)

    assert result.exit_code == 0
    assert "--json" in result.stdout
    assert "--max-subgroups" in result.stdout


def test_version_flag() -> None:
    result = runner.invoke(app, ["--version"])

    assert result.exit_code == 0
    assert "cd-lattice 0.1.0" in result.stdout


def test_invalid_log_level_is_rejected() -> None:
    result = runner.invoke(app, ["--log-level", "loud", "schema"])

    assert result.exit_code != 0
