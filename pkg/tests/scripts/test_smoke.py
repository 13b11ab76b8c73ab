"""
Smoke tests for executable scripts.

These tests verify that scripts can be imported without errors,
ensuring all dependencies and syntax are correct.
"""

import runpy
import sys

import pytest

from tests.scripts.conftest import load_script_module


class TestScriptImports:
    """Import checks for the script wrapper."""

    def test_gridcomm_imports(self):
        """gridcomm.py imports without running the command line."""
        module = load_script_module("gridcomm.py")
        assert callable(module.main)


class TestScriptStructure:
    """Structure checks for the script wrapper."""

    def test_has_main_guard(self, scripts_dir):
        """Runs only as __main__."""
        content = (scripts_dir / "gridcomm.py").read_text()
        assert 'if __name__ == "__main__":' in content

    def test_has_docstring(self):
        """Module docstring present."""
        module = load_script_module("gridcomm.py")
        assert module.__doc__

    def test_runs_as_script(self, scripts_dir, monkeypatch, capsys):
        """--version through runpy."""
        monkeypatch.setattr(sys, "argv", ["gridcomm.py", "--version"])
        with pytest.raises(SystemExit) as exc:
            runpy.run_path(str(scripts_dir / "gridcomm.py"), run_name="__main__")
        assert exc.value.code == 0
        assert "0.1.0" in capsys.readouterr().out

    def test_exit_code_propagates(self, scripts_dir, monkeypatch, tmp_path):
        """main()'s exit code reaches SystemExit."""
        monkeypatch.setattr(sys, "argv", ["gridcomm.py", "plot-data", str(tmp_path / "none.json")])
        with pytest.raises(SystemExit) as exc:
            runpy.run_path(str(scripts_dir / "gridcomm.py"), run_name="__main__")
        assert exc.value.code == 1
