"""End to end tests of `python -m ksymp`"""

import json
import pathlib

from tests.infra.utils import STANDARD_SYMPLECTIC_4, run_ksymp, write_json


class TestPipeline:
    """Test construct piped into verify"""

    def test_construct_then_verify(self, log_file: pathlib.Path) -> None:
        """Test that a constructed triple verifies with q = t0² + t1² + t2²"""
        # Arrange
        constructed = run_ksymp("construct", "3", log_file=log_file)

        # Act
        verified = run_ksymp("verify", "--samples", "5", stdin=constructed.stdout, log_file=log_file)

        # Assert
        assert constructed.returncode == 0
        assert verified.returncode == 0, verified.stderr
        report = json.loads(verified.stdout)
        assert report["is_k_symplectic"]
        assert report["q"]["gram"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]

    def test_input_and_output_files(self, tmp_path: pathlib.Path, log_file: pathlib.Path) -> None:
        """Test --input and --output paths"""
        span = write_json(tmp_path / "span.json", {"forms": [STANDARD_SYMPLECTIC_4]})
        result_path = tmp_path / "report.json"

        result = run_ksymp("verify", "-i", str(span), "-o", str(result_path), "--samples", "3", log_file=log_file)

        assert result.returncode == 0
        assert result.stdout == ""
        assert json.loads(result_path.read_text(encoding="utf-8"))["k"] == 1

    def test_same_seed_same_output(self, log_file: pathlib.Path) -> None:
        """Test that a fixed seed makes runs byte identical"""
        span = run_ksymp("construct", "2", log_file=log_file).stdout

        first = run_ksymp("verify", "--seed", "7", "--samples", "5", stdin=span, log_file=log_file)
        second = run_ksymp("verify", "--seed", "7", "--samples", "5", stdin=span, log_file=log_file)

        assert first.stdout == second.stdout
        assert first.stdout.endswith("}\n")

    def test_logs_go_to_file(self, log_file: pathlib.Path) -> None:
        """Test that stdout carries only JSON and the log file gets the records"""
        result = run_ksymp("classify", "3", "0", log_file=log_file)

        json.loads(result.stdout)
        assert "Running classify" in log_file.read_text(encoding="utf-8")


class TestExitCodes:
    """Test the 0, 1 and 2 exit codes"""

    def test_obstruct_negative(self, log_file: pathlib.Path) -> None:
        """Test that b2 = 24 in dimension 10 exits with 1"""
        result = run_ksymp("obstruct", "24", "10", log_file=log_file)

        assert result.returncode == 1
        assert not json.loads(result.stdout)["torus_possible"]

    def test_truncated_document(self, log_file: pathlib.Path) -> None:
        """Test that truncated JSON exits with 2 and writes nothing to stdout"""
        result = run_ksymp("verify", stdin='{"forms": [[[0, 1], ', log_file=log_file)

        assert result.returncode == 2
        assert result.stdout == ""
        assert result.stderr.startswith("ksymp: error: <document>")

    def test_usage_error(self, log_file: pathlib.Path) -> None:
        """Test that argparse errors exit with 2"""
        result = run_ksymp("classify", "three", "0", log_file=log_file)

        assert result.returncode == 2

    def test_negative_samples(self, log_file: pathlib.Path) -> None:
        """Test that --samples rejects negative counts"""
        result = run_ksymp("verify", "--samples", "-1", stdin="{}", log_file=log_file)

        assert result.returncode == 2

    def test_sign_ambiguous(self, tmp_path: pathlib.Path, log_file: pathlib.Path) -> None:
        """Test that a domain error exits with 2 and names the error"""
        model = write_json(tmp_path / "model.json", {"b2": 2, "n": 2, "top_poly": {"4,0": 1, "2,2": 2, "0,4": 1}})

        result = run_ksymp("extract", "--input", str(model), log_file=log_file)

        assert result.returncode == 2
        assert "SignAmbiguous" in result.stderr
