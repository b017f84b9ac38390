"""
Test Suite for the hypercut command line

Validates subcommand output, exit codes and reproducibility through
click's CliRunner.
"""

import json
import os
import sys
import tempfile

from click.testing import CliRunner

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../src"))

from hypercut.cli import EXIT_ERROR, EXIT_INPUT, EXIT_USAGE, cli, run
from hypercut.generators import gen_random
from hypercut.graph_loader import save_hgr

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")
TWO_CLUSTERS = (
    "21 10\n"
    "1 2 3\n1 2 4\n1 2 5\n1 3 4\n1 3 5\n1 4 5\n2 3 4\n2 3 5\n2 4 5\n3 4 5\n"
    "6 7 8\n6 7 9\n6 7 10\n6 8 9\n6 8 10\n6 9 10\n7 8 9\n7 8 10\n7 9 10\n8 9 10\n"
    "5 6\n"
)


def invoke(*args):
    return CliRunner().invoke(cli, list(args))


def write(tmp, name, text):
    path = os.path.join(tmp, name)
    with open(path, "w") as f:
        f.write(text)
    return path


def test_mincut_fixture():
    """Test the nontrivial fixture through cx"""
    result = invoke("mincut", os.path.join(FIXTURES, "appendixB_n100.hgr"), "--algo", "cx", "--json")
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["lambda"] == 147 and record["algorithm"] == "cx", "λ = 147 via cx"
    assert record["n"] == 103 and len(record["side"]) in (2, 101), "Pair side"
    assert record["wall_ms"] == 0.0, "No timing unless asked"
    print("✓ mincut fixture")


def test_mincut_text_and_determinism():
    """Test plain output and byte-identical JSON per seed"""
    with tempfile.TemporaryDirectory() as tmp:
        path = write(tmp, "clusters.hgr", TWO_CLUSTERS)
        result = invoke("mincut", path)
        assert result.exit_code == 0, result.output
        assert result.stdout.splitlines()[0] == "lambda: 1", "Bridge cut"

        first = invoke("mincut", path, "--algo", "auto", "--force-large-branch", "--json", "--seed", "5")
        second = invoke("mincut", path, "--algo", "auto", "--force-large-branch", "--json", "--seed", "5")
        assert first.exit_code == 0 and first.stdout == second.stdout, "Same seed, same bytes"
        assert json.loads(first.stdout)["params"] == {"force_large": True}, "Parameters recorded"
    print("✓ mincut text and determinism")


def test_input_errors():
    """Test unreadable inputs exit with 3"""
    assert invoke("mincut", "missing.hgr").exit_code == EXIT_INPUT, "Missing file"
    with tempfile.TemporaryDirectory() as tmp:
        for name, text in (("bad.hgr", "2 3\n1 x\n"), ("range.hgr", "1 3\n1 4\n"), ("dup.hgr", "2 3\n1 2\n2 1\n")):
            result = invoke("mincut", write(tmp, name, text))
            assert result.exit_code == EXIT_INPUT, f"{name}: {result.output}"
            assert "error:" in result.stderr, "Message on stderr"
    print("✓ Input errors")


def test_usage_errors():
    """Test bad options exit with 2"""
    fixture = os.path.join(FIXTURES, "appendixC_n64_r3.hgr")
    assert invoke("mincut", fixture, "--algo", "karger").exit_code == EXIT_USAGE, "Unknown algorithm"
    assert invoke("mincut", fixture, "--seed", "-1").exit_code == EXIT_USAGE, "Negative seed"
    assert invoke("gen", "random", "--n", "5").exit_code == EXIT_USAGE, "random needs --m"
    assert run(["mincut", fixture, "--algo", "karger"]) == EXIT_USAGE, "run() returns the code"
    print("✓ Usage errors")


def test_library_errors():
    """Test other library errors exit with 1"""
    with tempfile.TemporaryDirectory() as tmp:
        path = write(tmp, "one.hgr", "1 3\n1 2\n")
        result = invoke("decompose", path, "--phi", "2.0")
        assert result.exit_code == EXIT_ERROR, "φ above 1/(r-1)"

        config = write(tmp, "bad.toml", "[hypercut]\nunknown_knob = 3\n")
        result = invoke("--config", config, "mincut", path)
        assert result.exit_code == EXIT_ERROR, "Unknown config key"
    print("✓ Library errors")


def test_gen():
    """Test generation to stdout and to a file"""
    result = invoke("gen", "random", "--n", "8", "--r", "3", "--m", "12", "--seed", "1")
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[0] == "12 8", "hgr header"

    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "b.hgr")
        result = invoke("gen", "appendixB", "--n", "100", "--out", out)
        assert result.exit_code == 0, result.output
        with open(out) as f, open(os.path.join(FIXTURES, "appendixB_n100.hgr")) as g:
            assert f.read() == g.read(), "Matches the checked-in fixture"

        result = invoke("gen", "planted", "--n", "10", "--r", "3", "--s", "2", "--lam", "3")
        assert result.exit_code == 0 and "planted side: [0, 1]" in result.stderr, "Planted side reported"
    print("✓ gen")


def test_verify_and_report():
    """Test verify and report output"""
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "small.hgr")
        save_hgr(gen_random(8, 3, 18, seed=3), path)
        result = invoke("verify", path, "--seed", "2")
        assert result.exit_code == 0, result.output
        assert json.loads(result.stdout)["ok"], "All solvers agree"

        result = invoke("report", path)
        assert result.exit_code == 0, result.output
        assert "union_size" in json.loads(result.stdout), "Report keys"

        result = invoke("verify", path, "--max-n", "4")
        assert result.exit_code == EXIT_ERROR, "Instance above --max-n"
    print("✓ verify and report")


def test_decompose():
    """Test decomposition JSON"""
    with tempfile.TemporaryDirectory() as tmp:
        path = write(tmp, "clusters.hgr", TWO_CLUSTERS)
        result = invoke("decompose", path, "--phi", "0.1")
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["blocks"] == [[0, 1, 2, 3, 4], [5, 6, 7, 8, 9]], "Two clusters"
        assert data["crossing_edges"] == 1, "Bridge"
    print("✓ decompose")


def test_bench():
    """Test CSV output of a tiny random suite"""
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "random.csv")
        result = invoke("bench", "--suite", "random", "--count", "2", "--threads", "1", "--quiet", "--out", out)
        assert result.exit_code == 0, result.output
        with open(out) as f:
            lines = f.read().splitlines()
        assert lines[0].startswith("suite,") and len(lines) == 1 + 2 * 5, "Header plus rows"
    print("✓ bench")


if __name__ == "__main__":
    print("\n🧪 Running CLI Tests\n")

    try:
        test_mincut_fixture()
        test_mincut_text_and_determinism()
        test_input_errors()
        test_usage_errors()
        test_library_errors()
        test_gen()
        test_verify_and_report()
        test_decompose()
        test_bench()

        print("\n✅ All tests passed!\n")
    except AssertionError as e:
        print(f"\n❌ Test failed: {e}\n")
        exit(1)
    except Exception as e:
        print(f"\n❌ Unexpected error: {e}\n")
        exit(1)
