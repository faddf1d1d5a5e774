import json

import pytest

from zspairs import format_pair, parse_pair
from zspairs.cache import CACHE_DIR_ENV
from zspairs.cli import main
from helpers import pair


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_DIR_ENV, str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_irreducible_pair(self, capsys):
        code, out, _ = run(capsys, "check", "7^3 1^2 | 6^3 5")
        assert code == 0
        assert "irreducible: true" in out
        assert "k-threshold: 7" in out

    def test_reducible_pair_with_witness(self, capsys):
        code, out, _ = run(capsys, "check", "2^2 | 1^4")
        assert code == 1
        assert "irreducible: false" in out
        assert "witness: 2 | 1^2" in out

    def test_smallest_pair(self, capsys):
        code, out, _ = run(capsys, "check", "1 | 1")
        assert code == 0
        assert "irreducible: true" in out

    def test_unbalanced_pair(self, capsys):
        code, out, _ = run(capsys, "check", "2 1 | 2")
        assert code == 1
        assert "irreducible: false" in out
        assert "unbalanced: sum 3 != 2" in out
        assert "witness" not in out

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "check", "2^x | 1")
        assert code == 2
        assert "parse error" in err
        assert "column 0" in err


class TestDerive:
    def test_product(self, capsys):
        code, out, _ = run(capsys, "derive", "7^3 1^2 | 6^3 5", "--product", "7,6^2;7,5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "6 | 2 1^4"
        assert lines[1] == "irreducible: true"

    def test_chain(self, capsys):
        code, out, _ = run(capsys, "derive", "5^2 | 2^5", "--chain", "5,2;3,2")
        assert code == 0
        assert out.splitlines()[0] == "5 1 | 2^3"

    def test_chain_in_reverse_order_fails(self, capsys):
        code, _, err = run(capsys, "derive", "5^2 | 2^5", "--chain", "3,2;5,2")
        assert code == 1
        assert "step 0" in err

    def test_infeasible_product(self, capsys):
        code, _, err = run(capsys, "derive", "5^2 | 2^5", "--product", "5,2^3")
        assert code == 1
        assert "consumes" in err

    def test_requires_exactly_one_flag(self, capsys):
        code, _, _ = run(capsys, "derive", "5^2 | 2^5")
        assert code == 2


class TestEll:
    def test_k3_brute(self, capsys):
        code, out, _ = run(capsys, "ell", "3", "--mode", "brute", "--no-cache")
        assert code == 0
        report = json.loads(out)
        assert report["ell"] == 5
        assert report["witnesses"] == [{"A": [[3, 2]], "B": [[2, 3]]}]
        assert report["mode"] == "brute"
        assert report["sum_cap"] == 9

    def test_k2(self, capsys):
        code, out, _ = run(capsys, "ell", "2", "--no-cache")
        assert json.loads(out)["ell"] == 3 and code == 0

    def test_k1(self, capsys):
        code, out, _ = run(capsys, "ell", "1", "--sum-cap", "4", "--no-cache")
        assert json.loads(out)["ell"] == 2 and code == 0

    def test_resource_limit(self, capsys):
        code, _, err = run(capsys, "ell", "7", "--mode", "brute", "--no-cache")
        assert code == 1
        assert "brute-mode limit" in err

    def test_cache_round_trip(self, capsys, isolated_cache):
        code1, out1, err1 = run(capsys, "ell", "3")
        assert code1 == 0
        assert "cache: stored" in err1
        assert list(isolated_cache.glob("*.json"))
        code2, out2, err2 = run(capsys, "ell", "3")
        assert code2 == 0
        assert "cache: hit" in err2
        assert out2 == out1  # byte-identical report

    def test_cache_versioning(self, capsys, isolated_cache):
        run(capsys, "ell", "2")
        entry = next(isolated_cache.glob("*.json"))
        data = json.loads(entry.read_text())
        data["tool_version"] = "0.0.0-stale"
        entry.write_text(json.dumps(data))
        _, _, err = run(capsys, "ell", "2")
        assert "cache: stored" in err  # recomputed, not served stale

    def test_no_cache_skips_write(self, capsys, isolated_cache):
        _, _, err = run(capsys, "ell", "2", "--no-cache")
        assert "cache: off" in err
        assert not list(isolated_cache.glob("*.json"))


class TestEnumerate:
    def test_three_pairs_for_k2(self, capsys):
        code, out, _ = run(capsys, "enumerate", "2", "--sum-cap", "4")
        assert code == 0
        assert out.splitlines() == ["1 | 1", "2 | 2", "2 | 1^2"]

    def test_min_len_filter(self, capsys):
        code, out, _ = run(capsys, "enumerate", "3", "--min-len", "5")
        assert code == 0
        assert out.splitlines() == ["3^2 | 2^3"]

    def test_k1(self, capsys):
        code, out, _ = run(capsys, "enumerate", "1", "--sum-cap", "3")
        assert code == 0
        assert out.splitlines() == ["1 | 1"]

    def test_json_lines(self, capsys):
        _, out, _ = run(capsys, "enumerate", "2", "--sum-cap", "4", "--format", "json")
        rows = [json.loads(line) for line in out.splitlines()]
        assert rows[0] == {"A": [[1, 1]], "B": [[1, 1]]}
        assert rows[2] == {"A": [[2, 1]], "B": [[1, 2]]}

    def test_csv(self, capsys):
        _, out, _ = run(capsys, "enumerate", "2", "--sum-cap", "4", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "k,sum,length,A,B"
        assert lines[3] == "2,2,3,2,1^2"

    def test_printed_pairs_reparse(self, capsys):
        _, out, _ = run(capsys, "enumerate", "3", "--sum-cap", "9")
        for line in out.splitlines():
            assert format_pair(parse_pair(line)) == line


class TestExtremal:
    def test_k3(self, capsys):
        code, out, _ = run(capsys, "extremal", "3")
        assert code == 0
        assert out.splitlines() == ["3^2 | 2^3"]

    def test_k4_pruned(self, capsys):
        code, out, _ = run(capsys, "extremal", "4", "--mode", "pruned")
        assert code == 0
        assert out.splitlines() == ["4^3 | 3^4"]


class TestSelftest:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "selftest")
        assert code == 0
        assert "oracle-equivalence: ok" in out
        assert "derivation-preservation: ok" in out
        assert "allocation-invariants: ok" in out
        assert "length-bounds: ok" in out


def test_exit_code_contract(capsys):
    assert run(capsys, "check", "7^3 1^2 | 6^3 5")[0] == 0  # success
    assert run(capsys, "check", "2^2 | 1^4")[0] == 1  # negative result
    assert run(capsys, "check", "oops")[0] == 2  # parse error
    assert run(capsys, "nonsense")[0] == 2  # usage error


def test_version_flag(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert out.strip() == "0.1.0"


def test_pair_example_round_trip():
    p = parse_pair("7^3 1^2 | 6^3 5")
    assert p == pair((7, 7, 7, 1, 1), (6, 6, 6, 5))
