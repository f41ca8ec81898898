import json
from fractions import Fraction

import pytest

import delpezzo.cli as cli
from delpezzo import serialize
from delpezzo.search import brute_force_enumerate
from delpezzo.serialize import (
    from_csv,
    from_json,
    fraction_str,
    parse_fraction,
    to_csv,
    to_json,
    to_markdown,
)


@pytest.fixture(scope="module")
def sample_records():
    return brute_force_enumerate(1, 1, 60) + brute_force_enumerate(2, 2, 40)


def test_json_round_trip(sample_records):
    assert from_json(to_json(sample_records)) == sample_records


def test_csv_round_trip(sample_records):
    assert from_csv(to_csv(sample_records)) == sample_records


def test_json_and_csv_carry_identical_data(sample_records):
    assert from_csv(to_csv(sample_records)) == from_json(to_json(sample_records))


def test_markdown_renders(sample_records):
    text = to_markdown(sample_records)
    assert text.startswith("| I |")
    assert len(text.strip().splitlines()) == len(sample_records) + 2


def test_json_schema_fields(sample_records):
    data = json.loads(to_json(sample_records))
    for entry in data:
        assert set(entry) >= {
            "index", "weights", "degree", "b2_orbifold", "b2_link", "l",
            "mu", "klt", "moduli",
        }
        assert set(entry["moduli"]) == {"m", "dimG", "n"}
        assert entry["klt"]["verdict"] in {"certified", "not_klt", "unknown"}


def test_fraction_strings():
    assert fraction_str(Fraction(5, 7)) == "5/7"
    assert parse_fraction("5/7") == Fraction(5, 7)
    assert parse_fraction("4") == Fraction(4)


def test_cli_enumerate_index3(capsys):
    code = cli.main(["enumerate", "--index", "3", "--max-weight", "150",
                     "--method", "brute", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    records = json.loads(out)
    assert len(records) == 7


def test_cli_enumerate_empty_index11(capsys):
    code = cli.main(["enumerate", "--index", "11", "--max-weight", "60",
                     "--method", "both", "--format", "json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out) == []


def test_cli_enumerate_both_methods_agree(capsys):
    code = cli.main(["enumerate", "--index", "4", "--max-weight", "60",
                     "--method", "both", "--format", "csv"])
    assert code == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert rows[0].startswith("index,")


def test_cli_method_disagreement_exit2(capsys, monkeypatch):
    # fault injection: make the structured route drop a record
    def broken(index, w_max, strict=False):
        from delpezzo.search import structured_enumerate as real

        return real(index, w_max)[:-1]

    monkeypatch.setattr(cli, "structured_enumerate", broken)
    code = cli.main(["enumerate", "--index", "3", "--max-weight", "100",
                     "--method", "both", "--format", "json"])
    assert code == 2
    assert "disagreement" in capsys.readouterr().err


def test_cli_usage_error_exit1(capsys):
    assert cli.main(["enumerate", "--method", "sideways"]) == 1
    assert cli.main(["enumerate", "--index", "5..2"]) == 1
    assert cli.main(["certify", "1", "2", "3", "5"]) == 1  # needs degree or index


def test_cli_certify_outputs(capsys):
    assert cli.main(["certify", "2", "3", "5", "9", "--index", "1"]) == 0
    assert "Certified (rule R3: 36 < 54)" in capsys.readouterr().out
    assert cli.main(["certify", "1", "2", "3", "5", "--index", "1"]) == 0
    assert "Unknown" in capsys.readouterr().out
    assert cli.main(["certify", "1", "1", "4", "4", "--index", "2"]) == 0
    assert "gate G1" in capsys.readouterr().out


def test_cli_certify_rejects_non_quasismooth(capsys):
    assert cli.main(["certify", "2", "3", "4", "5", "--degree", "13"]) == 1
    assert "rejected" in capsys.readouterr().err


def test_cli_topology_outputs(capsys):
    assert cli.main(["topology", "2", "3", "5", "9", "--degree", "18"]) == 0
    out = capsys.readouterr().out
    assert "mu = 104" in out
    assert "b2(link) = 6" in out
    assert "#6(S^2 x S^3)" in out

    assert cli.main(["topology", "1", "1", "1", "1", "--degree", "2"]) == 0
    out = capsys.readouterr().out
    assert "b2(link) = 1" in out and "link: S^2 x S^3" in out

    assert cli.main(["topology", "1", "1", "1", "1", "--degree", "3"]) == 0
    out = capsys.readouterr().out
    assert "mu = 16" in out and "b2(link) = 6" in out


def test_cli_env_var_overrides_default(monkeypatch, capsys):
    monkeypatch.setenv(cli.MAX_WEIGHT_ENV, "10")
    code = cli.main(["enumerate", "--index", "3", "--method", "brute",
                     "--format", "json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out) == []  # smallest I=3 weights exceed 10


def test_cli_output_file(tmp_path):
    target = tmp_path / "rows.json"
    code = cli.main(["enumerate", "--index", "3", "--max-weight", "150",
                     "--method", "structured", "--format", "json",
                     "--output", str(target)])
    assert code == 0
    assert len(json.loads(target.read_text())) == 7


def test_cli_reproduce_table3(capsys):
    assert cli.main(["reproduce", "--table", "3"]) == 0
    out = capsys.readouterr().out
    assert "10/16 exact" in out
    assert "known discrepancies" in out


def test_cli_reproduce_series(capsys):
    assert cli.main(["reproduce", "--table", "series"]) == 0
    out = capsys.readouterr().out
    assert out.count("check out") == 13  # 12 printed + 1 errata family
