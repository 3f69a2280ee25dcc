import json
import subprocess
import sys

import pytest

from symspan.cli import main
from symspan.golden import golden_tables


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cache(tmp_path):
    return str(tmp_path / "cache.json")


def test_dims_exact(capsys, cache):
    code, out, _ = run(capsys, "dims", "--n-max", "7", "--method", "exact", "--cache", cache)
    assert code == 0
    assert out.splitlines()[-1].split() == ["7", "13", "exact"]
    stored = json.loads(open(cache).read())["entries"]
    assert stored["7"]["D"] == 13 and stored["7"]["method"] == "exact"


def test_dims_n1(capsys, cache):
    code, out, _ = run(capsys, "dims", "--n-max", "1", "--cache", cache, "--format", "csv")
    assert code == 0
    assert out == "n,D,method,primes\n1,1,modular-consensus,1048583;1048589\n"


def test_dims_modular_matches_table1(capsys, cache):
    code, out, _ = run(capsys, "dims", "--n-max", "23", "--method", "modular",
                       "--cache", cache, "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    g = golden_tables()
    assert [r["D"] for r in rows] == [g.table1[n]["D"] for n in range(1, 24)]
    assert rows[0]["primes"] == [1048583, 1048589]


def test_dims_exact_not_downgraded_by_modular(capsys, cache):
    run(capsys, "dims", "--n-max", "5", "--method", "exact", "--cache", cache)
    _, out, _ = run(capsys, "dims", "--n-max", "6", "--cache", cache, "--format", "csv")
    methods = [line.split(",")[2] for line in out.splitlines()[1:]]
    assert methods == ["exact"] * 5 + ["modular-consensus"]


def test_dims_table_header_lists_primes(capsys):
    _, out, _ = run(capsys, "dims", "--n-max", "3", "--no-cache", "--primes", "1048583,1048601")
    assert out.splitlines()[0] == "# primes: 1048583,1048601"


def test_dims_memory_budget_exit_3(capsys):
    code, _, err = run(capsys, "dims", "--n-max", "23", "--method", "exact", "--no-cache",
                       "--memory-budget", "0.001")
    assert code == 3 and "budget" in err


@pytest.mark.parametrize("argv", [
    ["dims", "--n-max", "0"],
    ["dims", "--n-max", "3", "--format", "xml"],
    ["dims", "--n-max", "3", "--primes", "1048583"],
    ["dims", "--n-max", "3", "--primes", "4,6", "--no-cache"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_bounds_matches_table2(capsys):
    code, out, _ = run(capsys, "bounds", "--n-max", "23", "--no-cache", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["chain_violations"] == []
    g = golden_tables()
    for row in doc["rows"]:
        n = row["n"]
        assert row["E"] == g.table2[n]["E"]
        assert row["H"] == g.table2[n]["H"]
        assert row["U"] == g.table1[n]["U"]


def test_bounds_n1_row(capsys):
    code, out, _ = run(capsys, "bounds", "--n-max", "1", "--no-cache", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "1,,1,1,0,0,1,1"


def test_bounds_include_d_chain_summary(capsys, cache):
    code, out, _ = run(capsys, "bounds", "--n-max", "23", "--include-d", "--cache", cache)
    assert code == 0
    assert "chain violations: 0" in out


def test_bounds_csv_output_round_trips(capsys, tmp_path):
    from symspan.formats import bounds_from_csv, bounds_to_csv

    _, out, _ = run(capsys, "bounds", "--n-max", "10", "--no-cache", "--format", "csv")
    assert bounds_to_csv(bounds_from_csv(out)) == out


def test_relations_seven(capsys):
    code, out, err = run(capsys, "relations", "--n", "7", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["relations"]) == 2
    assert all(r["verified"] for r in doc["relations"])
    assert "= 2" in err


def test_relations_six(capsys):
    code, out, _ = run(capsys, "relations", "--n", "6")
    assert code == 0
    assert "count = P(6) - D(6) = 0" in out


KNOWN_RELATIONS = {
    "n": 7,
    "relations": [
        {"terms": [{"partition": [2, 2, 1, 1, 1], "coeff": 4},
                   {"partition": [3, 1, 1, 1, 1], "coeff": -3},
                   {"partition": [3, 2, 2], "coeff": -1}]},
        {"terms": [{"partition": [3, 2, 1, 1], "coeff": 3},
                   {"partition": [4, 1, 1, 1], "coeff": -2},
                   {"partition": [4, 3], "coeff": -1}]},
    ],
}


def test_relations_check_file(capsys, tmp_path):
    path = tmp_path / "known.json"
    path.write_text(json.dumps(KNOWN_RELATIONS))
    code, out, _ = run(capsys, "relations", "--n", "7", "--check-file", str(path))
    assert code == 0
    assert out.count("in span") == 2


def test_relations_check_file_detects_non_relation(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 7, "relations": [
        {"terms": [{"partition": [7], "coeff": 1}]}]}))
    code, out, _ = run(capsys, "relations", "--n", "7", "--check-file", str(path))
    assert code == 1 and "NOT in span" in out


def test_relations_exit_4_on_bad_certificate(capsys, monkeypatch):
    import symspan.cli as cli
    from symspan.rank import RelationCertificate
    from symspan.partitions import Partition

    monkeypatch.setattr(cli, "nullspace_certificates",
                        lambda n: [RelationCertificate(n, ((Partition((n,)), 1),), False)])
    code, _, _ = run(capsys, "relations", "--n", "3")
    assert code == 4


def test_verify_tables_corrupted_fixture(capsys, tmp_path):
    g = golden_tables()
    g.table2[8]["H"] = 12
    path = tmp_path / "golden.json"
    path.write_text(json.dumps(g.to_json_obj()))
    code, out, _ = run(capsys, "verify-tables", "--n-max", "9", "--golden", str(path))
    assert code == 1
    assert "MISMATCH: table 2 H(8): published 12, computed 11" in out


def test_verify_tables_small_range_ok(capsys):
    code, out, _ = run(capsys, "verify-tables", "--n-max", "11")
    assert code == 0
    assert "U-D nonzero at: none" in out


def test_nu_decompose(capsys):
    code, out, _ = run(capsys, "nu", "--decompose", "26")
    assert code == 0
    assert out.strip() == "26 = C(7,2)+C(3,2)+C(2,2)+C(2,2), ν=14"


def test_nu_verify(capsys):
    code, out, _ = run(capsys, "nu", "--verify", "405", "50000")
    assert code == 0
    assert "0 violations" in out


def test_nu_max_below(capsys):
    code, out, _ = run(capsys, "nu", "--max-below", "405")
    assert out.strip() == "max ν = 42 at m = 404"


def test_nu_verify_below_start_is_usage_error(capsys):
    code, _, _ = run(capsys, "nu", "--verify", "100", "500")
    assert code == 2


def test_character_single_part(capsys):
    code, out, _ = run(capsys, "character", "--lambda", "7", "--n-max", "21")
    values = [int(v) for v in out.strip().split(",")]
    assert values == [int(N % 7 == 0) for N in range(22)]


def test_character_binomials(capsys):
    _, out, _ = run(capsys, "character", "--lambda", "1,1,1", "--n-max", "3")
    assert out.strip() == "1,3,6,10"


def test_character_relation_partners(capsys):
    def values(lam):
        _, out, _ = run(capsys, "character", "--lambda", lam, "--n-max", "30", "--format", "json")
        return json.loads(out)["values"]

    a, b, c = values("2,2,1,1,1"), values("3,1,1,1,1"), values("3,2,2")
    assert [4 * x for x in a] == [3 * y + z for y, z in zip(b, c)]


def test_character_unsorted_warns(capsys):
    code, out, err = run(capsys, "character", "--lambda", "1,2,2", "--n-max", "4", "--format", "csv")
    assert code == 0 and "warning" in err
    assert out.splitlines()[0] == "N,chi"


@pytest.mark.parametrize("bad", ["0,1", "-2", "a,b", ""])
def test_character_rejects_bad_lambda(capsys, bad):
    code, _, _ = run(capsys, "character", "--lambda", bad, "--n-max", "3")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symspan", "nu", "--decompose", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 = C(2,2), ν=2"


def test_verify_tables_full_run(capsys):
    # Exit 0 would need the published G(12) = 32, which contradicts the
    # definition (26 is not a d-value for n = 12); see test_bounds.
    code, out, _ = run(capsys, "verify-tables")
    lines = out.splitlines()
    assert lines[0] == "U-D nonzero at: n=19 (gap 1), n=20 (gap 1)"
    assert lines[1] == "MISMATCH: table 2 G(12): published 32, computed 25"
    assert len(lines) == 2
    assert code == 1
