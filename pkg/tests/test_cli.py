"""Command-line surface."""

import io
import json

import pytest

from g2kl import cli


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def test_reduce():
    assert run(["reduce", "ss"]) == (0, "e 0\n")
    assert run(["reduce", "121212"]) == (0, "121212 6\n")
    code, text = run(["reduce", "tstsrtstsr"])
    assert code == 0 and text.split()[1] == "10"


def test_length():
    assert run(["length", "ststst"]) == (0, "6\n")


def test_bruhat():
    assert run(["bruhat", "1", "121212"]) == (0, "true\n")
    assert run(["bruhat", "0", "121212"]) == (0, "false\n")
    assert run(["bruhat", "--oracle", "1", "121212"]) == (0, "true\n")


def test_klpoly_and_mu():
    assert run(["klpoly", "1", "121212"]) == (0, "1\n")
    assert run(["mu", "", "1"]) == (0, "1\n")
    assert run(["klpoly", "0", "121212"]) == (0, "0\n")


def test_cproduct():
    code, text = run(["cproduct", "121212", "121212"])
    assert code == 0
    assert text == "([2]^6-4[2]^4+3[2]^2)*C[121212]\n"
    code, text = run(["cproduct", "", "121212"])
    assert text == "C[121212]\n"
    code, text = run(["cproduct", "121212", "0121212"])
    assert text.startswith("[2]*C[") and "([2]^5-3[2]^3+[2])*C[121212]" in text


def test_cell_command():
    assert run(["cell", "121212"]) == (0, "(e,(0,0),e)\n")
    assert run(["cell", "1"]) == (0, "not-in-c0\n")


def test_repmult():
    code, text = run(["repmult", "1,0", "1,0"])
    assert code == 0
    assert text.splitlines() == ["(2,0) 1", "(0,1) 1", "(1,0) 1", "(0,0) 1"]


def test_parse_error_exit_code():
    code, _ = run(["reduce", "xyz"])
    assert code == 2
    code, _ = run(["repmult", "1,0", "nope"])
    assert code == 2


def test_resource_error_exit_code():
    code, _ = run(["--max-length", "4", "cproduct", "121212", "121212"])
    assert code == 3


def test_delta_table_formats(tmp_path):
    code, text = run(["--format", "csv", "delta-table"])
    assert code == 0
    lines = text.splitlines()
    assert lines[1] == ",".join(
        ("u_index", "u_word", "d_u", "uprime_index", "uprime_word",
         "d_uprime", "delta_0", "delta_xa", "delta_xb", "class"))
    assert len(lines) == 2 + 144

    code, jtext = run(["--format", "json", "delta-table"])
    doc = json.loads(jtext)
    assert len(doc["rows"]) == 144
    # identical content across formats
    for row, line in zip(doc["rows"], lines[2:]):
        assert ",".join(row[c] for c in doc["columns"]) == line

    code, ltx = run(["--format", "latex", "delta-table"])
    assert "\\begin{tabular}" in ltx and ltx.count("\\\\") == 1 + 144


def test_delta_table_determinism_across_jobs():
    _, a = run(["--format", "csv", "delta-table"])
    _, b = run(["--format", "csv", "--jobs", "3", "delta-table"])
    assert a == b


def test_mu_table():
    code, text = run(["--format", "csv", "--bound-a", "1", "--bound-b", "0", "mu-table"])
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 2 + 12 * 2 * 12 * 2
    assert all(int(line.rsplit(",", 1)[1]) <= 3 for line in lines[2:])


def test_cache_commands(tmp_path):
    path = str(tmp_path / "cache.tsv")
    code, text = run(["--cache", path, "klpoly", "1", "121212"])
    assert code == 0
    code, text = run(["--cache", path, "cache", "info"])
    assert code == 0 and "records" in text
    code, text = run(["--cache", path, "cache", "clear"])
    assert code == 0 and "removed" in text
    code, text = run(["--cache", path, "cache", "info"])
    assert "absent" in text


def test_headers_are_stamped():
    _, a = run(["--format", "csv", "delta-table"])
    assert a.splitlines()[0].startswith("# g2kl ")
    _, j = run(["--format", "json", "delta-table"])
    assert json.loads(j)["meta"].startswith("g2kl ")
