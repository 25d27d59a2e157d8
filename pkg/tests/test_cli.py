from __future__ import annotations

import csv
import io
import json

import pytest

from genladder.cli import BENCH_HEADER, run
from genladder.embedding import embedding_from_json, verify_embedding
from genladder.formats import ParseError, RunConfig, TooManyEdges, parse_instance, random_instance, serialize_instance
from genladder.ladder import new_ladder
from genladder.rng import SplitMix64
from genladder.witness import certificate_from_json, verify_certificate

from .conftest import FIX

# ---------------------------------------------------------------------------
# Formats and randomness
# ---------------------------------------------------------------------------


def test_parse_forms():
    assert parse_instance("functigraph 3\n3 2 1\n") == FIX["FAN"]
    text = "# a comment\nladder 3 3  # trailing\n1 1\n\n2 2\n3 3\n"
    assert parse_instance(text) == FIX["LADDER"]
    assert parse_instance("ladder 2 2\n") == new_ladder(2, 2, [])


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("ladder 2 2\n1 3\n", 2, "r = 3 outside [1,2]"),
        ("ladder 2 2\n1 1\n1 1\n", 3, "duplicate edge (1,1)"),
        ("ladder 2 2\n1\n", 2, "got 1 fields"),
        ("ladder 2 x\n", 1, "expected an integer"),
        ("functigraph 3\n1 2\n", 2, "expected 3 function values"),
        ("functigraph 2\n1 5\n", 2, "f(2) = 5"),
        ("graph 2 2\n", 1, "unknown header"),
        ("", 1, "empty input"),
    ],
)
def test_parse_errors_carry_positions(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_splitmix_reference_values():
    # published first outputs for seed 0
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_rng_helpers():
    rng = SplitMix64(5)
    assert all(0 <= rng.below(7) < 7 for _ in range(200))
    assert all(3 <= rng.between(3, 4) <= 4 for _ in range(50))
    s = rng.sample(50, 20)
    assert len(set(s)) == 20 and s == sorted(s) and all(0 <= x < 50 for x in s)
    with pytest.raises(ValueError):
        rng.sample(3, 4)
    with pytest.raises(ValueError):
        rng.below(0)


def test_random_instance():
    full = random_instance(RunConfig(seed=1), 3, 3, 9)
    assert full.k == 9 and {(e.l, e.r) for e in full.cross} == {(l, r) for l in (1, 2, 3) for r in (1, 2, 3)}
    a = random_instance(RunConfig(seed=42), 20, 30, 50)
    assert a == random_instance(RunConfig(seed=42), 20, 30, 50)
    assert a != random_instance(RunConfig(seed=43), 20, 30, 50)
    with pytest.raises(TooManyEdges):
        random_instance(RunConfig(seed=1), 2, 2, 5)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in FIX.items():
        p = tmp_path / f"{name.lower()}.txt"
        p.write_text(serialize_instance(g))
        out[name] = str(p)
    return out


def test_check(files, capsys):
    assert run(["check", files["SAMPLE"]]) == 0
    assert "planar" in capsys.readouterr().out
    assert run(["check", files["K33"], "--oracle"]) == 1
    out = capsys.readouterr().out
    assert "(2,2)" in out and "agrees" in out
    assert run(["check", files["SAMPLE"], "--outer"]) == 1
    assert run(["check", files["LADDER"], "--outer", "--oracle"]) == 0
    assert "agrees" in capsys.readouterr().out


def test_check_report(files, capsys):
    assert run(["check", files["FAN"], "--report"]) == 0
    out = capsys.readouterr().out
    assert "2 2 1 0 1 0" in out.splitlines()


def test_witness(files, tmp_path, capsys):
    target = tmp_path / "cert.json"
    assert run(["witness", files["K33"], "-o", str(target)]) == 0
    cert = certificate_from_json(json.loads(target.read_text()))
    assert verify_certificate(FIX["K33"], cert)
    assert run(["witness", files["K4"], "--outer", "--format", "text"]) == 0
    assert capsys.readouterr().out.startswith("pattern K4\n")
    assert run(["witness", files["LADDER"]]) == 2
    assert "error" in capsys.readouterr().err


def test_embed_and_verify(files, tmp_path, capsys):
    target = tmp_path / "emb.json"
    assert run(["embed", files["SAMPLE"], "-o", str(target)]) == 0
    assert verify_embedding(FIX["SAMPLE"], embedding_from_json(target.read_text()))
    assert run(["verify", files["SAMPLE"], str(target)]) == 0
    assert run(["verify", files["SAMPLE"], str(target), "--method", "sweep"]) == 0
    assert capsys.readouterr().out.count("valid") == 2

    data = json.loads(target.read_text())
    edge = next(e for e in data["edges"] if e["endpoints"] == [["G1", 7], ["G2", 1]])
    edge["waypoints"][1][1] = 0  # drag the bend below the whole drawing
    target.write_text(json.dumps(data))
    assert run(["verify", files["SAMPLE"], str(target)]) == 1
    assert "invalid" in capsys.readouterr().out

    assert run(["embed", files["K33"]]) == 2
    assert run(["embed", files["FAN"], "--outer", "--format", "svg"]) == 0
    assert capsys.readouterr().out.lstrip().startswith("<svg")


def test_verify_malformed_embedding(files, tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["verify", files["LADDER"], str(bad)]) == 2
    assert run(["verify", files["LADDER"], str(tmp_path / "missing.json")]) == 2
    assert "error" in capsys.readouterr().err


def test_random_command(tmp_path, capsys):
    assert run(["random", "--seed", "1", "-m", "3", "-n", "3", "-k", "9"]) == 0
    assert parse_instance(capsys.readouterr().out).k == 9
    target = tmp_path / "r.txt"
    assert run(["random", "--seed", "9", "-m", "4", "-n", "5", "-k", "6", "-o", str(target)]) == 0
    assert parse_instance(target.read_text()) == random_instance(RunConfig(seed=9), 4, 5, 6)
    assert run(["random", "--seed", "1", "-m", "2", "-n", "2", "-k", "5"]) == 2


def test_bench(tmp_path, capsys):
    assert run(["bench", "--seed", "3", "--sizes", "4x4x6", "30x30x200"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == BENCH_HEADER
    assert [r[:3] for r in rows[1:]] == [["4", "4", "6"], ["30", "30", "200"]]
    assert rows[1][5] != "" and rows[2][5] == ""  # oracle only on small instances
    assert all(r[6] in ("planar", "nonplanar") for r in rows[1:])
    assert run(["bench", "--seed", "3", "--sizes", "4by4"]) == 2


def test_bad_input_never_tracebacks(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("ladder 2 2\n1 3\n")
    assert run(["check", str(p)]) == 2
    assert "line 2, column 3" in capsys.readouterr().err
    assert run(["check", str(tmp_path / "nope.txt")]) == 2
    assert run(["frobnicate"]) == 2
    assert run([]) == 2
