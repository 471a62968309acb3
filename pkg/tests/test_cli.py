from __future__ import annotations

import contextlib
import io
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from ndeg.cli import run
from ndeg.profile import Profile


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_closed_connected(capsys):
    code, out, _ = call(capsys, "check", "3^4 2^1", "--mode", "max-closed", "--connected")
    assert code == 0 and out.endswith("verdict: realizable\n")


def test_realize_open_refusal_cites_exclusion(capsys):
    code, out, err = call(capsys, "realize", "3^4 2^1", "--mode", "max-open")
    assert code == 1 and out == ""
    assert "(d^{d+1},2^1)" in err


def test_count(capsys):
    assert call(capsys, "count", "6", "ccon")[:2] == (0, "8\n")


def test_min_verdict_codes(capsys):
    assert call(capsys, "check", "2^3 1^2", "--mode", "min-closed")[0] == 0
    assert call(capsys, "check", "2^2", "--mode", "min-closed")[0] == 1
    assert call(capsys, "check", "4^4 3^1 2^1 1^2", "--mode", "min-closed")[0] == 2
    code, _, err = call(capsys, "realize", "4^4 3^1 2^1 1^2", "--mode", "min-closed")
    assert code == 2 and err.startswith("unknown:")


def test_realize_formats(capsys):
    code, out, _ = call(capsys, "realize", "1^2")
    assert (code, out) == (0, "2 1\n0 1\n")
    code, out, _ = call(capsys, "realize", "1^2", "--format", "dot")
    assert out == "graph {\n  0;\n  1;\n  0 -- 1;\n}\n"


def test_verify_and_profile_of(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("5 5\n0 1\n0 2\n0 3\n1 2\n3 4\n")
    assert call(capsys, "verify", str(path), "3^4 2^1", "--connected")[:2] == (0, "ok\n")
    assert call(capsys, "verify", str(path), "3^5")[:2] == (1, "mismatch\n")
    assert call(capsys, "profile-of", str(path), "--mode", "max-open")[1] == "3^3 2^2\n"
    assert call(capsys, "profile-of", str(path), "--mode", "min-closed")[1] == "2^3 1^2\n"


def test_enumerate_and_sample(capsys):
    assert call(capsys, "enumerate", "4", "CCon")[1] == "3^4\n2^4\n"
    a = call(capsys, "sample", "10", "CCon", "--seed", "5", "--draws", "4")[1]
    b = call(capsys, "sample", "10", "CCon", "--seed", "5", "--draws", "4")[1]
    assert a == b and len(a.splitlines()) == 4


def test_oracle(capsys):
    code, out, _ = call(capsys, "oracle", "3^3", "--mode", "max-open")
    assert code == 1 and out == "verdict: not-realizable\n"
    code, out, _ = call(capsys, "oracle", "1^2", "--connected")
    assert code == 0 and out == "verdict: realizable\n2 1\n0 1\n"
    code, _, err = call(capsys, "oracle", "1^9", "--n-limit", "9")
    assert code == 64 and err.startswith("error: limit:")


@pytest.mark.parametrize("argv,code,kind", [
    (["check", "3^x"], 65, "profile"),
    (["bogus"], 64, "usage"),
    ([], 64, "usage"),
    (["check", "2^3", "--mode", "sideways"], 64, "usage"),
    (["check", "2^3", "--mode", "min-closed", "--connected"], 64, "usage"),
    (["verify", "/no/such/file", "2^3"], 66, "io"),
    (["count", "1", "CCon"], 64, "usage"),
    (["enumerate", "5", "OGenU"], 64, "usage"),
])
def test_errors(capsys, argv, code, kind):
    got, _, err = call(capsys, *argv)
    assert got == code
    assert err.startswith(f"error: {kind}:") and err.count("\n") == 1


def test_bad_graph(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("3 1\n0 0\n"))
    assert call(capsys, "profile-of", "-")[0] == 65


@st.composite
def closed_profiles(draw):
    degs = sorted(draw(st.lists(st.integers(2, 9), min_size=1, max_size=4, unique=True)), reverse=True)
    counts = [draw(st.integers(degs[0] + 1, degs[0] + 6))] + [draw(st.integers(1, 5)) for _ in degs[1:]]
    return Profile(tuple(zip(degs, counts)))


@settings(max_examples=60, deadline=None)
@given(closed_profiles(), st.sampled_from(["max-closed", "max-open"]), st.booleans())
def test_realize_verify_roundtrip(p, mode, connected):
    flags = ["--mode", mode] + (["--connected"] if connected else [])
    buf, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = run(["realize", p.render(), *flags])
    graph = buf.getvalue()
    if code != 0:
        return
    proc = subprocess.run([sys.executable, "-m", "ndeg", "verify", "-", p.render(), *flags],
                          input=graph, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
