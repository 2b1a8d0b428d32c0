import os
from pathlib import Path

import pytest

import bggkit

DATA = Path(os.environ.get("BGGKIT_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
S3 = str(DATA / "s3.json")
S3_ALIASES = str(DATA / "s3_aliases.json")


def test_s3_weights():
    rows = bggkit.weights(S3, aliases=S3_ALIASES)
    assert [r["alias"] for r in rows] == ["(e,+)", "(e,-)", "(e,ρ)", "(σ,+)", "(σ,-)", "(τ,0)", "(τ,1)", "(τ,2)"]
    assert [r["dim"] for r in rows] == [1, 1, 2, 3, 3, 2, 2, 2]
    assert sum(r["dim"] ** 2 for r in rows) == 36
    assert all(r["dual"] == r["alias"] for r in rows)


def test_fusion_dimensions():
    rows = {r["alias"]: r["dim"] for r in bggkit.weights(S3, aliases=S3_ALIASES)}
    for a in rows:
        for b in rows:
            prod = bggkit.fusion(S3, a, b, aliases=S3_ALIASES)
            assert sum(n * rows[w] for w, n in prod.items()) == rows[a] * rows[b]
    assert bggkit.fusion(S3, "(e,ρ)", "(e,ρ)", aliases=S3_ALIASES) == {"(e,+)": 1, "(e,-)": 1, "(e,ρ)": 1}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_taft_verifies(n):
    s = bggkit.taft(n)
    assert s["failures"] == []
    assert s["weights"] == n * n
    assert s["simple_projective"] == n


def test_taft_ind_and_tensor(tmp_path):
    bggkit.taft(3, out=str(tmp_path))
    args = (str(tmp_path / "profile.json"), str(tmp_path / "simples.json"))
    aliases = str(tmp_path / "aliases.json")
    assert bggkit.ind(*args, "(0,0)", aliases=aliases) == {"(0,0)": {0: 1}, "(2,2)": {1: 1}}
    t = bggkit.tensor(*args, "(2,2)", "(2,2)", aliases=aliases)
    assert t["ind"] == {"(0,0)": {-2: 1}}
    assert t["dim_product"] == t["dim_expansion"] == 9
    assert t["graded_consistent"]


def test_fk3_report():
    r = bggkit.bgg(DATA / "fk3_profile.json", decomposition=DATA / "fk3_verma_simples.json", aliases=S3_ALIASES)
    assert all(c["passed"] for c in r["checks"])
    flagged = sorted(w["alias"] for w in r["weights"] if w["class"] == "simple_projective")
    assert flagged == sorted(["(e,-)", "(σ,+)", "(τ,1)", "(τ,2)"])


def test_errors():
    with pytest.raises(bggkit.InputError):
        bggkit.weights(str(DATA / "missing.json"))
    with pytest.raises(ValueError):
        bggkit.taft(1)
    with pytest.raises(bggkit.InputError):
        bggkit.fusion(S3, "g9r9", "g0r0")
