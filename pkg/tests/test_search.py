"""Canonical enumeration, scanning, checkpointing, determinism."""

import pytest

from reesreg import CheckpointError, canonical_triples, make_ideal, scan
from reesreg.search import (
    SearchRecord,
    _verify_counterexample,
    examine,
    load_checkpoint,
    parse_record_line,
)


def test_canonical_triples_dedupe_mirrors():
    # for d = 4 the interior pairs are (1,2), (1,3), (2,3); the last is the
    # mirror of the first, so exactly two cases are canonical
    assert canonical_triples(4, 4) == [(4, 1, 2), (4, 1, 3)]
    assert canonical_triples(5, 5) == [(5, 1, 2), (5, 1, 3), (5, 1, 4), (5, 2, 3)]
    assert len(canonical_triples(6, 6)) == 6
    assert len(canonical_triples(4, 60)) == 17544


def test_canonical_triples_validation():
    with pytest.raises(ValueError, match="degrees below 2"):
        canonical_triples(1, 5)
    with pytest.raises(ValueError, match="empty degree range"):
        canonical_triples(6, 5)


def test_examine_true_case():
    record = examine((4, 1, 2))
    assert record.line() == "4,1,2,2,2,TRUE"
    assert record.witness is None


def test_examine_false_case_and_mirror_verification():
    record = examine((157, 35, 98))
    assert record.line() == "157,35,98,20,20,FALSE"
    assert record.witness is not None
    _verify_counterexample(record)  # the mirrored ideal must also fail


def test_record_line_roundtrip():
    rec = parse_record_line("157,35,98,20,20,FALSE")
    assert rec == SearchRecord(157, 35, 98, 20, 20, "FALSE")
    assert rec.line() == "157,35,98,20,20,FALSE"
    unresolved = parse_record_line("9,2,5,-,-,UNRESOLVED")
    assert unresolved.r_j is None
    assert unresolved.reg_f is None
    assert unresolved.line() == "9,2,5,-,-,UNRESOLVED"


@pytest.mark.parametrize(
    "line",
    [
        "",
        "4,1,2,2,2,MAYBE",
        "4,1,2,2,TRUE",
        "4,1,2,2,2,TRUE ",
        " 4,1,2,2,2,TRUE",
        "4,1,2,2,2,true",
        "4,-1,2,2,2,TRUE",
        "d,a,b,rj,regf,TRUE",
    ],
)
def test_corrupt_lines_rejected(line):
    with pytest.raises(CheckpointError, match="corrupt checkpoint line"):
        parse_record_line(line)


def test_load_checkpoint(tmp_path):
    path = tmp_path / "ck.txt"
    path.write_text("4,1,2,2,2,TRUE\n\n4,1,3,2,2,TRUE\n")
    done = load_checkpoint(str(path))
    assert set(done) == {(4, 1, 2), (4, 1, 3)}

    with pytest.raises(CheckpointError, match="no checkpoint at"):
        load_checkpoint(str(tmp_path / "missing.txt"))

    bad = tmp_path / "bad.txt"
    bad.write_text("4,1,2,2,2,TRUE\n4,1,3,2,2,oops\n")
    with pytest.raises(CheckpointError, match="line 2"):
        load_checkpoint(str(bad))


def test_scan_small_range_all_true():
    counterexamples, summary = scan(4, 6, workers=1)
    assert counterexamples == []
    assert summary.examined == 12
    assert summary.true_count == 12
    assert summary.false_count == 0
    assert summary.unresolved_count == 0
    assert summary.per_degree == {4: (2, 2, 0, 0), 5: (4, 4, 0, 0), 6: (6, 6, 0, 0)}
    assert summary.unresolved == ()


def test_scan_is_deterministic_across_worker_counts():
    solo = scan(4, 10, workers=1)
    duo = scan(4, 10, workers=2)
    assert solo[0] == duo[0]
    assert solo[1] == duo[1]


def test_scan_progress_callback():
    seen = []
    scan(4, 5, workers=1, progress=seen.append)
    assert len(seen) == 6
    assert {(r.d, r.a, r.b) for r in seen} == set(canonical_triples(4, 5))


def test_checkpoint_write_and_resume(tmp_path):
    path = str(tmp_path / "scan.txt")
    scan(4, 6, workers=1, checkpoint=path)
    lines = [l for l in open(path).read().splitlines() if l]
    assert len(lines) == 12
    assert sorted(parse_record_line(l).line() for l in lines) == sorted(lines)

    # truncate to simulate a killed scan, then resume over a larger range
    with open(path, "w") as handle:
        handle.write("\n".join(lines[:5]) + "\n")
    resumed = scan(4, 8, workers=1, checkpoint=path, resume=True)
    fresh = scan(4, 8, workers=1)
    assert resumed[0] == fresh[0]
    assert resumed[1] == fresh[1]
    final = [l for l in open(path).read().splitlines() if l]
    assert len(final) == len(canonical_triples(4, 8))


def test_resume_requires_checkpoint():
    with pytest.raises(ValueError, match="resume requires a checkpoint"):
        scan(4, 5, resume=True)


def test_worker_env_must_be_integer(monkeypatch):
    monkeypatch.setenv("REESREG_WORKERS", "many")
    with pytest.raises(ValueError, match="REESREG_WORKERS"):
        scan(4, 4)
    monkeypatch.setenv("REESREG_WORKERS", "1")
    _, summary = scan(4, 4)
    assert summary.examined == 2


def test_mirror_verification_rejects_true_mirrors():
    # a TRUE case falsely recorded as FALSE must be caught, not reported
    fake = examine((4, 1, 2))
    forged = SearchRecord(4, 1, 2, fake.r_j, fake.reg_f, "FALSE", None)
    with pytest.raises(RuntimeError, match="mirror invariance"):
        _verify_counterexample(forged)
