import pytest

import selgames


BASE = {
    "game": "nbd-covers",
    "track": "product",
    "group": {"component": {"kind": "integers"}},
    "window": 3,
    "innings": 8,
    "one": {"kind": "randomNbd", "seed": 7, "growth": 1},
    "two": {"kind": "nbd"},
    "seed": 7,
}


def test_schedule_helpers():
    assert [selgames.pair(r, j) for r, j in [(0, 0), (1, 0), (0, 1)]] == [0, 1, 2]
    for n in range(64):
        r, j = selgames.unpair(n)
        assert selgames.pair(r, j) == n
    assert selgames.bound(0, 3) == 5
    assert selgames.bound(8, 4) == 69


def test_suite_names():
    names = selgames.suites()
    assert len(names) == 7
    assert "claims" in names and "window-invariance" in names


def test_simulate_and_validate():
    t = selgames.simulate(BASE)
    assert t["summary"]["status"] == "truncated"
    assert len(t["innings"]) == 8
    assert t["header"]["one"]["kind"] == "randomNbd"

    report = selgames.validate(t)
    assert report["violations"] == []

    # Tampering is caught.
    bad = selgames.simulate(BASE)
    bad["innings"][3]["inning"] = 99
    report = selgames.validate(bad)
    assert any(v["rule"] == "inning-numbering" for v in report["violations"])


def test_round_trip_text():
    raw = selgames.simulate_jsonl(BASE)
    assert selgames.dump_transcript(selgames.parse_transcript(raw)) == raw


def test_default_probes():
    probes = selgames.default_probes(BASE)
    assert probes[0] == []  # identity
    assert len(probes) == 4


def test_verify_suite():
    report = selgames.verify("schedule", seed=3)
    assert report["suite"] == "schedule"
    assert report["violations"] == []
    assert report["cases"] > 0


def test_errors():
    with pytest.raises(selgames.ConfigError):
        selgames.simulate({**BASE, "innings": 0})
    faulty = {**BASE, "one": {"kind": "scriptedNbd", "script": [[0], [7]]}}
    t = selgames.simulate(faulty)
    assert t["summary"]["status"] == "fault"
    assert t["summary"]["fault"]["rule"] == "one-window"
    with pytest.raises(selgames.LegalityError):
        selgames.simulate(faulty, capture_faults=False)
