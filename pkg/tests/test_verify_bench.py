import pytest

from invlyndon import bench, verify


def test_select():
    assert {p.name for p in verify.select(["oracle"])} == {
        "lyndon-vs-naive", "inverse-lyndon-vs-naive", "cfl-vs-naive",
        "canonical-pair-vs-naive", "icfl-vs-naive",
    }
    assert len(verify.select(None)) == len(verify.PROPERTIES)
    with pytest.raises(KeyError):
        verify.select(["missing"])


def test_sweep_small():
    report = verify.run_sweep(2, 8)
    assert report.ok
    assert report.words == 510
    assert report.violations == 0


def test_sweep_jobs_match_serial():
    serial = verify.run_sweep(3, 5, ["roundtrip"])
    parallel = verify.run_sweep(3, 5, ["roundtrip"], jobs=2)
    assert serial.checked == parallel.checked and parallel.ok


def test_sweep_bounds():
    with pytest.raises(ValueError):
        verify.run_sweep(2, 0)
    with pytest.raises(ValueError):
        verify.run_sweep(2, 99)
    with pytest.raises(ValueError):
        verify.run_sweep(5, 3)


def test_random_word_deterministic():
    assert bench.random_word(50, 3) == bench.random_word(50, 3)
    assert bench.random_word(50, 3) != bench.random_word(50, 4)
    assert set(bench.random_word(1000, 1).data) == set(b"abcd")


def test_run_bench_shape():
    rows = bench.run_bench([10, 100], seed=7, memory=True, repeat=2)
    assert [(r.op, r.size) for r in rows] == [(op, n) for n in (10, 100) for op in bench.ALL_OPS]
    assert all(r.seconds >= 0 and r.peak_bytes is not None for r in rows)
    with pytest.raises(ValueError):
        bench.run_bench([10], ops=["nope"])
    with pytest.raises(ValueError):
        bench.run_bench([])
