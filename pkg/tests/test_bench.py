from bitpath.bench import bench_modmul, sample_pairs, scaling_rows, verify_random


def test_sample_pairs_distinct_and_seeded():
    pairs = sample_pairs(10, 50, seed=3)
    assert len(pairs) == 50 and all(a != b for a, b in pairs)
    assert pairs == sample_pairs(10, 50, seed=3)


def test_bench_report_verified():
    r = bench_modmul(500, 3, queries=12, seed=2, verify=12)
    assert r.verified == 12 and r.mismatches == 0
    assert r.path_count_range[0] >= 1
    assert r.median <= r.max and r.mean > 0
    assert "time per query" in r.summary()


def test_flat_bench_and_scaling():
    reports = [bench_modmul(n, 3, queries=5, seed=0, flat=True, verify=5) for n in (100, 300)]
    rows = scaling_rows(reports)
    assert [row["n"] for row in rows] == [100, 300]
    assert all(row["mismatches"] == 0 and row["verified"] == 5 for row in rows)


def test_verify_random_clean():
    rep = verify_random(30, 16, seed=4)
    assert rep.ok and rep.instances == 30
