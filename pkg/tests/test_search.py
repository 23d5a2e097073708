import json
from fractions import Fraction as F

import pytest

from squarediffs.errors import SquareDiffError
from squarediffs.fiber import fiber_of_triple
from squarediffs.search import (
    Checkpoint,
    SearchConfig,
    SolutionRecord,
    legs_by_hypotenuse,
    load_checkpoint,
    naive_oracle_search,
    run_search,
    search,
)
from squarediffs.transforms import engel_cycle_euler
from squarediffs.triples import verify_euler


class TestLegsByHypotenuse:
    def test_first_triple(self):
        assert legs_by_hypotenuse(5, 6) == {5: [4, 3]}

    def test_697_legs(self):
        # 697 = 17 * 41, both 1 mod 4
        legs = legs_by_hypotenuse(697, 698)[697]
        for y in (680, 672, 185, 153):
            assert y in legs
        assert legs == sorted(legs, reverse=True)
        for y in legs:
            root = round((697 * 697 - y * y) ** 0.5)
            assert root * root == 697 * 697 - y * y

    def test_non_hypotenuse(self):
        assert legs_by_hypotenuse(7, 8) == {}

    def test_completeness_small_range(self):
        # against the definition, by direct scan
        got = legs_by_hypotenuse(1, 200)
        for x in range(1, 200):
            expected = sorted(
                (
                    y
                    for y in range(1, x)
                    if round((x * x - y * y) ** 0.5) ** 2 == x * x - y * y
                ),
                reverse=True,
            )
            assert got.get(x, []) == expected

    def test_bad_range(self):
        with pytest.raises(SquareDiffError):
            legs_by_hypotenuse(0, 5)


class TestSearch:
    def test_below_1000(self):
        count, records = search(SearchConfig(bound_N=1000))
        assert count == 4
        assert [(r.triple.x, r.triple.y, r.triple.z) for r in records] == [
            (697, 185, 153),
            (697, 680, 672),  # companion of the smallest solution
            (925, 533, 520),
            (925, 765, 756),
        ]
        assert records[0].m == F(13, 5)

    def test_below_100(self):
        count, records = search(SearchConfig(bound_N=100))
        assert count == 0 and records == []

    def test_boundary_at_smallest(self):
        assert naive_oracle_search(697)[0] == 0
        assert naive_oracle_search(698)[0] == 2  # the triple and its companion

    @pytest.mark.parametrize("bound", [500, 1000, 5000])
    def test_oracle_equivalence(self, bound):
        count, records = search(SearchConfig(bound_N=bound, block_width=777))
        ocount, orecords = naive_oracle_search(bound)
        assert count == ocount
        assert [r.triple for r in records] == [r.triple for r in orecords]

    def test_oracle_refuses_large_bound(self):
        with pytest.raises(SquareDiffError):
            naive_oracle_search(10**5 + 1)

    def test_records_verify_and_locate(self):
        _, records = search(SearchConfig(bound_N=20000))
        assert records  # 697 and others
        for record in records:
            t = record.triple
            verify_euler(t.x, t.y, t.z)
            m, _, _ = fiber_of_triple(t)
            assert m == record.m

    def test_cycle_closure_observation(self):
        bound = 20000
        _, records = search(SearchConfig(bound_N=bound))
        found = {(r.triple.x, r.triple.y, r.triple.z) for r in records}
        for xyz in found:
            e, _ = verify_euler(*xyz)
            image = engel_cycle_euler(e)
            if image.x < bound:
                assert (image.x, image.y, image.z) in found

    def test_worker_determinism(self):
        cfg1 = SearchConfig(bound_N=30000, block_width=7000, worker_count=1)
        cfg4 = SearchConfig(bound_N=30000, block_width=7000, worker_count=4)
        assert search(cfg1) == search(cfg4)

    def test_block_width_independence(self):
        a = search(SearchConfig(bound_N=30000, block_width=999))
        b = search(SearchConfig(bound_N=30000, block_width=30000))
        assert a == b


class TestRecordSerialization:
    def test_jsonl_schema(self):
        record = SolutionRecord.from_xyz(697, 185, 153)
        obj = json.loads(record.jsonl_line())
        assert obj == {
            "x": "697",
            "y": "185",
            "z": "153",
            "t": "672",
            "u": "680",
            "v": "104",
            "m": "13/5",
        }

    def test_csv_line(self):
        record = SolutionRecord.from_xyz(697, 185, 153)
        assert record.csv_line() == "697,185,153,672,680,104,13/5"


class TestCheckpointResume:
    def test_checkpoint_roundtrip(self, tmp_path):
        out = tmp_path / "out.jsonl"
        ck = tmp_path / "ck.json"
        cfg = SearchConfig(
            bound_N=5000, block_width=1000, checkpoint_path=str(ck)
        )
        count, start = run_search(cfg, str(out))
        assert start == 1
        saved = load_checkpoint(str(ck))
        assert saved.last_completed_block_end == 5000
        assert saved.running_count == count
        assert saved.config_hash == cfg.config_hash()

    def test_resume_is_byte_identical(self, tmp_path):
        full_out = tmp_path / "full.jsonl"
        cfg_plain = SearchConfig(bound_N=3000, block_width=500)
        run_search(cfg_plain, str(full_out))

        # simulate an interrupted run: stop after two blocks
        part_out = tmp_path / "part.jsonl"
        ck = tmp_path / "ck.json"
        cfg = SearchConfig(
            bound_N=3000, block_width=500, checkpoint_path=str(ck)
        )
        from squarediffs.search import _scan_blocks, _write_checkpoint

        with open(part_out, "w") as fh:
            done = 0
            n = 0
            for end, found in _scan_blocks(cfg, 1):
                for xyz in found:
                    fh.write(SolutionRecord.from_xyz(*xyz).jsonl_line() + "\n")
                n += len(found)
                done = end
                if done >= 1001:
                    break
            _write_checkpoint(str(ck), Checkpoint(done, n, cfg.config_hash()))

        count, start = run_search(cfg, str(part_out))
        assert start == 1001
        assert part_out.read_bytes() == full_out.read_bytes()

    def test_resume_rejects_changed_config(self, tmp_path):
        ck = tmp_path / "ck.json"
        out = tmp_path / "out.jsonl"
        cfg = SearchConfig(bound_N=2000, block_width=500, checkpoint_path=str(ck))
        run_search(cfg, str(out))
        other = SearchConfig(bound_N=3000, block_width=500, checkpoint_path=str(ck))
        with pytest.raises(SquareDiffError):
            run_search(other, str(out))

    def test_csv_format(self, tmp_path):
        out = tmp_path / "out.csv"
        cfg = SearchConfig(bound_N=1000, emit_format="csv")
        count, _ = run_search(cfg, str(out))
        lines = out.read_text().splitlines()
        assert lines[0] == "x,y,z,t,u,v,m"
        assert lines[1] == "697,185,153,672,680,104,13/5"
        assert count == 4 and len(lines) == 5
