import numpy as np
import pytest

from gapedit.greedy import GapVerdict
from gapedit.hashing import HashConfig
from gapedit.instances import gen_large_side, gen_planted
from gapedit.strings import (has_approximate_alignment,
                             max_shift_alignment_bruteforce)
from gapedit.wave import (BruteForceShiftOracle, IndexedShiftOracle,
                          NoPrepShiftOracle, OneSidedWaveIndex, WaveTable,
                          gap_wave, greedy_wave, one_sided_max_shift_align,
                          wave_jump_violations, wave_process_b)

CFG = HashConfig.from_seed(55)


class TestGreedyWaveExact:
    def test_close_pairs_small(self):
        for t in range(15):
            inst = gen_planted(200, 4, 9, seed=t)
            v, _ = gap_wave(inst.a, inst.b, 9, 3, "exact")
            assert v == GapVerdict.SMALL

    def test_far_pairs_large(self):
        for t in range(8):
            # 10kl = 270 < n = 400
            inst = gen_large_side(400, 64, 270, seed=t)
            v, _ = gap_wave(inst.a, inst.b, 9, 3, "exact")
            assert v == GapVerdict.LARGE

    def test_identical_pair_finishes_on_row_zero(self):
        inst = gen_planted(128, 4, 0, seed=0)
        tab = WaveTable()
        v, _ = gap_wave(inst.a, inst.b, 9, 3, "exact", table=tab)
        assert v == GapVerdict.SMALL
        assert tab.rows[0][0] >= 128 and len(tab.rows) == 1

    def test_parameter_validation(self):
        inst = gen_planted(64, 4, 0, seed=1)
        with pytest.raises(ValueError):
            greedy_wave(inst.a, inst.b, 4, 5, lambda ia, ib: 0)
        with pytest.raises(ValueError):
            greedy_wave(inst.a, inst.b, 0, 1, lambda ia, ib: 0)


class TestJumpProperty:
    def test_no_violations_on_filled_tables(self):
        for t in range(6):
            inst = gen_planted(200, 4, 9, seed=t)
            tab = WaveTable()
            gap_wave(inst.a, inst.b, 9, 3, "exact", table=tab)
            assert wave_jump_violations(tab, 3, 200) == []


class TestNoPrepShiftOracle:
    def test_never_undershoots_bruteforce(self):
        for t in range(5):
            n, k, ell = 220, 9, 3
            inst = gen_planted(n, 4, 5, seed=t)
            orc = NoPrepShiftOracle(inst.a, inst.b, k, ell,
                                    HashConfig.from_seed(t))
            for i_b in range(1, n + 1, 4):
                for i_a in (max(1, i_b - 2), i_b, min(n, i_b + 2)):
                    d = orc(i_a, i_b)
                    bf = max_shift_alignment_bruteforce(
                        inst.a, inst.b, i_a, i_b, ell, k)
                    assert d >= bf

    def test_output_is_approximate_shift_alignment(self):
        for t in range(4):
            n, k, ell = 220, 9, 3
            inst = gen_planted(n, 4, 5, seed=50 + t)
            orc = NoPrepShiftOracle(inst.a, inst.b, k, ell,
                                    HashConfig.from_seed(t))
            for i_b in range(1, n + 1, 6):
                d = orc(i_b, i_b)
                hint = orc.last_hint
                assert has_approximate_alignment(inst.a, inst.b, i_b, d,
                                                 3 * ell, 3 * ell, hint=hint)

    def test_granularity_precondition(self):
        inst = gen_planted(100, 4, 0, seed=2)
        with pytest.raises(ValueError):
            NoPrepShiftOracle(inst.a, inst.b, 9, 2, CFG)  # l < sqrt(k)


class TestOneSidedWaveIndex:
    def test_dense_equals_general(self):
        for t in range(3):
            n, k, ell = 160, 9, 3
            inst = gen_planted(n, 4, 4, seed=t)
            dense = OneSidedWaveIndex.preprocess(inst.a, k, ell, CFG)
            gen = OneSidedWaveIndex.preprocess(inst.a, k, ell, CFG,
                                               force_general=True)
            assert dense.dense is not None and gen.tables is not None
            sd = wave_process_b(dense, inst.b)
            sg = wave_process_b(gen, inst.b)
            for i_b in range(1, n + 1, 2):
                for i_a in (max(1, i_b - 3), i_b, min(n, i_b + 3)):
                    assert (one_sided_max_shift_align(dense, sd, i_a, i_b)
                            == one_sided_max_shift_align(gen, sg, i_a, i_b))

    def test_identical_strings_reach_end(self):
        inst = gen_planted(256, 4, 0, seed=3)
        idx = OneSidedWaveIndex.preprocess(inst.a, 8, 4, CFG)
        st = wave_process_b(idx, inst.a)
        for i_b in (1, 77, 200):
            assert (one_sided_max_shift_align(idx, st, i_b, i_b)
                    == 256 - i_b + 1)


class TestGapWaveModes:
    @pytest.mark.parametrize("mode", ["noprep", "onesided", "twosided"])
    def test_small_side(self, mode):
        for t in range(8):
            inst = gen_planted(300, 4, 9, seed=t)
            v, _ = gap_wave(inst.a, inst.b, 9, 3, mode, seed=t)
            assert v == GapVerdict.SMALL

    @pytest.mark.parametrize("mode", ["noprep", "onesided", "twosided"])
    def test_large_side(self, mode):
        for t in range(5):
            inst = gen_large_side(400, 64, 270, seed=t)
            v, _ = gap_wave(inst.a, inst.b, 9, 3, mode, seed=t)
            assert v == GapVerdict.LARGE

    def test_twosided_queries_touch_no_raw_string(self):
        # after preprocessing, the wave only adds retrievals and lookups
        inst = gen_planted(256, 4, 5, seed=4)
        v, counters = gap_wave(inst.a, inst.b, 9, 3, "twosided", seed=4)
        assert v == GapVerdict.SMALL
        assert counters.init_steps == 0

    def test_unknown_mode(self):
        inst = gen_planted(64, 4, 0, seed=5)
        with pytest.raises(ValueError):
            gap_wave(inst.a, inst.b, 4, 2, "bogus")
