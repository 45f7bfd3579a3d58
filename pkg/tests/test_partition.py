import itertools
import random

import pytest

from djvm.errors import CapacityError, DataError
from djvm.machine import define_machine
from djvm.partition import (
    calc_partitions,
    calc_with_partitions,
    classical_partition_oracle,
    classical_segmented_reduce,
    count_partitions,
    get_partition,
    prepare_t_partitions,
    reduce_with_vector,
)

DEMO_BINS = list("AAAABBBCCC")
DEMO_VALUES = [100, 100, 20, 400, 30, 200, 300, 100, 100, 100]
DEMO_PV = [1, 0, 0, 0, 1, 0, 0, 1, 0, 0]

INTRO_VALUES = [2, 2, 3, 1, 1, 2, 7, 5, 2, 1]
INTRO_PV = [1, 0, 0, 0, 1, 0, 1, 1, 0, 0]


def random_corpus(seed=20260823, count=200):
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        length = rng.randint(1, 25)
        alphabet = "ABCDE"[: rng.randint(1, 5)]
        bins = sorted(rng.choice(alphabet) for _ in range(length))
        values = [rng.randint(-9, 9) for _ in range(length)]
        corpus.append((bins, values))
    return corpus


class TestClassicalOracles:
    def test_partition_boundaries(self):
        assert classical_partition_oracle(DEMO_BINS) == DEMO_PV

    def test_all_equal(self):
        assert classical_partition_oracle(list("AAAA")) == [1, 0, 0, 0]

    def test_alternating(self):
        assert classical_partition_oracle(list("ABAB")) == [1, 1, 1, 1]

    def test_segmented_product(self):
        assert classical_segmented_reduce(INTRO_VALUES, INTRO_PV, "product") == [12, 2, 7, 10]

    def test_segmented_sum(self):
        assert classical_segmented_reduce(DEMO_VALUES, DEMO_PV, "sum") == [620, 530, 300]

    def test_all_ones_identity(self):
        values = [4, -1, 7]
        assert classical_segmented_reduce(values, [1, 1, 1], "sum") == values

    def test_length_mismatch(self):
        with pytest.raises(DataError):
            classical_segmented_reduce([1, 2], [1], "sum")


class TestGetPartition:
    def test_demo_bins(self):
        m = define_machine(3)
        assert get_partition(m, DEMO_BINS) == DEMO_PV
        assert m.pvct == 3
        assert m.mm_get(5) == 3

    def test_single_element(self):
        assert get_partition(define_machine(3), ["X"]) == [1]

    def test_wraparound_normalization(self):
        # first and last bins equal: the rotate comparison alone yields 0
        m = define_machine(3)
        assert get_partition(m, list("AAA")) == [1, 0, 0]
        assert m.pvct == 1

    def test_numeric_bins(self):
        assert get_partition(define_machine(3), [5, 5, 9, 9, 9]) == [1, 0, 1, 0, 0]

    def test_mixed_bins_rejected(self):
        with pytest.raises(DataError):
            get_partition(define_machine(3), ["A", 1])

    def test_too_long(self):
        with pytest.raises(CapacityError):
            get_partition(define_machine(3), ["A"] * 26)

    def test_empty(self):
        with pytest.raises(DataError):
            get_partition(define_machine(3), [])

    @pytest.mark.parametrize("qr", [2, 3, 4])
    def test_matches_classical_oracle(self, qr):
        for bins, _ in random_corpus(count=60):
            m = define_machine(qr)
            bits = get_partition(m, bins)
            assert bits == classical_partition_oracle(bins)
            assert m.pvct == sum(bits)

    def test_section_size_independence(self):
        for bins, _ in random_corpus(count=20):
            results = [get_partition(define_machine(qr), bins) for qr in (2, 3, 4)]
            assert results[0] == results[1] == results[2]

    def test_every_partition_vector_reachable(self):
        # all 2**(N-1) partition vectors of length 4 arise from some bins
        produced = set()
        for bins in itertools.product("ABCD", repeat=4):
            produced.add(tuple(classical_partition_oracle(list(bins))))
        assert produced == {(1,) + tail for tail in itertools.product((0, 1), repeat=3)}


class TestCalcPartitions:
    def setup_mem(self, m, data, pv):
        m.set_memory(26, data)
        m.set_memory(76, pv)
        m.set_memory(2, [len(data)])
        m.set_memory(3, [26])
        m.set_memory(4, [76])

    def test_demo_split(self):
        m = define_machine(3)
        self.setup_mem(m, DEMO_VALUES, DEMO_PV)
        pd = calc_partitions(m, 2, 3, 4, 1)
        assert pd.parts == [[100, 100, 20, 400], [30, 200, 300], [100, 100, 100]]
        assert pd.lengths == [4, 3, 3]
        assert m.mm_get(3) == 26  # no pointer advance

    def test_all_singletons(self):
        m = define_machine(3)
        self.setup_mem(m, [5, 6, 7], [1, 1, 1])
        pd = calc_partitions(m, 2, 3, 4, 1)
        assert pd.parts == [[5], [6], [7]]

    def test_single_part(self):
        m = define_machine(3)
        self.setup_mem(m, [2, 2, 3], [1, 0, 0])
        assert calc_partitions(m, 2, 3, 4, 1).parts == [[2, 2, 3]]

    def test_concatenation(self):
        for bins, values in random_corpus(count=20):
            m = define_machine(3)
            pv = classical_partition_oracle(bins)
            self.setup_mem(m, values, pv)
            pd = calc_partitions(m, 2, 3, 4, 1)
            assert [v for part in pd.parts for v in part] == values

    def test_non_bit_vector(self):
        m = define_machine(3)
        self.setup_mem(m, [1, 2], [1, 7])
        with pytest.raises(DataError):
            calc_partitions(m, 2, 3, 4, 1)


class TestCountPartitions:
    def run_count(self, bits):
        m = define_machine(3)
        m.set_memory(76, bits)
        m.set_memory(6, [76 + len(bits)])
        m.pvct = len(bits)
        count_partitions(m, 6, 1)
        return m.pvct

    def test_demo_vector(self):
        assert self.run_count(DEMO_PV) == 3

    def test_singleton(self):
        assert self.run_count([1]) == 1

    def test_intro_vector(self):
        assert self.run_count(INTRO_PV) == 4


class TestPrepareTPartitions:
    PARTS = [[1], [2], [3], [4], [5], [6], [7]]
    LENS = [1] * 7

    def test_first_round_all(self):
        parts, lens = prepare_t_partitions(0, self.PARTS[:3], self.LENS[:3], 3)
        assert parts == [[1], [2], [3]] and lens == [1, 1, 1]

    def test_exhausted(self):
        parts, lens = prepare_t_partitions(1, self.PARTS[:3], self.LENS[:3], 3)
        assert parts == [] and lens == []

    def test_middle_window(self):
        parts, _ = prepare_t_partitions(1, self.PARTS, self.LENS, 3)
        assert parts == [[4], [5], [6]]


class TestCalcWithPartitions:
    def test_worked_example(self):
        m = define_machine(3)
        rows = list(zip(DEMO_BINS, DEMO_VALUES))
        result = calc_with_partitions(m, rows, "sum")
        assert result.totals == [620, 530, 300]
        assert [m.mm_get(a) for a in range(2, 8)] == [10, 26, 76, 0, 86, 54]
        assert [m.mm_get(a) for a in range(51, 54)] == [620, 530, 300]

    def test_singleton(self):
        result = calc_with_partitions(define_machine(3), [("X", 7)], "sum")
        assert result.totals == [7]

    def test_count_reducer(self):
        rows = list(zip(DEMO_BINS, DEMO_VALUES))
        result = calc_with_partitions(define_machine(3), rows, "count")
        assert result.totals == [4, 3, 3]

    def test_unsorted_rejected(self):
        with pytest.raises(DataError):
            calc_with_partitions(define_machine(3), [("A", 1), ("B", 2), ("A", 3)], "sum")

    def test_non_numeric_values(self):
        with pytest.raises(DataError):
            calc_with_partitions(define_machine(3), [("A", "x")], "sum")

    def test_part_too_long_is_capacity_error(self):
        rows = [("A", 1)] * 10  # one part of 10 > 2*4-1 at qr=2
        with pytest.raises(CapacityError):
            calc_with_partitions(define_machine(2), rows, "sum")

    @pytest.mark.parametrize("reducer", ["sum", "product", "min", "max"])
    def test_matches_classical_reduce(self, reducer):
        for bins, values in random_corpus(count=40):
            expected = classical_segmented_reduce(
                values, classical_partition_oracle(bins), reducer
            )
            for qr in (2, 3, 4):
                m = define_machine(qr)
                max_len = 2 * m.config.qrsize - 1
                lengths = classical_segmented_reduce(values, classical_partition_oracle(bins), "count")
                rows = list(zip(bins, values))
                if max(lengths) > max_len:
                    with pytest.raises(CapacityError):
                        calc_with_partitions(m, rows, reducer)
                else:
                    assert calc_with_partitions(m, rows, reducer).totals == expected


class TestReduceWithVector:
    def test_intro_product(self):
        m = define_machine(3)
        result = reduce_with_vector(m, INTRO_VALUES, INTRO_PV, "product")
        assert result.totals == [12, 2, 7, 10]

    def test_first_bit_required(self):
        with pytest.raises(DataError):
            reduce_with_vector(define_machine(3), [1, 2], [0, 1], "sum")

    def test_matches_classical(self):
        for bins, values in random_corpus(count=20):
            pv = classical_partition_oracle(bins)
            if max(classical_segmented_reduce(values, pv, "count")) > 15:
                continue
            result = reduce_with_vector(define_machine(3), values, pv, "sum")
            assert result.totals == classical_segmented_reduce(values, pv, "sum")
