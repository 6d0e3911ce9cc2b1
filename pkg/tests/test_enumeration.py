import io
import math

import pytest

from canalcount.enumeration import (
    build_table,
    compositions,
    count_by_essential,
    count_depth,
    count_depth_layers,
    count_full,
    count_full_layers,
    count_ncf,
    multinomial,
    nondegenerate_inclusion_exclusion,
    ordered_set_partitions,
    total_functions,
)

# the published value table for small arities
C_TABLE = {
    (0, 0): 2,
    (1, 0): 2,
    (1, 1): 2,
    (2, 0): 4,
    (2, 1): 4,
    (2, 2): 8,
    (3, 0): 138,
    (3, 1): 30,
    (3, 2): 24,
    (3, 3): 64,
}

NONDEGENERATE_SEQUENCE = [2, 2, 10, 218, 64594]


class TestTotals:
    def test_small(self):
        assert total_functions(0) == 2
        assert total_functions(3) == 256
        assert total_functions(5) == 4294967296

    def test_negative(self):
        with pytest.raises(ValueError):
            total_functions(-1)


class TestCompositions:
    def test_two_into_two(self):
        assert compositions(2, 2) == [((1, 1), 2)]

    def test_three_into_two(self):
        assert compositions(3, 2) == [((1, 2), 3), ((2, 1), 3)]
        # total 6 = 2! * S(3, 2) ordered set partitions
        assert ordered_set_partitions(3, 2) == 6

    def test_ncf_weight_four_variables(self):
        total = sum(
            w
            for r in range(1, 5)
            for parts, w in compositions(4, r)
            if parts[-1] >= 2
        )
        assert total == 23  # 736 = 2^5 * 23 NCFs on 4 variables

    @pytest.mark.parametrize("k,r", [(2, 3), (2, 0), (0, 1)])
    def test_bad_arguments(self, k, r):
        with pytest.raises(ValueError):
            compositions(k, r)

    def test_multinomial(self):
        assert multinomial((1, 2)) == 3
        assert multinomial((2, 2, 1)) == math.factorial(5) // 4


class TestNcf:
    def test_two_inputs_one_layer(self):
        assert count_ncf(2, 1) == 8

    def test_three_inputs_total(self):
        assert sum(count_ncf(3, r) for r in range(1, 3)) == 64

    def test_four_inputs_total(self):
        assert sum(count_ncf(4, r) for r in range(1, 4)) == 736

    def test_one_input(self):
        assert count_ncf(1, 1) == 2

    def test_out_of_range_r(self):
        assert count_ncf(3, 0) == 0
        assert count_ncf(3, 3) == 0  # last layer needs two variables
        assert count_ncf(2, 2) == 0


class TestDepthLayers:
    def test_printed_values(self):
        assert count_depth_layers(3, 1, 1) == 30
        assert count_depth_layers(2, 1, 1) == 4

    def test_layer_split_n3(self):
        assert count_depth_layers(3, 2, 2) == 0
        assert count_depth_layers(3, 2, 1) == 24

    def test_value_table(self):
        for (n, k), expected in C_TABLE.items():
            assert count_depth(n, k) == expected

    def test_depth_sums_to_total(self):
        for n in range(7):
            assert sum(count_depth(n, k) for k in range(n + 1)) == total_functions(n)


class TestByEssential:
    def test_single_essential_in_two(self):
        assert count_by_essential(2, 1) == 4

    def test_sequence(self):
        for n, expected in enumerate(NONDEGENERATE_SEQUENCE):
            assert count_by_essential(n, n) == expected

    def test_inclusion_exclusion_examples(self):
        assert nondegenerate_inclusion_exclusion(0) == 2
        assert nondegenerate_inclusion_exclusion(2) == 10

    def test_routes_agree(self):
        for n in range(13):
            assert count_by_essential(n, n) == nondegenerate_inclusion_exclusion(n)


class TestFullCounts:
    def test_worked_examples(self):
        assert count_full(3, 3, 1) == 24
        assert count_full(3, 3, 2) == 0
        assert count_full(2, 2, 0) == 2

    def test_layer_examples(self):
        assert count_full_layers(2, 2, 2, 1) == 8
        assert count_full_layers(3, 3, 3, 2) == 48
        assert count_full_layers(3, 2, 2, 1) == 24

    def test_structural_zero(self):
        for n in range(1, 13):
            assert count_full(n, n, n - 1) == 0

    def test_zero_when_more_depth_than_essential(self):
        assert count_full(4, 2, 3) == 0
        assert count_full_layers(4, 2, 3, 1) == 0


class TestCountTable:
    def test_reproduces_worked_examples(self, table12):
        for (n, k), expected in C_TABLE.items():
            assert table12.by_depth(n, k) == expected
        assert table12.by_essential_depth(3, 3, 1) == 24
        assert table12.by_essential_depth(3, 3, 3) == 64

    def test_sum_identities(self, table12):
        for n in range(table12.max_n + 1):
            total = total_functions(n)
            assert sum(table12.by_essential(n, m) for m in range(n + 1)) == total
            assert sum(table12.by_depth(n, k) for k in range(n + 1)) == total
            for m in range(n + 1):
                assert table12.by_essential(n, m) == sum(
                    table12.by_essential_depth(n, m, k) for k in range(n + 1)
                )
            for k in range(n + 1):
                assert table12.by_depth(n, k) == sum(
                    table12.by_essential_depth(n, m, k) for m in range(n + 1)
                )

    def test_r_marginals(self, table12):
        for n in range(table12.max_n + 1):
            for k in range(n + 1):
                rs = range(1, k + 1) if k else (0,)
                assert table12.by_depth(n, k) == sum(
                    table12.by_depth_layers(n, k, r) for r in rs
                )
                for m in range(n + 1):
                    assert table12.by_essential_depth(n, m, k) == sum(
                        table12.count(n, m, k, r) for r in rs
                    )

    def test_direct_formulas_match_marginals(self, table12):
        for n in range(table12.max_n + 1):
            for m in range(n + 1):
                assert table12.by_essential(n, m) == count_by_essential(n, m)
            for k in range(n + 1):
                assert table12.by_depth(n, k) == count_depth(n, k)
                for r in range(k + 1):
                    assert table12.by_depth_layers(n, k, r) == count_depth_layers(
                        n, k, r
                    )

    def test_non_negative_and_zero_rules(self, table12):
        for (n, m, k, r), count in table12.cells.items():
            assert count >= 0
            if m < k:
                assert count == 0
        for n in range(1, table12.max_n + 1):
            assert table12.by_essential_depth(n, n, n - 1) == 0

    def test_ncfs_are_nondegenerate(self, table12):
        for n in range(1, table12.max_n + 1):
            assert table12.by_depth(n, n) == table12.by_essential_depth(n, n, n)

    def test_max_n_zero(self):
        table = build_table(0)
        assert dict(table.cells) == {(0, 0, 0, 0): 2}

    def test_bound(self):
        with pytest.raises(ValueError):
            build_table(17)
        with pytest.raises(ValueError):
            build_table(-1)

    def test_csv_round_trip(self, table12):
        buf = io.StringIO()
        table12.to_csv(buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "n,m,k,r,count"
        parsed = {}
        for line in lines[1:]:
            n, m, k, r, count = (int(x) for x in line.split(","))
            parsed[(n, m, k, r)] = count
        assert parsed == dict(table12.cells)
        assert "3,3,1,1,24" in lines
