import json

import pytest

from distmon.analysis import arch_complexity
from distmon.census import (
    SearchConfig,
    dm_table,
    dm_table_csv,
    enumerate_tables,
    partition_work,
)
from distmon.errors import ScaleGuardError
from distmon.formulas import dm_n_2, lower_bound

MAGMA_COUNTS = {1: 1, 2: 2, 3: 7, 4: 42, 5: 429}
MONOID_BY_ARCH = {
    1: {1: 1},
    2: {1: 1, 2: 1},
    3: {1: 1, 2: 4, 3: 1},
    4: {1: 1, 2: 14, 3: 6, 4: 1},
    5: {1: 1, 2: 51, 3: 33, 4: 8, 5: 1},
}


class TestEnumerate:
    def test_magma_counts(self, census_cache):
        for n, expected in MAGMA_COUNTS.items():
            assert census_cache(n, want_magmas=True).magma_count == expected

    @pytest.mark.parametrize("n", range(1, 6))
    def test_monoid_by_arch(self, census_cache, n):
        result = census_cache(n)
        assert result.by_arch == MONOID_BY_ARCH[n]
        assert result.monoid_count == sum(MONOID_BY_ARCH[n].values())
        assert result.magma_count is None

    def test_n3_counts(self, census_cache):
        magmas = census_cache(3, want_magmas=True)
        assert magmas.magma_count == 7
        assert magmas.monoid_count == 6

    def test_by_arch_extremes(self, census_cache):
        for n in range(1, 7):
            by_arch = census_cache(n).by_arch
            assert by_arch[1] == 1
            assert by_arch[n] == 1

    def test_emitted_are_valid_and_bucketed(self, census_cache):
        result = census_cache(4)
        assert len(result.emitted) == 22
        for t in result.emitted:
            assert t.validate().is_monoid
        recomputed = {}
        for t in result.emitted:
            a = arch_complexity(t)
            recomputed[a] = recomputed.get(a, 0) + 1
        assert recomputed == result.by_arch

    def test_emitted_magmas_pass_validate(self, census_cache):
        result = census_cache(4, want_magmas=True)
        assert len(result.emitted) == 42
        assert all(t.is_magma for t in result.emitted)

    def test_visit_order_is_lex_on_triangles(self, census_cache):
        triangles = [t.upper_triangle() for t in census_cache(4, want_magmas=True).emitted]
        assert triangles == sorted(triangles)
        assert len(set(triangles)) == len(triangles)

    def test_pruned_search_equals_filtered_magma_walk(self, census_cache):
        # the incremental associativity pruning must reproduce, in order,
        # exactly the magmas that pass a full post-hoc validation
        for n in range(1, 6):
            magmas = census_cache(n, want_magmas=True).emitted
            filtered = [t for t in magmas if t.validate().is_monoid]
            assert list(census_cache(n).emitted) == filtered

    def test_arch_filter_restricts_emission(self):
        result = enumerate_tables(SearchConfig(n=4, arch_filter=2, emit=True))
        assert len(result.emitted) == 14
        assert all(arch_complexity(t) == 2 for t in result.emitted)
        # counts still describe the full census
        assert result.monoid_count == 22

    def test_scale_guards(self):
        with pytest.raises(ScaleGuardError):
            enumerate_tables(SearchConfig(n=9))
        with pytest.raises(ScaleGuardError):
            enumerate_tables(SearchConfig(n=8, want_magmas=True))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SearchConfig(n=0)
        with pytest.raises(ValueError):
            SearchConfig(n=3, arch_filter=4)
        with pytest.raises(ValueError):
            SearchConfig(n=3, want_magmas=True, arch_filter=2)
        with pytest.raises(ValueError):
            SearchConfig(n=3, prefix_depth=7)


class TestPartitioning:
    def test_prefixes_n3_depth1(self):
        assert partition_work(SearchConfig(n=3, prefix_depth=1)) == [(1,), (2,), (3,)]

    def test_prefixes_n1(self):
        assert partition_work(SearchConfig(n=1, prefix_depth=1)) == [(1,)]

    def test_requires_depth(self):
        with pytest.raises(ValueError):
            partition_work(SearchConfig(n=3, prefix_depth=0))

    def test_summed_counts_equal_sequential(self, census_cache):
        sequential = census_cache(4)
        merged = enumerate_tables(SearchConfig(n=4, prefix_depth=2))
        assert merged.by_arch == sequential.by_arch
        assert merged.monoid_count == 22

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("depth", [0, 1, 2, 3])
    def test_partition_invariance(self, n, depth):
        depth = min(depth, n * (n + 1) // 2)
        base = enumerate_tables(SearchConfig(n=n, emit=True))
        part = enumerate_tables(SearchConfig(n=n, emit=True, prefix_depth=depth))
        assert part == base
        assert json.dumps(part.to_json_dict()) == json.dumps(base.to_json_dict())

    def test_jobs_do_not_change_results(self):
        seq = enumerate_tables(SearchConfig(n=5, emit=True))
        par = enumerate_tables(SearchConfig(n=5, emit=True, job_count=4))
        assert seq == par

    def test_magma_census_partitioned(self):
        seq = enumerate_tables(SearchConfig(n=4, want_magmas=True, emit=True))
        par = enumerate_tables(
            SearchConfig(n=4, want_magmas=True, emit=True, job_count=2, prefix_depth=2)
        )
        assert seq == par


class TestSandwich:
    def test_lower_bound_holds_in_census(self, census_cache):
        for n in (5, 6):
            by_arch = census_cache(n).by_arch
            for k in range(1, min(3, n - 2) + 1):
                assert by_arch.get(n - k, 0) >= lower_bound(n, k)

    def test_dm2_stratum(self, census_cache):
        for n in range(2, 7):
            assert census_cache(n).by_arch[2] == dm_n_2(n)

    def test_formulas_over_full_census_range(self):
        # complexity-2 and complexity-(n-1) strata at the guard boundary
        from distmon.formulas import dm_near_top

        for n in (7, 8):
            by_arch = enumerate_tables(SearchConfig(n=n, job_count=2)).by_arch
            assert by_arch[2] == dm_n_2(n)
            assert by_arch[n - 1] == dm_near_top(n, 1) == 2 * n - 2


class TestDmTable:
    def test_small(self):
        assert dm_table(2) == [[1], [1, 1]]

    def test_row5(self):
        rows = dm_table(5)
        assert rows[4][3] == 8  # complexity 4 at n = 5: 2n - 2
        assert rows[4][1] == 51  # complexity 2 at n = 5: B_5 - 1

    def test_csv(self):
        text = dm_table_csv(dm_table(2))
        assert text.splitlines()[0] == "n,k,count"
        assert text == "n,k,count\n1,1,1\n2,1,1\n2,2,1\n"


class TestResultJson:
    def test_counts_as_decimal_strings(self, census_cache):
        obj = census_cache(3, want_magmas=True).to_json_dict()
        assert obj["magma_count"] == "7"
        assert obj["monoid_count"] == "6"
        assert obj["by_arch"] == {"1": "1", "2": "4", "3": "1"}

    def test_monoid_census_has_null_magma_count(self, census_cache):
        assert census_cache(3).to_json_dict()["magma_count"] is None
