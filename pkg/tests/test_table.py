import json

import pytest
from hypothesis import given, strategies as st

from distmon.errors import NotAssociativeError, TableFormatError
from distmon.table import (
    AdditionTable,
    capped_naturals,
    from_entries,
    from_upper_triangle,
    load,
    loads,
    max_monoid,
    validate,
)

EXAMPLE_TRIANGLE = (2, 2, 4, 5, 5, 2, 5, 5, 5, 5, 5, 5, 5, 5, 5)  # values 1,2,5,6,7
NONASSOC_3 = from_upper_triangle(3, (2, 2, 3, 3, 3, 3))


def example_table():
    return from_upper_triangle(5, EXAMPLE_TRIANGLE)


class TestFromEntries:
    def test_smallest_monoid(self):
        t = from_entries(1, [[0, 1], [1, 1]])
        assert t.n == 1
        assert t.is_monoid

    def test_cell_out_of_range(self):
        with pytest.raises(TableFormatError):
            from_entries(1, [[0, 1], [1, 2]])

    def test_dimension_mismatch(self):
        with pytest.raises(TableFormatError):
            from_entries(2, [[0, 1], [1, 1]])
        with pytest.raises(TableFormatError):
            from_entries(1, [[0, 1], [1, 1, 1]])

    def test_verbatim_no_normalization(self):
        # axiom violations are accepted here and only flagged by validate
        t = from_entries(1, [[0, 0], [0, 0]])
        assert t.entries == ((0, 0), (0, 0))
        assert not t.is_magma

    def test_example_table_accepted(self):
        t = example_table()
        assert t.n == 5
        assert t.oplus(1, 1) == 2


class TestValidate:
    def test_max_table_is_monoid(self):
        report = validate(max_monoid(4))
        assert report.is_magma and report.is_monoid
        assert report.violations == ()

    def test_example_is_monoid(self):
        assert validate(example_table()).is_monoid

    def test_example_cells(self):
        t = example_table()
        expected = {
            (1, 1): 2, (1, 2): 2, (2, 2): 2, (1, 3): 4, (1, 4): 5,
            (1, 5): 5, (2, 3): 5, (2, 4): 5, (2, 5): 5, (3, 3): 5,
            (3, 4): 5, (3, 5): 5, (4, 4): 5, (4, 5): 5, (5, 5): 5,
        }
        for (i, j), v in expected.items():
            assert t.oplus(i, j) == v
            assert t.oplus(j, i) == v

    def test_unique_nonassociative_3_magma(self, census_cache):
        result = census_cache(3, want_magmas=True)
        bad = [t for t in result.emitted if not t.is_monoid]
        assert len(bad) == 1
        assert bad[0] == NONASSOC_3
        report = bad[0].validate()
        assert report.is_magma and not report.is_monoid
        assert report.violations[0].axiom == "associativity"
        assert len(report.violations[0].witness) == 3

    def test_reports_all_violations_with_cap(self):
        t = from_entries(2, [[0, 1, 2], [1, 0, 0], [2, 0, 0]])
        assert len(t.validate().violations) > 1
        assert len(t.validate(max_violations=1).violations) == 1
        with pytest.raises(ValueError):
            t.validate(max_violations=0)

    def test_axiom_witnesses(self):
        broken_identity = from_entries(1, [[0, 0], [1, 1]])
        assert broken_identity.validate().violations[0].axiom == "identity"
        asym = from_entries(2, [[0, 1, 2], [1, 1, 2], [2, 1, 2]])
        axioms = {v.axiom for v in asym.validate().violations}
        assert "symmetry" in axioms or "monotonicity" in axioms

    def test_idempotent_and_pure(self):
        t = example_table()
        assert t.validate() == t.validate()


class TestOplus:
    def test_max_table(self):
        assert max_monoid(4).oplus(2, 3) == 3

    def test_identity_row(self):
        t = example_table()
        for k in range(t.n + 1):
            assert t.oplus(0, k) == k

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            max_monoid(2).oplus(0, 3)


class TestMultiple:
    def test_capped_naturals(self):
        assert capped_naturals(5).multiple(1, 3) == 3

    def test_example(self):
        assert example_table().multiple(3, 2) == 5

    def test_single(self):
        t = example_table()
        for i in range(t.n + 1):
            assert t.multiple(i, 1) == i

    def test_nondecreasing_and_stable(self):
        t = example_table()
        for i in range(1, t.n + 1):
            vals = [t.multiple(i, m) for m in range(1, t.n + 3)]
            assert vals == sorted(vals)
            assert vals[t.n - 1] == vals[t.n] == vals[t.n + 1]

    def test_rejects_nonassociative(self):
        with pytest.raises(NotAssociativeError):
            NONASSOC_3.multiple(1, 2)


class TestSerialization:
    def test_round_trip(self, tmp_path):
        from distmon.table import dump

        t = example_table()
        path = tmp_path / "t.json"
        dump(t, path)
        assert load(path) == t

    def test_loads_rejects_ragged(self):
        with pytest.raises(TableFormatError):
            loads('{"n": 1, "table": [[0, 1], [1]]}')

    def test_loads_rejects_out_of_range(self):
        with pytest.raises(TableFormatError):
            loads('{"n": 1, "table": [[0, 1], [1, 2]]}')

    def test_loads_rejects_missing_keys(self):
        with pytest.raises(TableFormatError):
            loads('{"n": 1}')

    def test_format_shape(self):
        obj = json.loads(example_table().dumps())
        assert set(obj) == {"n", "table"}
        assert len(obj["table"]) == obj["n"] + 1


@st.composite
def random_magmas(draw):
    """Magmas generated cell by cell within the positivity/monotonicity bounds."""
    n = draw(st.integers(min_value=1, max_value=5))
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        rows[0][j] = j
        rows[j][0] = j
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            lo = max(j, rows[i][j - 1], rows[i - 1][j])
            v = draw(st.integers(min_value=lo, max_value=n))
            rows[i][j] = v
            rows[j][i] = v
    return from_entries(n, rows)


class TestProperties:
    @given(random_magmas())
    def test_generated_tables_are_magmas(self, t):
        assert t.is_magma

    @given(random_magmas())
    def test_upper_triangle_round_trip(self, t):
        assert from_upper_triangle(t.n, t.upper_triangle()) == t

    @given(random_magmas())
    def test_json_round_trip(self, t):
        assert loads(t.dumps()) == t
