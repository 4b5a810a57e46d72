import pytest

from ftdesigns.actions import SubdegreeProfile
from ftdesigns.designs import ParameterSet
from ftdesigns.errors import InputError
from ftdesigns.groupdata import orders_table
from ftdesigns.pipeline import (STATUS_FEASIBLE, STATUS_INDEX, STATUS_SUBDEGREE,
                                CandidateRecord, emit_count_summary,
                                emit_report, enumerate_all, enumerate_parameters,
                                group_counts, index_divides_filter, run_filters,
                                subdegree_filter)

LAMBDAS_M11 = [3, 5, 7, 11]


def test_enumerate_m11_point_stabilizer():
    assert [p.astuple() for p in enumerate_parameters(7920, 720, LAMBDAS_M11)] == [
        (11, 55, 15, 3, 3)]


def test_enumerate_m11_second_class():
    got = [p.astuple() for p in enumerate_parameters(7920, 144, LAMBDAS_M11)]
    assert got == [(55, 99, 18, 10, 3), (55, 165, 30, 10, 5), (55, 363, 66, 10, 11)]


def test_enumerate_small_case_by_hand():
    # |G| = 60, |H| = 12, lambda = 3: divisors of gcd(12, 12) = 12 with 3 | r
    # leave r = 6 as the only survivor of all six constraints.
    got = [p.astuple() for p in enumerate_parameters(60, 12, [3])]
    assert got == [(5, 10, 6, 3, 3)]


def test_enumerate_rejects_non_divisor():
    with pytest.raises(InputError):
        enumerate_parameters(100, 7, [3])


def test_enumerate_output_is_set_like():
    # iteration order of divisors must not matter: results are sorted
    a = enumerate_parameters(10200960, 40320, [3, 5, 7, 11, 23])
    assert a == sorted(a, key=lambda p: (p.lam, p.b))
    assert len(a) == 19


def test_every_emitted_tuple_satisfies_identities():
    for rec in enumerate_all():
        rec.params.check_identities()
        assert rec.params.is_nonsymmetric()


def test_group_counts_match_published_table():
    counts = group_counts(enumerate_all())
    expected = {"M11": 4, "M22": 5, "M22:2": 3, "M23": 43, "M24": 8, "J1": 6,
                "J2": 3, "J2:2": 3, "HS": 19, "HS:2": 9, "McL": 6, "O'N": 6,
                "Co3": 9}
    assert counts == expected
    assert sum(counts.values()) == 124


def test_zero_groups_are_zero():
    counts = group_counts(enumerate_all())
    for name in ["M12", "M12:2", "J3", "J3:2", "J4", "Suz", "Suz:2", "McL:2",
                 "Ru", "He", "He:2", "Ly", "O'N:2", "Co1", "Co2", "Fi22",
                 "Fi22:2", "Fi23", "Fi24'", "Fi24':2", "HN", "HN:2", "Th",
                 "B", "M"]:
        assert name not in counts


def test_subdegree_filter_table_rows():
    rec = CandidateRecord("M23", "2^4:A7", 3, ParameterSet(253, 414, 36, 22, 3))
    out = subdegree_filter(rec, SubdegreeProfile([(1, 1), (112, 1), (140, 1)]))
    assert out.status == STATUS_SUBDEGREE and out.witness == 112

    out2 = subdegree_filter(rec, SubdegreeProfile([(1, 1), (42, 1), (210, 1)]))
    assert out2.status == STATUS_SUBDEGREE and out2.witness == 42


def test_subdegree_filter_arithmetic_example():
    # 27 does not divide 3*22 = 66
    rec = CandidateRecord("X", "Y", 1, ParameterSet(100, 225, 27, 12, 3))
    out = subdegree_filter(rec, SubdegreeProfile([(1, 1), (22, 1), (77, 1)]))
    assert out.status == STATUS_SUBDEGREE and out.witness == 22


def test_subdegree_filter_survivor():
    rec = CandidateRecord("M23", "L3(4).2_2", 2, ParameterSet(253, 4554, 126, 7, 3))
    out = subdegree_filter(rec, SubdegreeProfile([(1, 1), (42, 1), (210, 1)]))
    assert out.status == STATUS_FEASIBLE


def test_subdegree_filter_idempotent():
    rec = CandidateRecord("M23", "2^4:A7", 3, ParameterSet(253, 414, 36, 22, 3))
    once = subdegree_filter(rec, SubdegreeProfile([(1, 1), (112, 1), (140, 1)]))
    twice = subdegree_filter(once, SubdegreeProfile([(1, 1), (42, 1), (210, 1)]))
    assert twice == once


def test_index_filter_m11():
    rec = CandidateRecord("M11", "A6.2_3", 1, ParameterSet(11, 22, 11, 5, 5))
    out, survivors = index_divides_filter(rec, [720, 660, 144, 120, 48], 7920)
    assert out.status == STATUS_FEASIBLE
    assert 720 in survivors   # index 11 divides 22


def test_index_filter_eliminates():
    rec = CandidateRecord("M11", "A6.2_3", 1, ParameterSet(11, 23, 11, 5, 5))
    out, survivors = index_divides_filter(rec, [720, 660, 144, 120, 48], 7920)
    assert out.status == STATUS_INDEX and survivors == []


def test_index_filter_group_order_b():
    # b = |G|: every index divides
    rec = CandidateRecord("M11", "A6.2_3", 1, ParameterSet(11, 7920, 11, 5, 5))
    _, survivors = index_divides_filter(rec, [720, 660, 144, 120, 48], 7920)
    assert len(survivors) == 5


def test_emit_report_empty():
    assert emit_report([]) == ("group,subgroup,nr,v,b,r,k,lambda,status,witness\n")


def test_emit_report_markdown():
    rec = CandidateRecord("M11", "A6.2_3", 1, ParameterSet(11, 55, 15, 3, 3))
    text = emit_report([rec], fmt="markdown")
    assert text.startswith("| group |")
    assert "| M11 |" in text


def test_emit_report_rejects_unknown_format():
    with pytest.raises(InputError):
        emit_report([], fmt="html")


def test_count_summary_lists_every_group():
    text = emit_count_summary([])
    assert text.count("\n") == 40   # header + 38 groups + total
    assert text.endswith("TOTAL,0\n")


def test_goldens_table3():
    from importlib import resources

    golden = resources.files("ftdesigns.data").joinpath("goldens/table3.csv").read_text()
    assert emit_count_summary(enumerate_all()) == golden


def test_goldens_table5():
    from importlib import resources

    golden = resources.files("ftdesigns.data").joinpath("goldens/table5.csv").read_text()
    assert emit_report(enumerate_all()) == golden


def test_goldens_table4(profiles):
    from importlib import resources

    from ftdesigns.pipeline import emit_eliminated

    golden = resources.files("ftdesigns.data").joinpath("goldens/table4.csv").read_text()
    filtered = run_filters(enumerate_all(), profiles=profiles)
    assert emit_eliminated(filtered) == golden


def test_goldens_subdegrees(profiles):
    from importlib import resources

    golden = resources.files("ftdesigns.data").joinpath("goldens/subdegrees.csv").read_text()
    rows = {}
    for line in golden.splitlines()[1:]:
        g, h, nr, deg, prof = line.split(",")
        rows[(g, h, int(nr))] = (int(deg), prof)
    assert set(rows) == set(profiles)
    for key, (deg, prof) in rows.items():
        assert str(profiles[key]) == prof
        assert profiles[key].total() == deg


def test_include_lambda_2_widens_search():
    base = len(enumerate_all())
    widened = len(enumerate_all(include_lambda_2=True))
    assert widened >= base


def test_coprime_mode_runs():
    recs = enumerate_parameters(44352000, 252000, [3], coprime_mode=True)
    for p in recs:
        assert p.lam == 3 and p.r % 3 != 0


def test_defer_fisher_changes_nothing_when_lambda_divides_r():
    # with lambda | r and v < b, lambda*v = lambda + r(k-1) <= rk < r^2,
    # so deferring that cut must reproduce the same tuples
    strict = {p.astuple() for p in enumerate_parameters(460815505920, 3753792,
                                                        [3, 5, 7, 11, 19, 31])}
    loose = {p.astuple() for p in enumerate_parameters(460815505920, 3753792,
                                                       [3, 5, 7, 11, 19, 31],
                                                       defer_fisher=True)}
    assert strict == loose


def test_orders_table_consistency_with_enumeration():
    # v = |G| / |H| for each emitted record matches the subgroup order
    table = {r.name: r for r in orders_table()}
    for rec in enumerate_all():
        grp = table[rec.group]
        m = next(m for m in grp.maximals if m.nr == rec.nr)
        assert grp.order // m.order == rec.params.v
