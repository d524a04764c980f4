import json

import pytest

from kschubert.structconst import ordinary_table
from kschubert.verify import SUITES, run_suite, table_property_failures, window_oracle_failures
from kschubert.weyl import weyl_group


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_passes_on_a2(suite):
    report = run_suite("A2", suite)
    assert report["ok"], [c for c in report["checks"] if not c["ok"]]


def test_all_is_conjunction():
    names = [c["name"] for c in run_suite("A1", "all")["checks"]]
    parts = [c["name"] for s in SUITES for c in run_suite("A1", s)["checks"]]
    assert names == parts


def test_report_is_deterministic():
    a = json.dumps(run_suite("B2", "all", seeds=2))
    b = json.dumps(run_suite("B2", "all", seeds=2))
    assert a == b


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("A1", "nope")


def test_checks_catch_a_corrupted_table():
    W = weyl_group("A2")
    table = ordinary_table(W)
    s1, s2 = W.simple(0), W.simple(1)
    table.entries[(s1, s2, W.longest)] = 1
    bad = table_property_failures(table, W)
    assert bad["symmetric"] and bad["sign"]
    assert window_oracle_failures(table, W)
