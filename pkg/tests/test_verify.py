import numpy as np
import pytest

from fisherdiscord import verify


def test_rel_err():
    assert verify.rel_err(0.0, 0.0) == 0.0
    assert verify.rel_err(1.0, 1.1) == pytest.approx(0.1 / 1.1)


def test_each_property_passes_small():
    for k, check in enumerate(verify.PROPERTIES):
        res = check(np.random.default_rng([7, k]), 3)
        assert res.passed, verify.format_row(res)


def test_oracle_detects_corruption():
    assert verify.check_family("MIXTURE_N", 2, 1).passed
    bad = verify.check_family("MIXTURE_N", 2, 1, corrupt="MIXTURE_N")
    assert not bad.passed and bad.name == "oracle:MIXTURE_N"


def test_table():
    rows = [verify.CheckResult("a", True, 1, 0.0), verify.CheckResult("b", False, 1, 1.0)]
    text = verify.format_table(rows)
    assert text.splitlines()[-2:] == ["1/2 checks passed", "failed: b"]
