from __future__ import annotations

import pytest

from cliquedyn.lemmas import (
    SUITES,
    chart_extension_suite,
    cover_suite,
    discharge_suite,
    equivalence_suite,
    inclusion_suite,
    lhg_suite,
    run_suites,
    straight_paths_suite,
)


def test_straight_paths_suite():
    res = straight_paths_suite(4, 5)
    assert res.ok and res.detail["counts"] == {4: 9, 5: 9}


def test_inclusion_suite_single_side():
    res = inclusion_suite(4, 4)
    assert res.ok
    assert res.detail["cases"]["m4k2"] == {"translates": 6, "inverted": 1}


def test_lhg_suite():
    res = lhg_suite()
    assert res.ok and res.detail["sizes"] == [8, 7, 7, 7, 4, 4, 4]


def test_chart_extension_suite_small():
    res = chart_extension_suite(radius=8, seed=3, trials=3)
    assert res.ok, res.detail
    assert res.detail["counts"] == {3: [7], 4: [6], 5: [6]}


def test_equivalence_suite_small():
    res = equivalence_suite(radius=9, n_max=1)
    assert res.ok, res.detail


def test_cover_suite():
    res = cover_suite(radius=3)
    assert res.ok


def test_discharge_suite_seeded():
    res = discharge_suite(radius=7, count=20, seed=11)
    assert res.ok and res.detail["seed"] == 11


def test_run_suites_rejects_unknown():
    with pytest.raises(KeyError):
        run_suites(["bogus"])


def test_suite_registry_is_complete():
    assert set(SUITES) == {
        "straight-paths",
        "inclusion",
        "lhg",
        "chart-extension",
        "equivalence",
        "cover",
        "discharge",
    }
