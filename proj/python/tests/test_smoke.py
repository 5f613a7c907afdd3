# Copyright 2026 The wynerdof Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import wynerdof as w


def test_avg_optimal_plan_certifies():
    plan = w.scheme("avg", 12, 2)
    assert plan["claimed_ul_dof"] == 12
    assert plan["claimed_dl_dof"] == 8
    cert = w.certify_plan(plan)
    assert cert["dl_ok"] and cert["ul_ok"]
    assert (plan["claimed_dl_dof"] + plan["claimed_ul_dof"]) / 24 == Fraction(5, 6)


def test_oracles_on_pair_association():
    pair = w.scheme("pair", 6)
    assert w.max_downlink_dof(pair)["sum_dof"] == 4
    assert w.max_uplink_dof(pair)["sum_dof"] == 6
    assert w.uplink_feasible(pair, [1, 2, 3, 4, 5, 6]) is not None
    assert w.decide_downlink(pair, [1, 2, 3, 4, 5, 6])["feasible"] is False


def test_bounds_and_relation():
    assert w.bound("avg_counting", w.scheme("pair", 12), 2)["per_user"] == Fraction(5, 6)
    cmp = w.compare_with_theorem(3)
    assert cmp["tau"] == Fraction(9, 10)
    assert cmp["relation_holds"] is True


def test_search_small():
    r = w.exhaustive_search(3, 1, window=1)
    assert r["avg_per_user"] == Fraction(2, 3)


def test_association_helpers_and_render():
    a = w.association([[1], [1, 2], [3]], 2)
    assert w.validate_association(a) == []
    assert "MT1" in w.render(a)
    assert w.render(a, "svg").startswith("<svg")
    assert w.validate_association(w.association([[1, 2], [], []], 1))


def test_errors_map_to_python_exceptions():
    with pytest.raises(w.InputError):
        w.scheme("nope", 4, 2)
    with pytest.raises(w.SizeLimitError):
        w.exhaustive_search(12, 2, cap=100)
    with pytest.raises(ValueError):
        w.max_uplink_dof('{"k": 2}')
