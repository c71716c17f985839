# Copyright 2026 the irredpoly authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the python bindings."""

import pytest

import irredpoly


def test_worked_example_qnr_chain():
    chain, poly = irredpoly.qnr_chain(73, seed=7)
    assert chain == ["72", "27", "10"]
    assert poly == "63 0 1"


def test_construct_prime_field():
    assert irredpoly.construct(73, 2) == "63 0 1"
    assert irredpoly.construct(5, 1) == "0 1"
    # Arbitrary-precision p passes through as a string.
    out = irredpoly.construct("2305843009213693951", 2, seed=1)
    assert out.endswith(" 0 1")


def test_construct_is_seed_independent():
    reference = irredpoly.construct(2, 6, seed=0)
    for seed in range(1, 10):
        assert irredpoly.construct(2, 6, seed=seed) == reference


def test_construct_extension_field():
    assert irredpoly.construct(2, 1, k=2) == "[0 1] [1 0]"
    rec = irredpoly.construct_record(5, 2, k=3, seed=3)
    assert rec["p"] == "5"
    assert rec["k"] == 3
    assert rec["d"] == 2
    assert rec["verified"] is True
    assert rec["seeds_consumed"] == 1
    assert rec["version"] == irredpoly.RECORD_FORMAT_VERSION
    assert irredpoly.is_irreducible(5, rec["poly"], k=3, modulus=rec["modulus"])


def test_is_irreducible():
    assert irredpoly.is_irreducible(2, "1 1 1")
    assert not irredpoly.is_irreducible(2, "1 0 1")
    assert irredpoly.is_irreducible(73, "63 0 1")


def test_factor():
    assert irredpoly.factor(73, "1 0 1", 1) == ["27 1", "46 1"]
    assert irredpoly.factor(2, "1 1 1 1 1 1 1", 3, seed=5) == ["1 1 0 1", "1 0 1 1"]


def test_random_irreducible():
    poly = irredpoly.random_irreducible(2, 8, seed=11)
    assert irredpoly.is_irreducible(2, poly)


def test_count_irreducibles():
    assert irredpoly.count_irreducibles(2, 6) == 9
    assert irredpoly.count_irreducibles(5, 2) == 10


def test_errors():
    with pytest.raises(ValueError):
        irredpoly.construct(4, 2)  # composite p
    with pytest.raises(ValueError):
        irredpoly.construct(73, 0)
    with pytest.raises(ValueError):
        irredpoly.is_irreducible(2, "1 0 1", k=2)  # missing modulus
    with pytest.raises(ValueError):
        irredpoly.count_irreducibles(2, 40)  # enumeration budget
