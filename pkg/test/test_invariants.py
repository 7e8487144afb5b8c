"""Burau/Alexander, Kauffman bracket and invariant reports"""

import random

import pytest
import sympy

from lorenz_links.topology.braid import closure_planar, make_braid, stabilize, tlink_word
from lorenz_links.topology.errors import CrossingLimitExceeded, LinkInputError
from lorenz_links.topology.grid import build_grid
from lorenz_links.topology.invariants import (
    InvariantReport,
    alexander,
    burau_reduced,
    determinant,
    equal_up_to_units,
    full_report,
    jones_from_f,
    kauffman_bracket,
    normalized_f,
)
from lorenz_links.topology.laurent import LaurentPoly
from lorenz_links.topology.lorenz_core import make_tlink, make_vector, shuffle_from_vector
from lorenz_links.topology.braid import lorenz_word
from lorenz_links.topology.planar import PlanarDiagram
from lorenz_links.topology.schemas import POLYNOMIAL_SCHEMA

METHODS = ["frontier", "states"]


def braid(strands, *letters):
    return make_braid(strands, letters)


def to_sympy(p: LaurentPoly, symbol):
    return sum(c * symbol ** e for e, c in p.terms)


# ============================================
# Burau and Alexander
# ============================================

def test_burau_generators(t):
    assert burau_reduced(braid(2, 1)) == [[-t]]
    assert burau_reduced(braid(2, 1, 1, 1)) == [[-(t ** 3)]]
    assert burau_reduced(braid(3)) == [[1, 0], [0, 1]]
    assert burau_reduced(braid(3, 1)) == [[-t, 1], [0, 1]]
    assert burau_reduced(braid(3, 2)) == [[1, 0], [t, -t]]


def test_burau_inverse_letters_cancel():
    assert burau_reduced(braid(4, 1, 2, -2, 3, -3, -1)) == burau_reduced(braid(4))
    assert burau_reduced(braid(3, -1, 1)) == burau_reduced(braid(3))


def test_burau_needs_two_strands():
    with pytest.raises(LinkInputError):
        burau_reduced(braid(1))


def test_determinant_matches_sympy():
    symbol = sympy.Symbol("t")
    w = lorenz_word(shuffle_from_vector(make_vector([2, 3, 3])))
    matrix = burau_reduced(w)
    size = len(matrix)
    shifted = [[(1 if r == c else 0) - matrix[r][c] for c in range(size)] for r in range(size)]
    expected = sympy.Matrix([[to_sympy(x, symbol) for x in row] for row in shifted]).det(method="berkowitz")
    assert sympy.expand(expected - to_sympy(determinant(shifted), symbol)) == 0


def test_determinant_with_pivot_swap(t):
    assert determinant([[LaurentPoly(), t], [1 + t, 1]]) == -(t + t ** 2)
    assert determinant([]) == 1


@pytest.mark.parametrize(
    "w, coeffs",
    [
        (braid(2, 1, 1, 1), [1, -1, 1]),
        (braid(2, 1), [1]),
        (braid(2, 1, 1), [1, -1]),
        (braid(1), [1]),
        (braid(3, 1, -2, 1, -2), [1, -3, 1]),
    ],
)
def test_alexander(w, coeffs):
    assert alexander(w) == LaurentPoly.from_coeffs(0, coeffs)


def test_alexander_of_split_link_is_zero():
    assert alexander(braid(2)).is_zero


def test_alexander_is_a_closure_invariant():
    trefoil = alexander(braid(2, 1, 1, 1))
    assert equal_up_to_units(alexander(tlink_word(make_tlink([(2, 3)]))), trefoil)
    assert equal_up_to_units(alexander(stabilize(braid(2, 1, 1, 1))), trefoil)
    assert equal_up_to_units(alexander(braid(3, 2, 1, 1, 1)), trefoil)


def test_alexander_division_is_exact_on_random_positive_words():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 8)
        w = make_braid(n, [rng.randint(1, n - 1) for _ in range(rng.randint(0, 20))])
        alexander(w)


def test_equal_up_to_units(t):
    assert equal_up_to_units(1 - t, t - 1)
    assert equal_up_to_units(1 - t, t ** 3 - t ** 2)
    assert not equal_up_to_units(1 - t, 1 + t)
    assert equal_up_to_units(LaurentPoly(), LaurentPoly())
    assert not equal_up_to_units(LaurentPoly(), 1 - t)


# ============================================
# Kauffman Bracket
# ============================================

@pytest.mark.parametrize("method", METHODS)
def test_bracket_values(method, A):
    unknot = PlanarDiagram(crossings=(), free_loops=1)
    assert kauffman_bracket(unknot, method=method) == 1
    assert kauffman_bracket(closure_planar(braid(2, 1)), method=method) == -(A ** 3)
    assert kauffman_bracket(closure_planar(braid(2, -1)), method=method) == -(A ** -3)
    assert kauffman_bracket(closure_planar(braid(2, 1, 1)), method=method) == -(A ** 4) - A ** -4
    assert kauffman_bracket(closure_planar(braid(2)), method=method) == -(A ** 2) - A ** -2


@pytest.mark.parametrize("method", METHODS)
def test_normalized_f(method, A):
    assert normalized_f(closure_planar(braid(2, 1)), method=method) == 1
    assert normalized_f(closure_planar(braid(2, 1, 1)), method=method) == -(A ** -2) - A ** -10
    trefoil = -(A ** -16) + A ** -12 + A ** -4
    assert normalized_f(closure_planar(braid(2, 1, 1, 1)), method=method) == trefoil
    assert normalized_f(closure_planar(braid(2, -1, -1, -1)), method=method) == trefoil.map_exponents(
        lambda e: -e
    )


def test_kink_changes_bracket_but_not_f(A):
    kinked = closure_planar(braid(2, 1))
    plain = closure_planar(braid(1))
    assert kauffman_bracket(kinked) == -(A ** 3) * kauffman_bracket(plain)
    assert normalized_f(kinked) == normalized_f(plain) == 1


def test_frontier_matches_state_enumeration():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 4)
        letters = [rng.choice([-1, 1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 9))] if n > 1 else []
        d = closure_planar(make_braid(n, letters))
        assert kauffman_bracket(d, method="frontier") == kauffman_bracket(d, method="states")


def test_bracket_crossing_limit():
    d = closure_planar(braid(2, 1, 1, 1, 1, 1))
    with pytest.raises(CrossingLimitExceeded) as info:
        kauffman_bracket(d, max_crossings=4)
    assert (info.value.crossings, info.value.limit) == (5, 4)


def test_unknown_bracket_method():
    with pytest.raises(LinkInputError):
        kauffman_bracket(closure_planar(braid(2, 1)), method="skein")


def test_jones_from_f(A, t):
    trefoil = -(A ** -16) + A ** -12 + A ** -4
    assert jones_from_f(trefoil) == t + t ** 3 - t ** 4
    assert jones_from_f(-(A ** -2) - A ** -10) is None


# ============================================
# Reports
# ============================================

def test_lorenz_trefoil_report(A):
    w = lorenz_word(shuffle_from_vector(make_vector([2, 2, 2])))
    report = full_report("lorenz-braid", w)
    assert report.components == 1
    assert report.euler_characteristic == -1
    assert report.genus == 1
    assert report.alexander == LaurentPoly.from_coeffs(0, [1, -1, 1])
    assert report.kauffman_f == -(A ** -16) + A ** -12 + A ** -4
    assert report.kauffman_status == "computed"


def test_tlink_and_grid_reports_agree():
    lorenz = full_report("lorenz-braid", lorenz_word(shuffle_from_vector(make_vector([2, 2, 2]))))
    tbraid = full_report("t-braid", tlink_word(make_tlink([(2, 3)])))
    grid = full_report("grid", build_grid(shuffle_from_vector(make_vector([2, 2, 2]))))

    assert (tbraid.components, tbraid.euler_characteristic, tbraid.genus) == (1, -1, 1)
    assert tbraid.alexander == lorenz.alexander
    assert grid.kauffman_f == lorenz.kauffman_f == tbraid.kauffman_f
    assert grid.euler_characteristic is None and grid.alexander is None
    assert (grid.crossings, grid.writhe) == (3, 3)


def test_report_skips():
    w = braid(2, 1, 1, 1)
    report = full_report("braid", w, skip=["alexander", "jones"])
    assert report.alexander is None and report.jones is None
    assert report.kauffman_f is not None

    capped = full_report("braid", w, max_crossings=2)
    assert capped.kauffman_f is None
    assert capped.kauffman_status == "skipped: crossing limit (3 > 2)"

    assert full_report("braid", w, skip=["kauffman"]).kauffman_status == "disabled"
    with pytest.raises(LinkInputError):
        full_report("braid", w, skip=["homfly"])


def test_report_for_negative_braid_has_no_genus():
    report = full_report("braid", braid(3, 1, -2, 1, -2))
    assert report.euler_characteristic is None and report.genus is None
    assert report.writhe == 0


def test_report_json_roundtrip():
    report = full_report("braid", braid(2, 1, 1, 1))
    data = report.model_dump(mode="json")
    assert data["alexander"] == {"min_deg": 0, "coeffs": [1, -1, 1]}
    assert type(report).model_validate(data) == report


def test_report_json_keeps_polynomial_variables():
    report = full_report("braid", braid(2, 1, 1, 1))
    restored = type(report).model_validate_json(report.model_dump_json())
    assert str(restored.kauffman_f) == str(report.kauffman_f) == "-A⁻¹⁶ + A⁻¹² + A⁻⁴"
    assert restored.alexander.variable == "t"
    assert restored.jones.variable == "t"


def test_report_json_schema_uses_the_polynomial_schema():
    properties = InvariantReport.model_json_schema()["properties"]
    for name in ("alexander", "kauffman_f", "jones"):
        assert POLYNOMIAL_SCHEMA in properties[name]["anyOf"]
