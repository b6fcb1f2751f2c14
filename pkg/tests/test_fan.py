"""
Tests for fan parsing, validation and the fan operations.
"""

import json

import pytest
from conftest import corpus, flag_like_corpus, orthant_blowup, rp2, surface_corpus

from torfan.constants import COMPLETENESS
from torfan.errors import (
    ConeNotInFan,
    DependentRaysInCone,
    DuplicateRay,
    IndexOutOfRange,
    MalformedFanDocument,
    NonPrimitiveRay,
    NotIntersectionClosed,
    OrphanRay,
    RayDimensionMismatch,
)
from torfan.fan import (
    Fan,
    barycentric_refine,
    catalog,
    check_complete,
    check_smooth,
    is_flag_like,
    maximal_cone_adjacency,
    parse_fan,
    primitive,
    primitive_collections,
    product,
    simplicial_complex,
    skeleton,
    star,
    star_subdivide,
    to_document,
)


def test_parse_fan_from_text():
    fan = parse_fan('{"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [0, 2]]}')
    assert fan == rp2()
    assert fan.cone_counts() == {0: 1, 1: 3, 2: 3}


def test_document_round_trip():
    for name, fan in corpus():
        assert parse_fan(json.dumps(to_document(fan))) == fan, name


@pytest.mark.parametrize(
    "document, error",
    [
        ({"dim": 2, "rays": [[1]], "max_cones": [[0]]}, RayDimensionMismatch),
        ({"dim": 2, "rays": [[2, 0]], "max_cones": [[0]]}, NonPrimitiveRay),
        ({"dim": 2, "rays": [[0, 0]], "max_cones": [[0]]}, NonPrimitiveRay),  # zero vector
        ({"dim": 2, "rays": [[1, 0], [1, 0]], "max_cones": [[0], [1]]}, DuplicateRay),
        ({"dim": 2, "rays": [[1, 0]], "max_cones": [[0, 1]]}, IndexOutOfRange),
        ({"dim": 2, "rays": [[1, 0], [-1, 0]], "max_cones": [[0, 1]]}, DependentRaysInCone),
        ({"dim": 1, "rays": [[1], [-1]], "max_cones": [[0, 0]]}, DependentRaysInCone),  # repeated index
        ({"dim": 2, "rays": [[1, 0], [0, 1]], "max_cones": [[0]]}, OrphanRay),
        # both cones contain the ray through (2, 1)
        ({"dim": 2, "rays": [[1, 0], [0, 1], [1, 1]], "max_cones": [[0, 1], [0, 2]]}, NotIntersectionClosed),
        ({"dim": "2", "rays": [[1, 0]], "max_cones": [[0]]}, MalformedFanDocument),
        ({"dim": -1, "rays": [], "max_cones": []}, MalformedFanDocument),
        ({"dim": 0, "rays": [], "max_cones": [[]]}, MalformedFanDocument),  # dimension must be positive
        ({"dim": 1, "rays": [[1]], "max_cones": [[0]], "name": "x"}, MalformedFanDocument),
        ({"dim": 1, "rays": [[1]]}, MalformedFanDocument),
    ],
)
def test_parse_fan_rejects(document, error):
    with pytest.raises(error):
        parse_fan(document)


def test_parse_fan_rejects_bad_json():
    with pytest.raises(MalformedFanDocument):
        parse_fan("{not json")


def test_non_maximal_cones_are_dropped():
    fan = Fan(2, [[1, 0], [0, 1]], [[0], [0, 1], [1, 0]])
    assert fan.max_cones == ((0, 1),)
    assert fan.faces() == [(), (0,), (1,), (0, 1)]


def test_zero_dimensional_fan():
    fan = Fan(0, [], [])
    assert fan.max_cones == ((),)
    assert check_smooth(fan).smooth
    assert check_complete(fan) is COMPLETENESS.COMPLETE


def test_closure_is_closed_under_faces():
    for name, fan in corpus():
        for face in fan.closure:
            for k in range(len(face)):
                assert face[:k] + face[k + 1 :] in fan.closure, name


def test_check_smooth():
    assert check_smooth(rp2()).smooth

    verdict = check_smooth(Fan(2, [[1, 0], [1, 2]], [[0, 1]]))
    assert not verdict.smooth
    assert verdict.witness == (0, 1)
    assert verdict.divisors == (1, 2)


def test_corpus_is_smooth():
    for name, fan in corpus():
        assert check_smooth(fan).smooth, name


@pytest.mark.parametrize(
    "fan, expected",
    [
        (catalog.circle(), COMPLETENESS.COMPLETE),
        (Fan(1, [[1]], [[0]]), COMPLETENESS.INCOMPLETE),
        (catalog.line_pair(), COMPLETENESS.INCOMPLETE),
        (rp2(), COMPLETENESS.COMPLETE),
        (Fan(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2]]), COMPLETENESS.INCOMPLETE),  # one cone missing
        (catalog.p1_times_p1(), COMPLETENESS.COMPLETE),
        (catalog.hirzebruch(3), COMPLETENESS.COMPLETE),
        (catalog.orthant(2), COMPLETENESS.INCOMPLETE),
        (catalog.orthant(3), COMPLETENESS.INCOMPLETE),
        (orthant_blowup(), COMPLETENESS.INCOMPLETE),
        (catalog.projective_space(3), COMPLETENESS.COMPLETE),
        (product(rp2(), rp2()), COMPLETENESS.COMPLETE),
        (skeleton(catalog.projective_space(3), 2), COMPLETENESS.INCOMPLETE),
    ],
)
def test_check_complete(fan, expected):
    assert check_complete(fan) is expected


def test_complete_surfaces_have_as_many_rays_as_cones():
    for name, fan in surface_corpus():
        assert check_complete(fan) is COMPLETENESS.COMPLETE, name
        assert len(fan.max_cones) == fan.ray_count, name


def test_maximal_cone_adjacency_of_rp2():
    graph = maximal_cone_adjacency(rp2())
    assert graph.number_of_nodes() == 3
    assert graph.number_of_edges() == 3


@pytest.mark.parametrize(
    "fan, collections",
    [
        (catalog.circle(), [(0, 1)]),
        (rp2(), [(0, 1, 2)]),
        (catalog.p1_times_p1(), [(0, 2), (1, 3)]),
        (catalog.orthant(3), []),
        (orthant_blowup(), [(0, 1, 2)]),
        (catalog.projective_space(3), [(0, 1, 2, 3)]),
        # the new ray 3 separates rays 0 and 1
        (star_subdivide(rp2(), (0, 1)), [(0, 1), (2, 3)]),
    ],
)
def test_primitive_collections(fan, collections):
    assert primitive_collections(fan) == collections


@pytest.mark.parametrize(
    "fan, flag_like",
    [
        (catalog.circle(), True),
        (catalog.p1_times_p1(), True),
        (rp2(), False),
        (catalog.projective_space(3), False),
        (orthant_blowup(), False),
        (barycentric_refine(rp2()), True),
        (barycentric_refine(catalog.projective_space(3)), True),
    ],
)
def test_is_flag_like(fan, flag_like):
    assert is_flag_like(fan) == flag_like


def test_simplicial_complex_of_rp2():
    complex_ = simplicial_complex(rp2())
    assert complex_.vertices == (0, 1, 2)
    assert complex_.is_face(())
    assert complex_.is_face((1, 0))
    assert not complex_.is_face((0, 1, 2))
    assert complex_.minimal_non_faces() == [(0, 1, 2)]
    assert not complex_.is_flag()


def test_star_of_a_ray_is_one_dimensional():
    quotient = star(rp2(), (0,))
    assert quotient.dim == 1
    assert sorted(quotient.rays) == [(-1,), (1,)]
    assert check_complete(quotient) is COMPLETENESS.COMPLETE


def test_star_of_a_maximal_cone_is_a_point():
    quotient = star(rp2(), (0, 1))
    assert quotient.dim == 0
    assert quotient.ray_count == 0


def test_star_of_complete_fan_is_complete():
    fan = catalog.projective_space(3)
    for tau in fan.faces(1) + fan.faces(2):
        quotient = star(fan, tau)
        assert quotient.dim == 3 - len(tau)
        assert check_smooth(quotient).smooth
        assert check_complete(quotient) is COMPLETENESS.COMPLETE


def test_star_rejects_non_face():
    with pytest.raises(ConeNotInFan):
        star(catalog.p1_times_p1(), (0, 2))


@pytest.mark.parametrize("name, fan", flag_like_corpus())
def test_star_keeps_flag_like(name, fan):
    assert is_flag_like(fan)
    for tau in fan.faces():
        assert is_flag_like(star(fan, tau)), tau


def test_barycentric_refine_rp2():
    refined = barycentric_refine(rp2())
    assert refined.ray_count == 6
    assert len(refined.max_cones) == 6
    assert refined.rays[:3] == rp2().rays
    assert check_smooth(refined).smooth
    assert check_complete(refined) is COMPLETENESS.COMPLETE


@pytest.mark.parametrize(
    "name, fan",
    [
        pytest.param(name, fan, marks=pytest.mark.slow) if fan.dim >= 3 else (name, fan)
        for name, fan in corpus()
    ],
)
def test_barycentric_refine_is_smooth(name, fan):
    refined = barycentric_refine(fan)
    assert check_smooth(refined).smooth
    assert check_complete(refined) is check_complete(fan)
    assert is_flag_like(refined)


def test_barycentric_refine_keeps_one_dimensional_fan():
    assert barycentric_refine(catalog.circle()) == catalog.circle()


def test_star_subdivide_is_a_blowup():
    blown_up = star_subdivide(rp2(), (0, 1))
    assert blown_up.ray_count == 4
    assert blown_up.rays[3] == (1, 1)
    assert check_smooth(blown_up).smooth
    assert check_complete(blown_up) is COMPLETENESS.COMPLETE


def test_star_subdivide_ray_is_identity():
    assert star_subdivide(rp2(), (1,)) == rp2()


def test_skeleton():
    assert skeleton(rp2(), 1).max_cones == ((0,), (1,), (2,))
    assert len(skeleton(catalog.projective_space(3), 2).max_cones) == 6
    assert skeleton(rp2(), 2) == rp2()


def test_product_of_circles():
    torus = product(catalog.circle(), catalog.circle())
    assert torus.rays == ((1, 0), (-1, 0), (0, 1), (0, -1))
    assert set(torus.max_cones) == {(0, 2), (0, 3), (1, 2), (1, 3)}
    assert check_complete(torus) is COMPLETENESS.COMPLETE


@pytest.mark.parametrize(
    "vector, expected",
    [
        ((2, 4), (1, 2)),
        ((-3, 6, 9), (-1, 2, 3)),
        ((0, 5), (0, 1)),
        ((1, 1), (1, 1)),
    ],
)
def test_primitive(vector, expected):
    assert primitive(vector) == expected


def test_primitive_rejects_zero():
    with pytest.raises(ValueError):
        primitive((0, 0))
