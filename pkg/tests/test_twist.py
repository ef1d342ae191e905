import pytest

from tanglebounds.diagram import LinkDiagram, conway_sum, denominator_closure, numerator_closure
from tanglebounds.families import (
    figure6_tangle, gen_twist_tangle, right_trefoil, trefoil_connect_sum, vertical_twist,
)
from tanglebounds.pd import parse_pd
from tanglebounds.twist import (
    faces, is_diagrammatically_prime, is_reduced, is_strongly_alternating, nugatory_crossings,
    sphere_count, tangle_twist_number, tangle_twist_regions, twist_number, twist_regions,
)


def test_face_counts(trefoil, figure_eight):
    assert len(faces(LinkDiagram((), 1))) == 2
    assert len(faces(trefoil)) == 5
    assert len(faces(figure_eight)) == 6


def test_euler_characteristic_on_corpus(link_fixtures):
    for f in link_fixtures:
        d = f.diagram
        c = len(d.crossings)
        assert c - 2 * c + len(faces(d)) == 2 * sphere_count(d), f.name


def test_trefoil_is_one_region(trefoil):
    (region,) = twist_regions(trefoil)
    assert sorted(region) == [0, 1, 2]
    assert twist_number(trefoil) == 1


def test_small_twist_numbers(figure_eight, hopf):
    assert twist_number(figure_eight) == 2
    assert twist_number(hopf) == 1
    assert twist_number(LinkDiagram((), 1)) == 0


def test_regions_partition_crossings(link_fixtures):
    for f in link_fixtures:
        regions = twist_regions(f.diagram)
        flat = sorted(x for r in regions for x in r)
        assert flat == list(range(len(f.diagram.crossings))), f.name
        assert len(regions) <= len(f.diagram.crossings)


def test_tangle_twist_numbers():
    assert tangle_twist_number(vertical_twist(2)) == 1
    assert tangle_twist_number(vertical_twist(3)) == 1
    assert tangle_twist_number(gen_twist_tangle([2, 2])) == 2
    assert len(gen_twist_tangle([2, 2]).crossings) == 4


def test_figure6():
    t = figure6_tangle()
    assert len(t.crossings) == 5
    assert tangle_twist_number(t) == 5
    assert twist_number(numerator_closure(t)) == 3
    assert twist_number(denominator_closure(t)) == 3
    assert len(tangle_twist_regions(t)) == 5


def test_figure6_sum_with_itself():
    t = figure6_tangle()
    d = conway_sum([t, t])
    assert len(d.crossings) == 10
    assert twist_number(d) == 10


def test_two_summand_pretzel_sums_merge_at_the_joins():
    # the cyclic gluing turns a two-summand sum of vertical twists into one
    # long twist, so additivity needs strongly alternating summands
    t = vertical_twist(3)
    assert not is_strongly_alternating(t)
    assert twist_number(conway_sum([t, t])) == 1


def test_strong_alternation():
    assert is_strongly_alternating(figure6_tangle())
    assert is_strongly_alternating(gen_twist_tangle([-1] * 5, skeleton="octahedral"))
    assert is_strongly_alternating(gen_twist_tangle([2, 1, 3, 1, 2], skeleton="octahedral"))
    assert not is_strongly_alternating(gen_twist_tangle([2, 2]))


def test_nugatory_detection():
    kink = parse_pd("X(1,2,2,1)")
    assert nugatory_crossings(kink) == [0]
    assert not is_reduced(kink)
    assert is_reduced(right_trefoil())


def test_diagrammatic_primeness():
    assert is_diagrammatically_prime(right_trefoil())
    assert not is_diagrammatically_prime(trefoil_connect_sum(2))


def test_closure_bounds_on_octahedral_variants():
    for twists in [(1, 1, 1, 1, 1), (2, 1, 1, 1, 1), (2, 2, 2, 2, 2), (3, 1, 2, 1, 1)]:
        t = gen_twist_tangle(twists, skeleton="octahedral")
        tw = tangle_twist_number(t)
        assert tw == 5
        for c in (numerator_closure(t), denominator_closure(t)):
            assert tw - 2 <= twist_number(c) <= tw
