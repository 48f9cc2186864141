import random

import pytest

from altknot import diagram as dg
from altknot import families as fam
from altknot import spectra as sp
from altknot import surgery as sg
from altknot.polynomials import X, charpoly


def member(family, *params):
    return fam.generate(fam.FamilySpec(family, tuple(params)))


def poly_of(d):
    return charpoly(sp.adjacency(d))


def bigon_faces(d):
    face_list, _ = dg.faces(d)
    return [i for i, t in enumerate(face_list) if len(t) == 2]


def face_id_of_darts(d, darts):
    face_list, _ = dg.faces(d)
    return next(i for i, t in enumerate(face_list) if set(t) == set(darts))


# ---------------------------------------------------------------------------
# contract_bigon
# ---------------------------------------------------------------------------

def test_contract_twist_chain_end():
    d = member(fam.TWIST_CHAIN, 3)
    face_list, _ = dg.faces(d)
    two_sided = [i for i in bigon_faces(d)
                 if len({d.vertex_of(x) for x in face_list[i]}) == 2]
    shrunk = sg.contract_bigon(d, two_sided[0])
    assert dg.isomorphic(shrunk, member(fam.TWIST_CHAIN, 2))


def test_contract_cyclic_torus_to_trefoil():
    d = member(fam.CYCLIC_TORUS, 4)
    shrunk = sg.contract_bigon(d, bigon_faces(d)[0])
    assert dg.validate(shrunk) == []
    assert poly_of(shrunk) == X ** 3 - 3 * X - 2


def test_contract_rejects_non_bigon():
    d = member(fam.CYCLIC_TORUS, 3)
    face_list, _ = dg.faces(d)
    triangle = next(i for i, t in enumerate(face_list) if len(t) == 3)
    with pytest.raises(sg.SurgeryError, match="needs a bigon"):
        sg.contract_bigon(d, triangle)


def test_contract_rejects_one_vertex_circle():
    d = member(fam.CYCLIC_TORUS, 1)
    with pytest.raises(sg.SurgeryError, match="circle"):
        sg.contract_bigon(d, bigon_faces(d)[0])


# ---------------------------------------------------------------------------
# expand_vertex
# ---------------------------------------------------------------------------

def test_expand_trefoil_along_upper_lane_extends_the_necklace():
    d = member(fam.CYCLIC_TORUS, 3)
    for v in range(3):
        grown = sg.expand_vertex(d, v, sg.LANE_OUT)
        assert dg.validate(grown) == []
        assert poly_of(grown) == fam.cyclic_poly(4)


def test_expand_lanes_bifurcate():
    d = member(fam.TWO_RIBBON, 2, 2)  # the 4-vertex knot
    a = sg.expand_vertex(d, 0, sg.LANE_OUT)
    b = sg.expand_vertex(d, 0, sg.LANE_IN)
    assert dg.validate(a) == [] and dg.validate(b) == []
    assert poly_of(a) != poly_of(b)


def same_map(a, b):
    """Identical darts; rotations may be written from different cyclic
    starting points."""
    if a.darts != b.darts or a.vertex_count != b.vertex_count:
        return False
    for ra, rb in zip(a.rotation, b.rotation):
        if not any(tuple(ra[(i + s) % 4] for i in range(4)) == tuple(rb)
                   for s in range(4)):
            return False
    return True


def test_expand_then_contract_is_identity():
    d = member(fam.THREE_RIBBON_G, 2, 1, 1)
    for v in range(d.vertex_count):
        for lane in sg.LANES:
            grown, _, bigon = sg._expand(d, v, lane)
            back = sg.contract_bigon(grown, face_id_of_darts(grown, bigon))
            assert same_map(back, d), (v, lane)
            assert dg.isomorphic(back, d), (v, lane)


def test_expand_contract_across_families(member_diagrams):
    rng = random.Random(7)
    cases = [(spec, d) for spec, d in member_diagrams if d.vertex_count >= 2]
    for spec, d in rng.sample(cases, 10):
        v = rng.randrange(d.vertex_count)
        lane = rng.choice(sg.LANES)
        grown, _, bigon = sg._expand(d, v, lane)
        assert dg.validate(grown) == [], str(spec)
        back = sg.contract_bigon(grown, face_id_of_darts(grown, bigon))
        assert dg.isomorphic(back, d), str(spec)


def test_expansion_chain_has_constant_source():
    d = member(fam.TWO_RIBBON, 3, 2)
    polys = [poly_of(d)]
    cur = 0
    for _ in range(3):
        d, cur, _ = sg._expand(d, cur, sg.LANE_IN)
        polys.append(poly_of(d))
    first = fam.check_family_recurrence(*polys[0:3])
    second = fam.check_family_recurrence(*polys[1:4])
    assert not first.homogeneous
    assert first.source == second.source


def test_expand_rejects_bad_input():
    d = member(fam.CYCLIC_TORUS, 3)
    with pytest.raises(sg.SurgeryError):
        sg.expand_vertex(d, 99, sg.LANE_OUT)
    with pytest.raises(sg.SurgeryError):
        sg.expand_vertex(d, 0, "diagonal")


# ---------------------------------------------------------------------------
# eliminate_crossing
# ---------------------------------------------------------------------------

def test_eliminate_trefoil_both_lanes():
    d = member(fam.CYCLIC_TORUS, 3)
    upper = sg.eliminate_crossing(d, 2, sg.LANE_OUT)
    lower = sg.eliminate_crossing(d, 2, sg.LANE_IN)
    # one smoothing leaves the Hopf link, the other the doubly twisted circle
    assert poly_of(upper) == X ** 2 - 4
    assert poly_of(lower) == (X - 2) * X
    for r in (upper, lower):
        _, exact = __import__("altknot.polynomials", fromlist=["divide_out"]) \
            .divide_out(poly_of(r), X - 2)
        assert exact


def test_eliminate_hopf_gives_one_vertex_twist():
    r = sg.eliminate_crossing(member(fam.CYCLIC_TORUS, 2), 0, sg.LANE_OUT)
    assert sp.adjacency(r).rows == ((2,),)
    assert r.kind == "twist"


def test_eliminate_last_vertex_yields_unknot():
    for lane in sg.LANES:
        r = sg.eliminate_crossing(member(fam.CYCLIC_TORUS, 1), 0, lane)
        assert isinstance(r, sg.Unknot)
        assert r.circles >= 1


def test_eliminate_results_validate(member_diagrams):
    for spec, d in member_diagrams:
        if d.vertex_count < 2:
            continue
        for v in {0, d.vertex_count // 2, d.vertex_count - 1}:
            for lane in sg.LANES:
                try:
                    r = sg.eliminate_crossing(d, v, lane)
                except sg.SurgeryError:
                    continue  # split results are refused, which is fine
                assert isinstance(r, dg.Diagram)
                assert dg.validate(r) == [], str(spec)
                assert r.vertex_count == d.vertex_count - 1


def test_ribbon_unwinds_back_to_seed():
    # contracting a family member's bigons one by one walks back down the
    # family member by member; the last vertex then eliminates to the circle
    for family, v in ((fam.TWIST_CHAIN, 5), (fam.CYCLIC_TORUS, 5)):
        d = member(family, v)
        while d.vertex_count > 1:
            face_list, _ = dg.faces(d)
            candidates = [i for i, t in enumerate(face_list)
                          if len(t) == 2
                          and len({d.vertex_of(x) for x in t}) == 2]
            d = sg.contract_bigon(d, candidates[0])
            assert dg.validate(d) == []
            previous = member(family, d.vertex_count)
            assert (dg.isomorphic(d, previous)
                    or dg.isomorphic(d, dg.mirror(previous))), \
                (family, d.vertex_count)
        assert isinstance(sg.eliminate_crossing(d, 0, sg.LANE_IN), sg.Unknot)


# ---------------------------------------------------------------------------
# compose_twist
# ---------------------------------------------------------------------------

def test_composition_of_cyclic_diagrams():
    a = member(fam.CYCLIC_TORUS, 3)
    c = sg.compose_twist(a, 0, a, 0, 0)
    assert dg.validate(c) == []
    assert poly_of(c) == fam.three_ribbon_g_poly(3, 3, 0)


def test_composition_strand_count_adds():
    a = member(fam.CYCLIC_TORUS, 4)
    b = member(fam.CYCLIC_TORUS, 3)
    c = sg.compose_twist(a, 2, b, 1, 0)
    assert (sp.trace_strands(sp.adjacency(c)).count
            == sp.trace_strands(sp.adjacency(a)).count
            + sp.trace_strands(sp.adjacency(b)).count - 1)


def test_composition_twist_family_is_homogeneous():
    a = member(fam.CYCLIC_TORUS, 3)
    b = member(fam.CYCLIC_TORUS, 4)
    polys = [poly_of(sg.compose_twist(a, 1, b, 2, t)) for t in range(4)]
    assert fam.check_family_recurrence(*polys[0:3]).homogeneous
    assert fam.check_family_recurrence(*polys[1:4]).homogeneous


def test_compose_validates_arguments():
    a = member(fam.CYCLIC_TORUS, 3)
    with pytest.raises(sg.SurgeryError):
        sg.compose_twist(a, 42, a, 0, 0)
    with pytest.raises(sg.SurgeryError):
        sg.compose_twist(a, 0, a, 0, -1)


def test_lane_helpers_pick_growth_direction():
    d = member(fam.CYCLIC_TORUS, 4)
    face_list, _ = dg.faces(d)
    bigon = next(t for t in face_list
                 if len(t) == 2 and 0 in {d.vertex_of(x) for x in t})
    keep = sg.lane_preserving_face(d, bigon)
    split = sg.lane_splitting_face(d, bigon)
    assert {keep, split} == set(sg.LANES)
    # preserving the necklace bigon lengthens the necklace; splitting it
    # starts the orthogonal ribbon
    assert poly_of(sg.expand_vertex(d, 0, keep)) == fam.cyclic_poly(5)
    assert poly_of(sg.expand_vertex(d, 0, split)) == fam.two_ribbon_poly(3, 2)
