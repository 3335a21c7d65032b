"""The balanced-biclique reduction and its equivalence checker."""

import itertools
import random

import pytest

from hamholes.errors import GraphFormatError
from hamholes.graph import Graph
from hamholes.hardness import (
    BipartiteInstance,
    bcbs_to_bhn,
    check_reduction_equivalence,
    parse_instance,
    serialize_instance,
)
from hamholes.holes import has_bipartite_hole


def _instance(a, k, cross_edges):
    return BipartiteInstance(Graph(2 * a, cross_edges), a, k)


def _all_instances(a, k):
    cross = [(u, a + v) for u in range(a) for v in range(a)]
    for bits in range(1 << len(cross)):
        edges = [cross[i] for i in range(len(cross)) if (bits >> i) & 1]
        yield _instance(a, k, edges)


# ---------------------------------------------------------------------------
# instance plumbing


def test_instance_validation():
    _instance(2, 1, [(0, 2), (1, 3)])  # fine
    with pytest.raises(ValueError):
        _instance(2, 0, [])
    with pytest.raises(ValueError):
        BipartiteInstance(Graph(3), 1, 1)  # odd vertex count
    with pytest.raises(ValueError):
        _instance(2, 1, [(0, 1)])  # edge inside the left side
    with pytest.raises(ValueError):
        _instance(2, 1, [(2, 3)])  # edge inside the right side


def test_instance_round_trip():
    inst = _instance(2, 2, [(0, 2), (0, 3), (1, 2)])
    again = parse_instance(serialize_instance(inst))
    assert again.graph == inst.graph and again.a == inst.a and again.k == inst.k


def test_parse_instance_rejects():
    with pytest.raises(GraphFormatError, match="balance"):
        parse_instance("2 3 1\n")  # unbalanced sides
    with pytest.raises(GraphFormatError):
        parse_instance("")
    with pytest.raises((GraphFormatError, ValueError)):
        parse_instance("2 2 1\n0 1\n")  # non-cross edge


# ---------------------------------------------------------------------------
# the reduction map


def test_image_shape():
    inst = _instance(2, 2, [(0, 2), (0, 3), (1, 2), (1, 3)])
    img = bcbs_to_bhn(inst)
    assert img.n == 2 * inst.a + 3 * inst.k - 1 == 9


def test_image_shape_k1():
    inst = _instance(2, 1, [(0, 2)])
    img = bcbs_to_bhn(inst)
    assert img.n == 4 + 2  # gadget on 3k - 1 = 2 vertices


def test_gadget_side_always_has_holes():
    # the attached gadget guarantees holes at every split except (k, k)
    inst = _instance(3, 2, [])
    img = bcbs_to_bhn(inst)
    assert has_bipartite_hole(img, 1, 2 * inst.k - 1) is not None


# ---------------------------------------------------------------------------
# equivalence


def test_equivalence_exhaustive_2_plus_2():
    for k in (1, 2):
        for inst in _all_instances(2, k):
            assert check_reduction_equivalence(inst) is True


def test_equivalence_random_3_plus_3():
    rng = random.Random(99)
    cross = [(u, 3 + v) for u in range(3) for v in range(3)]
    for _ in range(40):
        edges = [e for e in cross if rng.random() < rng.choice([0.3, 0.6, 0.9])]
        for k in (1, 2, 3):
            assert check_reduction_equivalence(_instance(3, k, edges)) is True


def test_equivalence_guard_rejects_large():
    inst = _instance(7, 2, [])
    with pytest.raises(ValueError):
        check_reduction_equivalence(inst)
    with pytest.raises(ValueError):
        check_reduction_equivalence(_instance(2, 4, []))


def test_known_biclique_cases():
    # complete cross: K_{k,k} present for every k <= a
    full = [(u, 3 + v) for u in range(3) for v in range(3)]
    for k in (1, 2, 3):
        assert check_reduction_equivalence(_instance(3, k, full)) is True
    # empty: no K_{1,1}
    assert check_reduction_equivalence(_instance(2, 1, [])) is True
