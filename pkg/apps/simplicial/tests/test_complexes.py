"""
Tests for simplicial set construction, cones and isomorphism checks.
"""

from django.test import SimpleTestCase

from apps.core.exceptions import DanglingFace, IdentityViolation
from apps.simplicial.chains import simplicial_homology
from apps.simplicial.complexes import (
    Face,
    Image,
    SimplicialMap,
    build,
    check_simplicial_iso,
    cone,
    empty,
    from_simplices,
    identity_map,
    simplex_boundary,
    standard_simplex,
)


class BuildTests(SimpleTestCase):
    def test_standard_one_simplex(self):
        X = build([[0, 1], ["01"]], [[(), ()], [(1, 0)]])
        self.assertEqual(X.f_vector, (2, 1))
        self.assertEqual(X.face(1, 0, 0), Face(1))

    def test_loop_is_accepted(self):
        X = build([[0], ["loop"]], [[()], [(0, 0)]])
        self.assertEqual(X.f_vector, (1, 1))

    def test_inconsistent_two_simplex_raises(self):
        cells = [[0, 1, 2], ["01", "02", "12"], ["012"]]
        edges = [(1, 0), (2, 0), (2, 1)]
        # d_0 should be the edge 12
        with self.assertRaises(IdentityViolation):
            build(cells, [[(), (), ()], edges, [(0, 1, 0)]])

    def test_face_out_of_range_raises(self):
        with self.assertRaises(DanglingFace):
            build([[0, 1], ["01"]], [[(), ()], [(1, 5)]])

    def test_missing_face_in_collection_raises(self):
        with self.assertRaises(DanglingFace):
            from_simplices([(0, 1)], close=False)


class StandardComplexTests(SimpleTestCase):
    def test_simplex_f_vectors(self):
        self.assertEqual(standard_simplex(2).f_vector, (3, 3, 1))
        self.assertEqual(simplex_boundary(3).f_vector, (4, 6, 4))

    def test_faces_delete_vertices(self):
        X = standard_simplex(2)
        top = X.index(2, (0, 1, 2))
        self.assertEqual(X.label(1, X.face(2, top, 0).index), (1, 2))
        self.assertEqual(X.label(1, X.face(2, top, 2).index), (0, 1))


class ConeTests(SimpleTestCase):
    def test_cone_of_empty_is_a_point(self):
        C, inclusion = cone(empty())
        self.assertEqual(C.f_vector, (1,))
        self.assertEqual(C.label(0, 0), ("apex",))
        self.assertEqual(inclusion.images, ())

    def test_cone_of_two_points(self):
        C, _ = cone(from_simplices([("p",), ("q",)]))
        self.assertEqual(C.f_vector, (3, 2))

    def test_cone_faces(self):
        X = standard_simplex(1)
        C, inclusion = cone(X)
        k = C.index(2, ("cone", (0, 1)))
        self.assertEqual(C.label(1, C.face(2, k, 2).index), ("base", (0, 1)))
        self.assertEqual(C.label(1, C.face(2, k, 0).index), ("cone", (1,)))
        self.assertEqual(inclusion.image(1, 0), Image(1, C.index(1, ("base", (0, 1)))))

    def test_cone_is_acyclic(self):
        for X in (simplex_boundary(2), simplex_boundary(3), from_simplices([(0,), (1,), (2,)])):
            C, _ = cone(X)
            self.assertTrue(simplicial_homology(C).is_acyclic())


class IsoCheckTests(SimpleTestCase):
    def test_identity_is_an_isomorphism(self):
        X = standard_simplex(2)
        self.assertTrue(check_simplicial_iso(X, X, identity_map(X)))

    def test_face_breaking_relabelling_is_rejected(self):
        X = simplex_boundary(2)
        # swap two vertices but keep every edge fixed
        vertices = (Image(0, 1), Image(0, 0), Image(0, 2))
        edges = tuple(Image(1, k) for k in range(3))
        check = check_simplicial_iso(X, X, SimplicialMap(X, X, (vertices, edges)))
        self.assertFalse(check)
        self.assertEqual(check.counterexample["reason"], "face mismatch")

    def test_undefined_image_is_reported(self):
        X = standard_simplex(1)
        m = SimplicialMap(X, X, ((Image(0, 0), Image(0, 1)), (None,)))
        check = check_simplicial_iso(X, X, m)
        self.assertFalse(check.ok)
        self.assertEqual(check.counterexample["reason"], "undefined image")

    def test_out_of_range_image_is_reported(self):
        X = simplex_boundary(2)
        edges = tuple(Image(1, k) for k in range(3))
        for bad in (5, -1):
            vertices = (Image(0, 0), Image(0, 1), Image(0, bad))
            check = check_simplicial_iso(X, X, SimplicialMap(X, X, (vertices, edges)))
            self.assertFalse(check)
            self.assertEqual(check.counterexample["reason"], "undefined image")
            self.assertEqual(check.counterexample["image"], bad)
