"""
Tests for normalized chains, homology and mapping cones.
"""

from django.test import SimpleTestCase

from apps.core.exceptions import NotAComplex, NotChainMap
from apps.simplicial.chains import (
    RATIONALS,
    ChainComplex,
    ChainMap,
    SparseMatrix,
    chain_map,
    homology,
    mapping_cone_homology,
    normalized_chain_complex,
    simplicial_homology,
)
from apps.simplicial.complexes import (
    Image,
    SimplicialMap,
    empty,
    from_simplices,
    identity_map,
    simplex_boundary,
    standard_simplex,
)
from apps.simplicial.serializers import HomologyResultSerializer

# minimal six-vertex triangulation of the projective plane
RP2 = [
    (1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
    (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6),
]


class NormalizedChainTests(SimpleTestCase):
    def test_one_simplex_boundary(self):
        C = normalized_chain_complex(standard_simplex(1))
        self.assertEqual(C.boundary(1).to_dense(), [[-1], [1]])
        H = homology(C)
        self.assertEqual(H.betti(0), 1)
        self.assertEqual(H.betti(1), 0)

    def test_boundary_squares_to_zero(self):
        for n in range(1, 6):
            normalized_chain_complex(standard_simplex(n), reduced=True).validate()
            normalized_chain_complex(simplex_boundary(n), reduced=True).validate()

    def test_degenerate_faces_contribute_nothing(self):
        from apps.simplicial.complexes import build

        X = build([[0], ["loop"]], [[()], [(0, 0)]])
        self.assertTrue(normalized_chain_complex(X).boundary(1).is_zero())
        self.assertEqual(simplicial_homology(X, reduced=False).betti(1), 1)


class HomologyOracleTests(SimpleTestCase):
    def test_simplices_are_acyclic(self):
        for n in range(6):
            H = simplicial_homology(standard_simplex(n), reduced=False)
            self.assertEqual(H.nonzero(), {0: (1, ())})

    def test_simplex_boundaries_are_spheres(self):
        for n in range(1, 6):
            H = simplicial_homology(simplex_boundary(n))
            self.assertEqual(H.nonzero(), {n - 1: (1, ())})

    def test_euler_characteristic_matches_betti_numbers(self):
        for X in (standard_simplex(3), simplex_boundary(4), from_simplices(RP2)):
            H = simplicial_homology(X, reduced=False)
            self.assertEqual(X.euler_characteristic(), H.euler_characteristic())

    def test_zero_complex(self):
        H = homology(ChainComplex(ring="z", ranks={}))
        self.assertEqual(H.nonzero(), {})

    def test_torsion_from_two(self):
        C = ChainComplex(ring="z", ranks={0: 1, 1: 1}, boundaries={1: SparseMatrix.from_dense([[2]])})
        H = homology(C)
        self.assertEqual(H.group(0).torsion, (2,))
        self.assertEqual(H.betti(0), 0)
        self.assertEqual(H.group(0).describe(), "Z/2")

    def test_projective_plane_torsion_and_rational_path(self):
        X = from_simplices(RP2)
        over_z = simplicial_homology(X)
        self.assertEqual(over_z.nonzero(), {1: (0, (2,))})
        over_q = simplicial_homology(X, ring=RATIONALS)
        self.assertTrue(over_q.is_acyclic())

    def test_empty_complex_is_reported_as_such(self):
        H = simplicial_homology(empty())
        self.assertTrue(H.empty)
        self.assertFalse(H.is_acyclic())
        self.assertEqual(H.describe(), "empty complex")

    def test_non_complex_raises(self):
        ones = SparseMatrix.from_dense([[1]])
        C = ChainComplex(ring="z", ranks={0: 1, 1: 1, 2: 1}, boundaries={1: ones, 2: ones})
        with self.assertRaises(NotAComplex):
            homology(C)

    def test_serializer_reports_summary(self):
        data = HomologyResultSerializer(simplicial_homology(simplex_boundary(2))).data
        self.assertEqual(data["summary"], "H~_1 = Z")
        self.assertTrue(data["reduced"])


class MappingConeTests(SimpleTestCase):
    def test_identity_cone_is_acyclic(self):
        X = standard_simplex(2)
        H = mapping_cone_homology(chain_map(identity_map(X)))
        self.assertEqual(H.nonzero(), {})

    def test_constant_map_from_three_points(self):
        X = from_simplices([(0,), (1,), (2,)])
        Y = standard_simplex(0)
        m = SimplicialMap(X, Y, ((Image(0, 0),) * 3,))
        H = mapping_cone_homology(chain_map(m))
        self.assertEqual(H.nonzero(), {1: (2, ())})

    def test_non_chain_map_raises(self):
        C = normalized_chain_complex(standard_simplex(1))
        f = ChainMap(C, C, {0: SparseMatrix.from_dense([[1, 0], [0, 1]])})
        with self.assertRaises(NotChainMap):
            mapping_cone_homology(f)

    def test_shift_moves_degrees(self):
        C = normalized_chain_complex(standard_simplex(1)).shift(1)
        self.assertEqual(C.degrees, [1, 2])
        self.assertEqual(C.boundary(2).to_dense(), [[1], [-1]])
