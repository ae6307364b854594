import pytest
import random
import sys
from itertools import product
from pathlib import Path

test_dir = Path(__file__).parent
root_dir = test_dir.parent
sys.path.insert(0, str(root_dir))

from src.core.complex import FacetPairing, Polyhedron, PolyhedralComplex, VertexTag
from src.core.lattice import FaceLattice
from src.utils.schema import parse_complex

FIXTURES = root_dir / "fixtures"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long acceptance runs (deselect with -m 'not slow')")


def load_fixture(name: str) -> PolyhedralComplex:
    return parse_complex((FIXTURES / f"{name}.vtc").read_text(encoding="utf-8"))


@pytest.fixture
def fixture_path():
    """Path of a fixture file by name."""
    return lambda name: str(FIXTURES / f"{name}.vtc")


@pytest.fixture
def figure_eight():
    return load_fixture("figure_eight")


@pytest.fixture
def whitehead():
    return load_fixture("whitehead")


@pytest.fixture
def cube():
    return load_fixture("cube")


@pytest.fixture
def octahedron():
    return load_fixture("octahedron")


@pytest.fixture
def torus_square():
    return load_fixture("torus_square")


@pytest.fixture
def double_tetrahedron():
    return load_fixture("double_tetrahedron")


@pytest.fixture
def double_truncated():
    return load_fixture("double_truncated")


@pytest.fixture
def hyperideal_triangle():
    return load_fixture("hyperideal_triangle")


@pytest.fixture
def temp_dir(tmp_path):
    """Provide a temporary directory for test files."""
    return tmp_path


# Random combinatorial polytopes: polygons and their pyramids, prisms and
# bipyramids. Facets are vertex tuples; no coordinates are needed.

def polygon(n: int):
    return n, [(i, (i + 1) % n) for i in range(n)]


def pyramid(base):
    n, facets = base
    return n + 1, [tuple(range(n))] + [tuple(f) + (n,) for f in facets]


def prism(base):
    n, facets = base
    return 2 * n, [tuple(range(n)), tuple(range(n, 2 * n))] + [
        tuple(f) + tuple(v + n for v in f) for f in facets
    ]


def bipyramid(base):
    n, facets = base
    return n + 2, [tuple(f) + (n,) for f in facets] + [tuple(f) + (n + 1,) for f in facets]


def random_polytope(rng: random.Random):
    """A random 2- or 3-polytope with at most 12 vertices."""
    kind = rng.choice(["polygon", "pyramid", "prism", "bipyramid", "cube"])
    if kind == "polygon":
        return polygon(rng.randint(3, 12))
    if kind == "pyramid":
        return pyramid(polygon(rng.randint(3, 11)))
    if kind == "prism":
        return prism(polygon(rng.randint(3, 6)))
    if kind == "bipyramid":
        return bipyramid(polygon(rng.randint(3, 10)))
    cube = list(product((0, 1), repeat=3))
    index = {v: i for i, v in enumerate(cube)}
    facets = [
        tuple(index[v] for v in cube if v[axis] == side) for axis in range(3) for side in (0, 1)
    ]
    return 8, facets


def polytope(num_vertices, facets, dim=None, label="") -> Polyhedron:
    dim = dim if dim is not None else FaceLattice.from_facets(num_vertices, facets).dim
    return Polyhedron(dim=dim, facets=tuple(tuple(f) for f in facets),
                      tags=(VertexTag.IDEAL,) * num_vertices, label=label)


def doubled(num_vertices, facets) -> PolyhedralComplex:
    """Two copies of a polytope glued along every facet by the identity."""
    poly = polytope(num_vertices, facets)
    pairings = [
        FacetPairing((0, i), (1, i), tuple((v, v) for v in sorted(f))) for i, f in enumerate(poly.facets)
    ]
    return PolyhedralComplex(poly.dim, [poly, poly], pairings, label="double")


def polygon_symmetry(n: int, shift: int, reflect: bool):
    """Rotation by ``shift``, followed by a reflection if asked, of an n-gon."""
    return [(shift - i) % n if reflect else (shift + i) % n for i in range(n)]


def lift_symmetry(kind: str, n: int, phi, swap_apexes: bool = False):
    """Extend a base polygon symmetry to the polytope built over that polygon."""
    if kind == "polygon":
        return list(phi)
    if kind == "pyramid":
        return list(phi) + [n]
    if kind == "prism":
        return list(phi) + [phi[i] + n for i in range(n)]
    return list(phi) + ([n + 1, n] if swap_apexes else [n, n + 1])


def twisted(num_vertices, facets, phi) -> PolyhedralComplex:
    """Two copies of a polytope, facet f of the first glued to phi(f) of the second by phi."""
    poly = polytope(num_vertices, facets)
    index = {frozenset(f): j for j, f in enumerate(poly.facets)}
    pairings = [
        FacetPairing((0, i), (1, index[frozenset(phi[v] for v in f)]), tuple((v, phi[v]) for v in sorted(f)))
        for i, f in enumerate(poly.facets)
    ]
    return PolyhedralComplex(poly.dim, [poly, poly], pairings, label="twisted")
