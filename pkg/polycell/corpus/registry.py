"""
Fixture registry for the command line and the verification suites.
Fixtures are referenced as ``@name`` or ``@name:arg,arg``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from polycell.core.errors import BadParameter
from polycell.corpus import builders
from polycell.models.multigraph import MultiGraph
from polycell.models.polycomplex import Complex
from polycell.services.complex_products import complex_tensor_product


class FixtureType(str, Enum):
    GRAPH = "graph"
    COMPLEX = "complex"
    PRODUCT = "product"


@dataclass
class Fixture:
    id: str
    name: str
    type: FixtureType
    description: str
    builder: Callable[..., Union[Complex, MultiGraph]]
    arg_types: Tuple[type, ...] = ()
    defaults: Tuple = ()


def hexagon_necklace_product(beads: int = 3) -> Complex:
    """A hexagon times a hexagon necklace; both components are kept."""
    return complex_tensor_product(builders.polygon(6), builders.necklace(beads, 6)).complex


FIXTURES: Dict[str, Fixture] = {
    # Graphs
    "cycle": Fixture(
        id="cycle",
        name="Cycle",
        type=FixtureType.GRAPH,
        description="n-cycle; a loop for n = 1, a digon for n = 2",
        builder=builders.cycle,
        arg_types=(int,),
    ),
    "path": Fixture(
        id="path",
        name="Path",
        type=FixtureType.GRAPH,
        description="path on n vertices",
        builder=builders.path,
        arg_types=(int,),
    ),
    "complete": Fixture(
        id="complete",
        name="Complete graph",
        type=FixtureType.GRAPH,
        description="K_n",
        builder=builders.complete,
        arg_types=(int,),
    ),
    "star": Fixture(
        id="star",
        name="Star",
        type=FixtureType.GRAPH,
        description="one centre joined to k leaves",
        builder=builders.star,
        arg_types=(int,),
    ),
    "complete_bipartite": Fixture(
        id="complete_bipartite",
        name="Complete bipartite graph",
        type=FixtureType.GRAPH,
        description="K_{a,b}",
        builder=builders.complete_bipartite,
        arg_types=(int, int),
    ),
    "loop": Fixture(
        id="loop",
        name="Loop",
        type=FixtureType.GRAPH,
        description="one vertex with one loop",
        builder=builders.loop,
    ),
    # Polygons
    "polygon": Fixture(
        id="polygon",
        name="Polygon",
        type=FixtureType.COMPLEX,
        description="one n-gon on an n-cycle",
        builder=builders.polygon,
        arg_types=(int,),
    ),
    "wrapped_polygon": Fixture(
        id="wrapped_polygon",
        name="Wrapped polygon",
        type=FixtureType.COMPLEX,
        description="a total-gon wound around a core-cycle",
        builder=builders.wrapped_polygon,
        arg_types=(int, int),
    ),
    "one_gon": Fixture(
        id="one_gon",
        name="1-gon",
        type=FixtureType.COMPLEX,
        description="one loop bounding one face",
        builder=builders.one_gon,
    ),
    "multi_polygon": Fixture(
        id="multi_polygon",
        name="Stacked polygons",
        type=FixtureType.COMPLEX,
        description="several n-gons on one n-cycle",
        builder=builders.multi_polygon,
        arg_types=(int, int),
    ),
    "twin_polygons": Fixture(
        id="twin_polygons",
        name="Twin polygons",
        type=FixtureType.COMPLEX,
        description="two n-gons on one cycle, started antipodally",
        builder=builders.twin_polygons,
        arg_types=(int,),
    ),
    # One-vertex complexes
    "dunce_hat": Fixture(
        id="dunce_hat",
        name="Dunce hat",
        type=FixtureType.COMPLEX,
        description="a triangle glued along e e e^-1",
        builder=builders.dunce_hat,
    ),
    "torus": Fixture(
        id="torus",
        name="Torus",
        type=FixtureType.COMPLEX,
        description="a square glued along a b a^-1 b^-1",
        builder=builders.torus,
    ),
    "projective_plane": Fixture(
        id="projective_plane",
        name="Projective plane",
        type=FixtureType.COMPLEX,
        description="a 2-gon wound twice around a loop",
        builder=builders.projective_plane,
    ),
    # Polyhedra
    "tetrahedron": Fixture(
        id="tetrahedron",
        name="Tetrahedron",
        type=FixtureType.COMPLEX,
        description="boundary of the tetrahedron",
        builder=builders.tetrahedron,
    ),
    "cube_surface": Fixture(
        id="cube_surface",
        name="Cube surface",
        type=FixtureType.COMPLEX,
        description="boundary of the cube",
        builder=builders.cube_surface,
    ),
    # Strips, chains and necklaces
    "strip": Fixture(
        id="strip",
        name="Square strip",
        type=FixtureType.COMPLEX,
        description="closed band of squares, optionally twisted",
        builder=builders.strip,
        arg_types=(int, bool),
        defaults=(False,),
    ),
    "polygon_chain": Fixture(
        id="polygon_chain",
        name="Polygon chain",
        type=FixtureType.COMPLEX,
        description="even polygons glued in a row along opposite edges",
        builder=builders.polygon_chain,
        arg_types=(int, int),
    ),
    "necklace": Fixture(
        id="necklace",
        name="Necklace",
        type=FixtureType.COMPLEX,
        description="even polygons in a row sharing antipodal vertices",
        builder=builders.necklace,
        arg_types=(int, int),
    ),
    "doubled_octagon": Fixture(
        id="doubled_octagon",
        name="Doubled octagon",
        type=FixtureType.COMPLEX,
        description="octagon with corners 1, 3 and 5, 7 identified",
        builder=builders.doubled_octagon,
    ),
    # Products
    "hexagon_necklace_product": Fixture(
        id="hexagon_necklace_product",
        name="Hexagon times necklace",
        type=FixtureType.PRODUCT,
        description="hexagon x hexagon necklace, with non-Cartesian automorphisms",
        builder=hexagon_necklace_product,
        arg_types=(int,),
        defaults=(3,),
    ),
}


def get_fixture(fixture_id: str) -> Optional[Fixture]:
    return FIXTURES.get(fixture_id)


def get_all_fixtures() -> Dict[str, Fixture]:
    return FIXTURES


def get_fixtures_by_type(fixture_type: FixtureType) -> List[Fixture]:
    return [f for f in FIXTURES.values() if f.type == fixture_type]


def _convert(value: str, kind: type):
    if kind is bool:
        lowered = value.strip().lower()
        if lowered in ("true", "yes", "1", "twisted"):
            return True
        if lowered in ("false", "no", "0"):
            return False
        raise BadParameter(f"expected a boolean, got {value!r}")
    try:
        return kind(value)
    except ValueError:
        raise BadParameter(f"expected {kind.__name__}, got {value!r}") from None


def build_fixture(fixture_id: str, args: Sequence[str] = ()) -> Union[Complex, MultiGraph]:
    fixture = get_fixture(fixture_id)
    if fixture is None:
        raise BadParameter(f"unknown fixture {fixture_id!r}")
    required = len(fixture.arg_types) - len(fixture.defaults)
    if not required <= len(args) <= len(fixture.arg_types):
        raise BadParameter(
            f"fixture {fixture_id!r} takes {required} to {len(fixture.arg_types)} arguments, "
            f"got {len(args)}"
        )
    values = [_convert(a, kind) for a, kind in zip(args, fixture.arg_types)]
    return fixture.builder(*values)


def parse_reference(reference: str) -> Tuple[str, List[str]]:
    """Split ``@name:arg,arg`` into the fixture id and its raw arguments."""
    if not reference.startswith("@"):
        raise BadParameter(f"fixture references start with '@', got {reference!r}")
    name, _, rest = reference[1:].partition(":")
    args = [a for a in rest.split(",") if a] if rest else []
    return name, args


def resolve_reference(reference: str) -> Union[Complex, MultiGraph]:
    name, args = parse_reference(reference)
    return build_fixture(name, args)
