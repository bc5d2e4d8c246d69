import pytest

from obsrep import Point, Polygon, Scene


def pts(*pairs):
    return tuple(Point(x, y) for x, y in pairs)


def poly(*pairs):
    return Polygon(pts(*pairs))


@pytest.fixture
def hexagon_scene():
    """Three points around a hexagonal obstacle.

    Vertex 1 sees vertices 2 and 3; the pair 2-3 is blocked by the hexagon.
    """
    return Scene(
        pts((-2, 0), (4, 6), (6, -5)),
        (poly((0, 0), (2, -2), (5, -2), (7, 0), (5, 2), (2, 2)),),
    )


@pytest.fixture
def square_scene():
    """Four corners of a big square with a small box in the lower-left.

    The box blocks exactly one diagonal (corner 1 to corner 3).
    """
    return Scene(
        pts((0, 0), (10, 0), (10, 10), (0, 10)),
        (poly((3, 2), (5, 2), (5, 4), (3, 4)),),
    )
