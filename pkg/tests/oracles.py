"""Independent re-derivations used to cross-check the package's answers.

Nothing here calls the package's own predicates: intersections are found by
solving 2x2 linear systems over ``fractions.Fraction`` (Cramer's rule),
point-in-polygon is parity ray casting, and drawing faces come from a
vertical-slab decomposition flooded across slab boundaries instead of
half-edge tracing.  Slower and dumber on purpose.
"""

from bisect import bisect_left
from fractions import Fraction
from itertools import combinations


def xy(p):
    if hasattr(p, "x"):
        return (Fraction(p.x), Fraction(p.y))
    return (Fraction(p[0]), Fraction(p[1]))


def cross_params(a, b, c, d):
    """(t, u) with a + t(b-a) = c + u(d-c), or None for parallel segments."""
    (ax, ay), (bx, by) = xy(a), xy(b)
    (cx, cy), (dx, dy) = xy(c), xy(d)
    det = (bx - ax) * (cy - dy) - (by - ay) * (cx - dx)
    if det == 0:
        return None
    t = ((cx - ax) * (cy - dy) - (cy - ay) * (cx - dx)) / det
    u = ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)) / det
    return t, u


def _param_on_line(a, b, p):
    """Parameter of p along a->b assuming collinearity (None if off the line)."""
    (ax, ay), (bx, by), (px, py) = xy(a), xy(b), xy(p)
    if (bx - ax) * (py - ay) != (by - ay) * (px - ax):
        return None
    if bx != ax:
        return (px - ax) / (bx - ax)
    return (py - ay) / (by - ay)


def open_segment_hits_closed(a, b, c, d) -> bool:
    """Open (a, b) versus closed [c, d], decided by parameters."""
    params = cross_params(a, b, c, d)
    if params is not None:
        t, u = params
        return 0 < t < 1 and 0 <= u <= 1
    tc = _param_on_line(a, b, c)
    if tc is None:
        return False
    td = _param_on_line(a, b, d)
    lo, hi = min(tc, td), max(tc, td)
    return hi > 0 and lo < 1


def segment_meets_polygon(a, b, vertices) -> bool:
    """Does the open segment meet the closed polygon?  Assumes a, b outside."""
    k = len(vertices)
    return any(
        open_segment_hits_closed(a, b, vertices[i], vertices[(i + 1) % k])
        for i in range(k)
    )


def point_in_polygon(q, vertices) -> int:
    """+1 inside, 0 on the boundary, -1 outside; parity of a +x ray."""
    qx, qy = xy(q)
    k = len(vertices)
    for i in range(k):
        c, d = vertices[i], vertices[(i + 1) % k]
        t = _param_on_line(c, d, (qx, qy))
        if t is not None and 0 <= t <= 1:
            return 0
    odd = False
    for i in range(k):
        (cx, cy), (dx, dy) = xy(vertices[i]), xy(vertices[(i + 1) % k])
        if (cy <= qy) != (dy <= qy):
            x_hit = cx + (qy - cy) * (dx - cx) / (dy - cy)
            if x_hit > qx:
                odd = not odd
    return 1 if odd else -1


class SlabOracle:
    """Faces of a straight-line drawing, by slabs and flood fill.

    Cells are the gaps between pieces inside each vertical slab (plus one
    cell left of everything and one right of everything); cells become one
    face when an unblocked stretch of a slab boundary joins them.
    """

    def __init__(self, drawing):
        points = [xy(p) for p in drawing.points]
        segs = [(points[i], points[j]) for i, j in sorted(drawing.edges)]
        nodes = set(points)
        cuts = [{Fraction(0), Fraction(1)} for _ in segs]
        for (i, (a, b)), (j, (c, d)) in combinations(enumerate(segs), 2):
            params = cross_params(a, b, c, d)
            if params is None:
                continue
            t, u = params
            if 0 < t < 1 and 0 < u < 1:
                cuts[i].add(t)
                cuts[j].add(u)
                ax, ay = a
                bx, by = b
                nodes.add((ax + t * (bx - ax), ay + t * (by - ay)))
        self.pieces = []
        for (a, b), ts in zip(segs, cuts):
            (ax, ay), (bx, by) = a, b
            stops = sorted(ts)
            for t1, t2 in zip(stops, stops[1:]):
                p1 = (ax + t1 * (bx - ax), ay + t1 * (by - ay))
                p2 = (ax + t2 * (bx - ax), ay + t2 * (by - ay))
                self.pieces.append((p1, p2))
        self.nodes = nodes
        self.xs = sorted({x for x, _ in nodes})
        # spanning[j] = pieces crossing slab (xs[j], xs[j+1]), bottom to top
        self.spanning = []
        for j in range(len(self.xs) - 1):
            mid = (self.xs[j] + self.xs[j + 1]) / 2
            here = [pc for pc in self.pieces if self._spans(pc, j)]
            here.sort(key=lambda pc: self._y_at(pc, mid))
            self.spanning.append(here)
        self._flood()

    def _spans(self, piece, j):
        (x1, _), (x2, _) = piece
        return min(x1, x2) <= self.xs[j] and max(x1, x2) >= self.xs[j + 1] and x1 != x2

    @staticmethod
    def _y_at(piece, x):
        (x1, y1), (x2, y2) = piece
        return y1 + (x - x1) * (y2 - y1) / (x2 - x1)

    # Cells are keyed (slab, gap); slab -1 and slab len(xs)-1 are the two
    # infinite outer slabs with a single gap 0.
    def _cell(self, slab, x, y):
        # Rank the query against each piece at the query's own x: piece order
        # is constant across the slab, but a fixed height y is not.
        if slab < 0 or slab >= len(self.xs) - 1:
            return (min(slab, len(self.xs) - 1), 0)
        gap = sum(1 for pc in self.spanning[slab] if self._y_at(pc, x) < y)
        return (slab, gap)

    def _cell_at_boundary(self, slab, x0, y):
        """Cell of the open slab touched at height y on its boundary x0."""
        if slab < 0 or slab >= len(self.xs) - 1:
            return (min(slab, len(self.xs) - 1), 0)
        gap = sum(1 for pc in self.spanning[slab] if self._y_at(pc, x0) < y)
        return (slab, gap)

    def _blockers_on_line(self, x0):
        """Points and closed y-intervals of the drawing on the line x = x0."""
        points = {y for x, y in self.nodes if x == x0}
        intervals = []
        for (x1, y1), (x2, y2) in self.pieces:
            if x1 == x2 == x0:
                intervals.append((min(y1, y2), max(y1, y2)))
            elif min(x1, x2) < x0 < max(x1, x2):
                points.add(self._y_at(((x1, y1), (x2, y2)), x0))
        return sorted(points), sorted(intervals)

    def _flood(self):
        parent = {}

        def find(c):
            parent.setdefault(c, c)
            while parent[c] != c:
                parent[c] = parent[parent[c]]
                c = parent[c]
            return c

        def union(c1, c2):
            r1, r2 = find(c1), find(c2)
            if r1 != r2:
                parent[r1] = r2

        for slab in range(-1, len(self.xs)):
            if 0 <= slab < len(self.xs) - 1:
                for gap in range(len(self.spanning[slab]) + 1):
                    find((slab, gap))
            else:
                find((min(slab, len(self.xs) - 1), 0))
        for i, x0 in enumerate(self.xs):
            points, intervals = self._blockers_on_line(x0)
            stops = []  # closed blocked stretches, merged
            for y in points:
                stops.append((y, y))
            stops.extend(intervals)
            stops.sort()
            merged = []
            for lo, hi in stops:
                if merged and lo <= merged[-1][1]:
                    merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
                else:
                    merged.append((lo, hi))
            free = []  # sample heights, one per unblocked stretch
            if not merged:
                free.append(Fraction(0))
            else:
                free.append(merged[0][0] - 1)
                for (_, hi1), (lo2, _) in zip(merged, merged[1:]):
                    free.append((hi1 + lo2) / 2)
                free.append(merged[-1][1] + 1)
            for y in free:
                union(
                    self._cell_at_boundary(i - 1, x0, y),
                    self._cell_at_boundary(i, x0, y),
                )
        self._find = find
        roots = {}
        self.outer_root = find((-1, 0))
        for cell in list(parent):
            roots.setdefault(find(cell), []).append(cell)
        self.face_roots = sorted(roots)

    @property
    def face_count(self):
        return len(self.face_roots)

    @property
    def bounded_face_count(self):
        return len(self.face_roots) - 1

    def locate(self, q):
        """Face root of a query point assumed off the drawing."""
        qx, qy = xy(q)
        idx = bisect_left(self.xs, qx)
        if idx < len(self.xs) and self.xs[idx] == qx:
            return self._find(self._cell_at_boundary(idx - 1, qx, qy))
        return self._find(self._cell(idx - 1, qx, qy))

    def complexities(self):
        """Piece-side count per face root (a side on both sides counts twice)."""
        out = {root: 0 for root in self.face_roots}
        for piece in self.pieces:
            (x1, y1), (x2, y2) = piece
            if x1 == x2:
                i = self.xs.index(x1)
                mid_y = (y1 + y2) / 2
                left = self._find(self._cell_at_boundary(i - 1, x1, mid_y))
                right = self._find(self._cell_at_boundary(i, x1, mid_y))
                out[left] += 1
                out[right] += 1
            else:
                slab = self.xs.index(min(x1, x2))
                mid = (self.xs[slab] + self.xs[slab + 1]) / 2
                below = sum(
                    1
                    for other in self.spanning[slab]
                    if self._y_at(other, mid) < self._y_at(piece, mid)
                )
                out[self._find((slab, below))] += 1
                out[self._find((slab, below + 1))] += 1
        return out

    def nonedge_faces(self, p, q):
        """Face roots the open segment p-q passes through."""
        p, q = xy(p), xy(q)
        ts = {Fraction(0), Fraction(1)}
        for piece in self.pieces:
            params = cross_params(p, q, *piece)
            if params is not None:
                t, u = params
                if 0 < t < 1 and 0 <= u <= 1:
                    ts.add(t)
        for node in self.nodes:
            t = _param_on_line(p, q, node)
            if t is not None and 0 < t < 1:
                ts.add(t)
        stops = sorted(ts)
        (px, py), (qx, qy) = p, q
        roots = set()
        for t1, t2 in zip(stops, stops[1:]):
            tm = (t1 + t2) / 2
            roots.add(self.locate((px + tm * (qx - px), py + tm * (qy - py))))
        return roots
