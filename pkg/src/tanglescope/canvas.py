"""Square-grid cell complexes, pictures and the cut order function.

Pixel sets are plain ints used as bitmasks over row-major pixel ids, so a
set of pixels doubles as one orientation of a bipartition of the canvas.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_PIXEL_CAP = 20
HARD_PIXEL_CAP = 32

_ORDER_CHUNK = 1 << 22


class CanvasSizeError(ValueError):
    """Pixel count exceeds the configured cap for exact analysis."""


class PictureError(ValueError):
    """Malformed picture data."""


@dataclass(frozen=True)
class Canvas:
    """A flat rectangular grid of square pixels joined by shared edges."""

    width: int
    height: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def npixels(self) -> int:
        return self.width * self.height

    @property
    def full_mask(self) -> int:
        return (1 << self.npixels) - 1

    def pixel_id(self, row: int, col: int) -> int:
        if not (0 <= row < self.height and 0 <= col < self.width):
            raise IndexError(f"pixel ({row},{col}) outside {self.width}x{self.height} canvas")
        return row * self.width + col


def build_grid_canvas(width: int, height: int, pixel_cap: int = DEFAULT_PIXEL_CAP) -> Canvas:
    """Build the grid canvas with horizontal and vertical neighbour edges.

    `pixel_cap` may be raised up to HARD_PIXEL_CAP (the bitmask width) for
    pictures that are still tractable for exhaustive analysis.
    """
    if width < 1 or height < 1:
        raise PictureError("canvas dimensions must be positive")
    cap = min(pixel_cap, HARD_PIXEL_CAP)
    if width * height > cap:
        raise CanvasSizeError(
            f"{width}x{height} = {width * height} pixels exceeds the pixel cap {cap}"
        )
    edges = []
    for r in range(height):
        for c in range(width):
            p = r * width + c
            if c + 1 < width:
                edges.append((p, p + 1))
            if r + 1 < height:
                edges.append((p, p + width))
    incident: list[list[int]] = [[] for _ in range(width * height)]
    for i, (p, q) in enumerate(edges):
        incident[p].append(i)
        incident[q].append(i)
    return Canvas(width, height, tuple(edges), tuple(tuple(v) for v in incident))


@dataclass(frozen=True)
class Picture:
    """A canvas together with an n-bit parameter vector per pixel."""

    canvas: Canvas
    n: int
    values: tuple[int, ...]


def attach_picture(canvas: Canvas, values, n: int) -> Picture:
    if n < 1:
        raise PictureError("parameter count n must be at least 1")
    values = tuple(int(v) for v in values)
    if len(values) != canvas.npixels:
        raise PictureError(
            f"expected {canvas.npixels} pixel values, got {len(values)}"
        )
    for v in values:
        if not 0 <= v < (1 << n):
            raise PictureError(f"pixel value {v:#x} does not fit in {n} bits")
    return Picture(canvas, n, values)


def edge_weight(picture: Picture, edge: int) -> int:
    """Hamming distance between the endpoint parameter vectors of an edge."""
    try:
        p, q = picture.canvas.edges[edge]
    except IndexError:
        raise PictureError(f"unknown edge id {edge}") from None
    return (picture.values[p] ^ picture.values[q]).bit_count()


def suggest_N(picture: Picture) -> int:
    """Smallest offset that keeps every per-edge contribution nonnegative."""
    if not picture.canvas.edges:
        return 0
    return max(edge_weight(picture, i) for i in range(len(picture.canvas.edges)))


def boundary(canvas: Canvas, A: int) -> frozenset[int]:
    """Edge ids with exactly one endpoint inside the pixel set A."""
    out = []
    for i, (p, q) in enumerate(canvas.edges):
        if ((A >> p) ^ (A >> q)) & 1:
            out.append(i)
    return frozenset(out)


@dataclass(frozen=True)
class WeightedCanvas:
    """Picture plus edge weighting and offset; owns the order function."""

    picture: Picture
    delta: tuple[int, ...]
    N: int
    _order_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @staticmethod
    def from_picture(picture: Picture, N: int | None = None) -> "WeightedCanvas":
        delta = tuple(edge_weight(picture, i) for i in range(len(picture.canvas.edges)))
        lo = max(delta) if delta else 0
        if N is None:
            N = lo
        if N < lo:
            raise PictureError(f"offset N={N} is below the maximum edge weight {lo}")
        return WeightedCanvas(picture, delta, N)

    @property
    def canvas(self) -> Canvas:
        return self.picture.canvas

    @property
    def npixels(self) -> int:
        return self.canvas.npixels

    @property
    def full_mask(self) -> int:
        return self.canvas.full_mask

    def order(self, A: int) -> int:
        """Sum of (N - delta) over the boundary edges of A."""
        total = 0
        for (p, q), d in zip(self.canvas.edges, self.delta):
            if ((A >> p) ^ (A >> q)) & 1:
                total += self.N - d
        return total

    def all_orders(self) -> np.ndarray:
        """Orders of every subset of the pixel set, indexed by bitmask."""
        cached = self._order_cache.get("orders")
        if cached is not None:
            return cached
        size = 1 << self.npixels
        orders = np.zeros(size, dtype=np.uint32)
        weights = [(p, q, self.N - d) for (p, q), d in zip(self.canvas.edges, self.delta)]
        pixels = sorted({p for p, q, w in weights if w} | {q for p, q, w in weights if w})
        for start in range(0, size, _ORDER_CHUNK):
            stop = min(start + _ORDER_CHUNK, size)
            masks = np.arange(start, stop, dtype=np.uint64)
            bits = {p: ((masks >> np.uint64(p)) & np.uint64(1)).astype(np.uint16)
                    for p in pixels}
            acc = np.zeros(stop - start, dtype=np.uint16)
            for p, q, w in weights:
                if w == 1:
                    acc += bits[p] ^ bits[q]
                elif w:
                    acc += (bits[p] ^ bits[q]) * np.uint16(w)
            orders[start:stop] = acc
        self._order_cache["orders"] = orders
        return orders
