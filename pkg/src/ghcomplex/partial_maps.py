"""Partial maps on {1..n} acting on the right.

A partial map of degree n sends each point of {1..n} either to a point
of {1..n} or to nothing.  Maps act on the right, so in a product f*g the
map f is applied first: x(f*g) = (xf)g, defined exactly when xf is
defined and lies in the domain of g.  The everywhere-undefined map is a
legitimate value and absorbs everything under composition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatch, ParseError

UNDEFINED_TOKEN = "."


@dataclass(frozen=True)
class PartialMap:
    """A partial self-map of {1..degree}; images[i-1] is i's image or None."""

    degree: int
    images: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"degree must be non-negative, got {self.degree}")
        if len(self.images) != self.degree:
            raise ValueError(
                f"expected {self.degree} image entries, got {len(self.images)}")
        for x, y in enumerate(self.images, start=1):
            if y is not None and not (isinstance(y, int) and 1 <= y <= self.degree):
                raise ValueError(f"image of {x} is {y!r}, not in 1..{self.degree}")

    def __call__(self, x: int):
        """Image of the point x (1-based), or None where undefined."""
        if not 1 <= x <= self.degree:
            raise ValueError(f"point {x} out of range 1..{self.degree}")
        return self.images[x - 1]

    def domain(self) -> frozenset:
        return frozenset(x for x in range(1, self.degree + 1)
                         if self.images[x - 1] is not None)

    def image_set(self) -> frozenset:
        return frozenset(y for y in self.images if y is not None)

    def rank(self) -> int:
        return len(self.image_set())

    def is_total(self) -> bool:
        return None not in self.images

    def is_empty(self) -> bool:
        return all(y is None for y in self.images)

    def __repr__(self):
        body = " ".join(UNDEFINED_TOKEN if y is None else str(y) for y in self.images)
        return f"PartialMap({self.degree}: {body})"


def identity_map(degree: int) -> PartialMap:
    return PartialMap(degree, tuple(range(1, degree + 1)))


def empty_map(degree: int) -> PartialMap:
    return PartialMap(degree, (None,) * degree)


def constant_map(degree: int, domain, value: int) -> PartialMap:
    """The map sending every point of `domain` to `value`, undefined elsewhere."""
    dom = frozenset(domain)
    return PartialMap(degree, tuple(value if x in dom else None
                                    for x in range(1, degree + 1)))


def total_map(images) -> PartialMap:
    """Total map from its image row; degree is the row length."""
    row = tuple(images)
    return PartialMap(len(row), row)


def compose(f: PartialMap, g: PartialMap) -> PartialMap:
    """f followed by g (right action): x(f*g) = (xf)g where both are defined."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"cannot compose degree {f.degree} with {g.degree}")
    out = []
    for y in f.images:
        out.append(None if y is None else g.images[y - 1])
    return PartialMap(f.degree, tuple(out))


def is_idempotent_map(f: PartialMap) -> bool:
    return compose(f, f) == f


# ---------------------------------------------------------------------------
# Text format: `degree N` on the first meaningful line, then one map per
# line as `name: t1 t2 ... tN` with each token an integer in 1..N or `.`
# for undefined.  `#` starts a comment anywhere on a line.
# ---------------------------------------------------------------------------

def parse_partial_maps(text: str):
    """Parse the partial-map file format; returns a list of (name, map) pairs."""
    degree = None
    maps = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise ParseError(f"line {lineno}: expected `degree N`, got {line!r}")
            try:
                degree = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad degree {parts[1]!r}") from None
            if degree < 0:
                raise ParseError(f"line {lineno}: degree must be non-negative")
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected `name: images`, got {line!r}")
        name, _, body = line.partition(":")
        name = name.strip()
        if not name:
            raise ParseError(f"line {lineno}: empty map name")
        if name in seen:
            raise ParseError(f"line {lineno}: duplicate map name {name!r}")
        seen.add(name)
        tokens = body.split()
        if len(tokens) != degree:
            raise ParseError(
                f"line {lineno}: map {name!r} has {len(tokens)} entries, "
                f"expected {degree}")
        images = []
        for tok in tokens:
            if tok == UNDEFINED_TOKEN:
                images.append(None)
                continue
            try:
                val = int(tok)
            except ValueError:
                raise ParseError(f"line {lineno}: bad token {tok!r}") from None
            if not 1 <= val <= degree:
                raise ParseError(
                    f"line {lineno}: image {val} out of range 1..{degree}")
            images.append(val)
        maps.append((name, PartialMap(degree, tuple(images))))
    if degree is None:
        raise ParseError("missing `degree N` header line")
    return maps


def format_partial_maps(named_maps, header: str | None = None) -> str:
    """Inverse of parse_partial_maps (up to comments and whitespace)."""
    named_maps = list(named_maps)
    if not named_maps:
        raise ValueError("nothing to format")
    degree = named_maps[0][1].degree
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append(f"degree {degree}")
    for name, pm in named_maps:
        if pm.degree != degree:
            raise DegreeMismatch("maps in one file must share a degree")
        body = " ".join(UNDEFINED_TOKEN if y is None else str(y) for y in pm.images)
        lines.append(f"{name}: {body}")
    return "\n".join(lines) + "\n"
