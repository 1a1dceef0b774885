"""Objects and morphisms of the one-color-sequence Soergel calculus.

Objects are finite sequences of colors (integers); a color ``j`` may be
used on ``n`` ambient strands when ``1 <= j <= n-1``.  Morphisms are
Q(i)-linear combinations of *words*: stacks of slices, each slice a
horizontal row of generator atoms, read bottom to top.

Words are compared modulo the interchange law: the stored key is the
"gravity" normal form in which every atom sits in the lowest slice its
input edges (and planarity) allow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from foamcat.errors import ColorError, CompositionError, InhomogeneousError, UndefinedDegreeError
from foamcat.scalars import GaussRational, ONE

ColorSeq = tuple
# Relation labels, grouped the way the defining list groups them.
ISOTOPY_LABELS = ("adj", "curldot", "v3rot", "v4rot", "v6rot")
ONE_COLOR_LABELS = ("dumbrot", "lollipop", "deltam")
DISTANT_LABELS = ("reid2dist", "slidedotdist", "slide3v")
ADJACENT_LABELS = ("dot6v", "reid3", "dumbsq", "slidenext")
THREE_COLOR_LABELS = ("slide6v", "slide4v", "dumbdumbsquare")
RELATION_LABELS = (
    ISOTOPY_LABELS
    + ONE_COLOR_LABELS
    + DISTANT_LABELS
    + ADJACENT_LABELS
    + THREE_COLOR_LABELS
)


def adjacent(i: int, j: int) -> bool:
    return abs(i - j) == 1

def distant(i: int, j: int) -> bool:
    return abs(i - j) > 1


@dataclass(frozen=True)
class Atom:
    """One generator occurrence: identity, dot, trivalent, cap/cup, 4- or 6-valent.

    kind is one of ``id sd ed m s cap cup x w``; ``colors`` holds one
    color except for ``x``/``w`` which hold the ordered pair.
    """

    kind: str
    colors: tuple

    _ARITY = {
        "id": (1, 1), "sd": (0, 1), "ed": (1, 0), "m": (2, 1), "s": (1, 2),
        "cap": (2, 0), "cup": (0, 2), "x": (2, 2), "w": (3, 3),
    }

    def __post_init__(self):
        if self.kind not in self._ARITY:
            raise ColorError(f"unknown atom kind {self.kind!r}")
        cs = self.colors
        if any(not isinstance(c, int) or c < 1 for c in cs):
            raise ColorError(f"colors must be positive integers, got {cs}")
        if self.kind in ("x", "w"):
            if len(cs) != 2:
                raise ColorError(f"{self.kind} atom needs two colors")
            if self.kind == "x" and not distant(*cs):
                raise ColorError(f"4-valent vertex needs distant colors, got {cs}")
            if self.kind == "w" and not adjacent(*cs):
                raise ColorError(f"6-valent vertex needs adjacent colors, got {cs}")
        elif len(cs) != 1:
            raise ColorError(f"{self.kind} atom needs one color")

    @property
    def dom(self) -> ColorSeq:
        i = self.colors[0]
        if self.kind in ("id", "ed", "s"):
            return (i,)
        if self.kind in ("m", "cap"):
            return (i, i)
        if self.kind == "x":
            return self.colors
        if self.kind == "w":
            j = self.colors[1]
            return (i, j, i)
        return ()

    @property
    def cod(self) -> ColorSeq:
        i = self.colors[0]
        if self.kind in ("id", "sd", "m"):
            return (i,)
        if self.kind in ("s", "cup"):
            return (i, i)
        if self.kind == "x":
            return (self.colors[1], self.colors[0])
        if self.kind == "w":
            j = self.colors[1]
            return (j, i, j)
        return ()

    @property
    def degree(self) -> int:
        if self.kind in ("sd", "ed"):
            return 1
        if self.kind in ("m", "s"):
            return -1
        return 0

    def flip(self) -> "Atom":
        """Vertical reflection (swap bottom and top)."""
        table = {"sd": "ed", "ed": "sd", "m": "s", "s": "m", "cap": "cup", "cup": "cap"}
        if self.kind in table:
            return Atom(table[self.kind], self.colors)
        if self.kind in ("x", "w"):
            return Atom(self.kind, (self.colors[1], self.colors[0]))
        return self

    def mirror(self) -> "Atom":
        """Horizontal (left-right) reflection."""
        if self.kind == "x":
            return Atom("x", (self.colors[1], self.colors[0]))
        return self

    def map_colors(self, fn) -> "Atom":
        return Atom(self.kind, tuple(fn(c) for c in self.colors))

    def __str__(self):
        return " ".join([self.kind] + [str(c) for c in self.colors])


def Id(j): return Atom("id", (j,))
def Sd(j): return Atom("sd", (j,))
def Ed(j): return Atom("ed", (j,))
def M(j): return Atom("m", (j,))
def S(j): return Atom("s", (j,))
def Cap(j): return Atom("cap", (j,))
def Cup(j): return Atom("cup", (j,))
def X4(i, j): return Atom("x", (i, j))
def W6(i, j): return Atom("w", (i, j))


def _slice_dom(atoms) -> ColorSeq:
    out = ()
    for a in atoms:
        out = out + a.dom
    return out


def _slice_cod(atoms) -> ColorSeq:
    out = ()
    for a in atoms:
        out = out + a.cod
    return out


class DiagramWord:
    """A stack of slices, read bottom to top.

    Equality and hashing go through the gravity normal form, so two
    presentations of the same progressive diagram compare equal.
    """

    __slots__ = ("dom", "cod", "slices", "_canon")

    def __init__(self, dom: Sequence[int], slices: Iterable[Iterable[Atom]] = (), cod=None):
        dom = tuple(dom)
        slices = tuple(tuple(s) for s in slices)
        bound = dom
        for k, s in enumerate(slices):
            need = _slice_dom(s)
            if need != bound:
                raise CompositionError(
                    f"slice {k} expects domain {need}, boundary is {bound}"
                )
            bound = _slice_cod(s)
        if cod is None:
            cod = bound
        elif tuple(cod) != bound:
            raise CompositionError(f"declared codomain {tuple(cod)} != computed {bound}")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", tuple(cod))
        object.__setattr__(self, "slices", slices)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("DiagramWord is immutable")

    @classmethod
    def identity(cls, seq) -> "DiagramWord":
        return cls(tuple(seq), ())

    @property
    def atoms(self):
        return [a for s in self.slices for a in s if a.kind != "id"]

    @property
    def degree(self) -> int:
        return sum(a.degree for a in self.atoms)

    def then(self, other: "DiagramWord") -> "DiagramWord":
        if self.cod != other.dom:
            raise CompositionError(
                f"cannot stack: codomain {self.cod} != domain {other.dom}"
            )
        return DiagramWord(self.dom, self.slices + other.slices)

    def tensor(self, other: "DiagramWord") -> "DiagramWord":
        h = max(len(self.slices), len(other.slices))
        left = _pad(self, h)
        right = _pad(other, h)
        slices = tuple(l + r for l, r in zip(left, right))
        return DiagramWord(self.dom + other.dom, slices)

    def flip(self) -> "DiagramWord":
        slices = tuple(tuple(a.flip() for a in s) for s in reversed(self.slices))
        return DiagramWord(self.cod, slices)

    def mirror(self, color_map=None) -> "DiagramWord":
        fn = color_map or (lambda c: c)
        slices = tuple(
            tuple(a.mirror().map_colors(fn) for a in reversed(s)) for s in self.slices
        )
        return DiagramWord(tuple(fn(c) for c in reversed(self.dom)), slices)

    def map_colors(self, fn) -> "DiagramWord":
        slices = tuple(tuple(a.map_colors(fn) for a in s) for s in self.slices)
        return DiagramWord(tuple(fn(c) for c in self.dom), slices)

    def max_color(self) -> int:
        best = 0
        for c in self.dom:
            best = max(best, c)
        for a in self.atoms:
            best = max(best, max(a.colors))
        return best

    def canonical(self) -> tuple:
        if self._canon is None:
            object.__setattr__(self, "_canon", _gravity(self))
        return self._canon

    def canonical_word(self) -> "DiagramWord":
        return DiagramWord(self.dom, self.canonical())

    def __eq__(self, other):
        if not isinstance(other, DiagramWord):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self.canonical() == other.canonical()
        )

    def __hash__(self):
        return hash((self.dom, self.cod, self.canonical()))

    def __str__(self):
        if not self.slices:
            return f"id on {self.dom}"
        return " ; ".join("[" + ", ".join(map(str, s)) + "]" for s in self.slices)

    def __repr__(self):
        return f"<DiagramWord {self.dom} -> {self.cod}: {self}>"


def _pad(word: DiagramWord, height: int):
    slices = list(word.slices)
    bound = word.cod
    while len(slices) < height:
        slices.append(tuple(Id(c) for c in bound))
    return slices


def _gravity(word: DiagramWord) -> tuple:
    """Drop every atom into the lowest slice planarity allows; fixpoint is canonical."""
    slices = [list(s) for s in word.slices]
    changed = True
    while changed:
        changed = False
        for k in range(1, len(slices)):
            i = 0
            while i < len(slices[k]):
                if _try_drop(slices, k, i, word.dom):
                    changed = True
                else:
                    i += 1
        slices = [s for s in slices if any(a.kind != "id" for a in s)]
    return tuple(tuple(s) for s in slices)


def _try_drop(slices, k, i, dom) -> bool:
    """Move atom ``slices[k][i]`` into slice ``k-1`` if its footprint there is all ids."""
    atom = slices[k][i]
    if atom.kind == "id":
        return False
    below = slices[k - 1]
    # position of the atom's input interval within slice k's domain
    p = sum(len(a.dom) for a in slices[k][:i])
    nin = len(atom.dom)
    # map codomain positions of `below` back onto its atoms
    spans = []  # (atom index, cod start, cod end)
    q = 0
    for bi, b in enumerate(below):
        spans.append((bi, q, q + len(b.cod)))
        q += len(b.cod)
    total = q
    if nin > 0:
        touching = [s for s in spans if s[1] < p + nin and p < s[2]]
        if any(below[s[0]].kind != "id" for s in touching):
            return False
        lo = min(s[0] for s in touching)
        hi = max(s[0] for s in touching)
        # replace those id atoms by the dropped atom; leave ids over its codomain above
        new_below = below[:lo] + [atom] + below[hi + 1 :]
        repl = [Id(c) for c in atom.cod]
        new_here = slices[k][:i] + repl + slices[k][i + 1 :]
    else:
        # zero-input atom: needs a clean vertical gap at position p
        if p > total:
            return False
        at_boundary = None
        for bi, b in enumerate(below):
            s = spans[bi]
            if s[1] < p < s[2]:
                if b.kind != "id":
                    return False  # strictly inside a real atom's outputs
                at_boundary = ("inside_id", bi)
                break
            if s[2] == p:
                at_boundary = ("after", bi)
        if at_boundary is None:
            at_boundary = ("after", -1)
        kind, bi = at_boundary
        if kind == "inside_id":
            return False  # cannot split an identity strand
        new_below = below[: bi + 1] + [atom] + below[bi + 1 :]
        repl = [Id(c) for c in atom.cod]
        new_here = slices[k][:i] + repl + slices[k][i + 1 :]
    slices[k - 1] = new_below
    slices[k] = new_here
    return True


class SoergelMorphism:
    """Formal Q(i)-combination of words sharing a domain and codomain."""

    __slots__ = ("dom", "cod", "terms")

    def __init__(self, dom, cod, terms=None):
        dom = tuple(dom)
        cod = tuple(cod)
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for word, coeff in items:
                coeff = GaussRational.coerce(coeff)
                if not coeff:
                    continue
                if word.dom != dom or word.cod != cod:
                    raise CompositionError(
                        f"term {word.dom}->{word.cod} does not match {dom}->{cod}"
                    )
                key = word.canonical_word()
                prev = clean.get(key)
                new = coeff if prev is None else prev + coeff
                if new:
                    clean[key] = new
                else:
                    del clean[key]
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SoergelMorphism is immutable")

    @classmethod
    def from_word(cls, word: DiagramWord, coeff=1) -> "SoergelMorphism":
        return cls(word.dom, word.cod, [(word, coeff)])

    @classmethod
    def identity(cls, seq) -> "SoergelMorphism":
        return cls.from_word(DiagramWord.identity(seq))

    @classmethod
    def zero(cls, dom, cod) -> "SoergelMorphism":
        return cls(dom, cod, {})

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, coeff) -> "SoergelMorphism":
        coeff = GaussRational.coerce(coeff)
        return SoergelMorphism(
            self.dom, self.cod, {w: c * coeff for w, c in self.terms.items()}
        )

    def __add__(self, other):
        if self.dom != other.dom or self.cod != other.cod:
            raise CompositionError("sum of morphisms with different boundaries")
        out = dict(self.terms)
        for w, c in other.terms.items():
            new = out.get(w, GaussRational(0)) + c
            if new:
                out[w] = new
            else:
                out.pop(w, None)
        return SoergelMorphism(self.dom, self.cod, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def then(self, other: "SoergelMorphism") -> "SoergelMorphism":
        """``self`` applied first (bottom), then ``other``."""
        if self.cod != other.dom:
            raise CompositionError(
                f"compose: codomain {self.cod} != domain {other.dom}"
            )
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1.then(w2)
                key = word.canonical_word()
                new = out.get(key, GaussRational(0)) + c1 * c2
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return SoergelMorphism(self.dom, other.cod, out)

    def tensor(self, other: "SoergelMorphism") -> "SoergelMorphism":
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1.tensor(w2)
                key = word.canonical_word()
                new = out.get(key, GaussRational(0)) + c1 * c2
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return SoergelMorphism(self.dom + other.dom, self.cod + other.cod, out)

    def flip(self) -> "SoergelMorphism":
        return SoergelMorphism(
            self.cod, self.dom, [(w.flip(), c) for w, c in self.terms.items()]
        )

    def mirror(self, color_map=None) -> "SoergelMorphism":
        fn = color_map or (lambda c: c)
        return SoergelMorphism(
            tuple(fn(c) for c in reversed(self.dom)),
            tuple(fn(c) for c in reversed(self.cod)),
            [(w.mirror(color_map), c) for w, c in self.terms.items()],
        )

    def degree(self) -> int:
        if not self.terms:
            raise UndefinedDegreeError("degree of the zero morphism is undefined")
        degs = {w: w.degree for w in self.terms}
        if len(set(degs.values())) > 1:
            raise InhomogeneousError(
                "morphism mixes word degrees", parts=sorted(set(degs.values()))
            )
        return next(iter(degs.values()))

    def max_color(self) -> int:
        best = max(self.dom, default=0)
        best = max(best, max(self.cod, default=0))
        for w in self.terms:
            best = max(best, w.max_color())
        return best

    def __eq__(self, other):
        if not isinstance(other, SoergelMorphism):
            return NotImplemented
        return (
            self.dom == other.dom and self.cod == other.cod and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.dom, self.cod, frozenset(self.terms.items())))

    def __repr__(self):
        return f"<SoergelMorphism {self.dom}->{self.cod}, {len(self.terms)} terms>"


def compose(f: SoergelMorphism, g: SoergelMorphism) -> SoergelMorphism:
    """f applied first, matching the bottom-to-top reading."""
    return f.then(g)


def tensor(f: SoergelMorphism, g: SoergelMorphism) -> SoergelMorphism:
    return f.tensor(g)


def degree(w) -> int:
    return w.degree if isinstance(w, DiagramWord) else w.degree()


def word(dom, *slices) -> DiagramWord:
    return DiagramWord(tuple(dom), slices)


@dataclass(frozen=True)
class RelationInstance:
    """One defining relation at one color assignment, both sides encoded."""

    label: str
    colors: tuple  # (("b", 1), ...) ordered role/color pairs
    variant: str
    lhs: SoergelMorphism
    rhs: SoergelMorphism

    def __post_init__(self):
        if self.lhs.dom != self.rhs.dom or self.lhs.cod != self.rhs.cod:
            raise CompositionError(f"{self.label}: sides have different boundaries")
        degs = set()
        for side in (self.lhs, self.rhs):
            for w in side.terms:
                degs.add(w.degree)
        if len(degs) > 1:
            raise InhomogeneousError(
                f"{self.label}: sides are not degree-homogeneous", parts=sorted(degs)
            )

    @property
    def color_dict(self):
        return dict(self.colors)

    def key(self):
        return (self.label, self.colors, self.variant)

    def __str__(self):
        cs = ",".join(f"{r}={c}" for r, c in self.colors)
        v = f"/{self.variant}" if self.variant else ""
        return f"{self.label}({cs}){v}"


def _inst(label, colors, variant, lhs, rhs) -> RelationInstance:
    return RelationInstance(label, tuple(colors), variant, lhs, rhs)


def _one_color_instances(j):
    out = []
    line = SoergelMorphism.identity((j,))
    # adj: both zigzags equal the straight line
    zig_l = word((j,), [Id(j), Cup(j)], [Cap(j), Id(j)])
    zig_r = word((j,), [Cup(j), Id(j)], [Id(j), Cap(j)])
    out.append(_inst("adj", [("j", j)], "left", SoergelMorphism.from_word(zig_l), line))
    out.append(_inst("adj", [("j", j)], "right", SoergelMorphism.from_word(zig_r), line))
    # curldot: dotted curls equal the end dot
    enddot = SoergelMorphism.from_word(word((j,), [Ed(j)]))
    curl_l = word((j,), [Sd(j), Id(j)], [Cap(j)])
    curl_r = word((j,), [Id(j), Sd(j)], [Cap(j)])
    out.append(_inst("curldot", [("j", j)], "left", SoergelMorphism.from_word(curl_l), enddot))
    out.append(_inst("curldot", [("j", j)], "right", SoergelMorphism.from_word(curl_r), enddot))
    # v3rot: bent split equals merge
    merge = SoergelMorphism.from_word(word((j, j), [M(j)]))
    rot_l = word((j, j), [S(j), Id(j)], [Id(j), Cap(j)])
    rot_r = word((j, j), [Id(j), S(j)], [Cap(j), Id(j)])
    out.append(_inst("v3rot", [("j", j)], "left", SoergelMorphism.from_word(rot_l), merge))
    out.append(_inst("v3rot", [("j", j)], "right", SoergelMorphism.from_word(rot_r), merge))
    # dumbrot: vertical barbell equals horizontal barbell
    vert = word((), [Sd(j)], [Ed(j)])
    horiz = word((), [Cup(j)], [Ed(j), Ed(j)])
    out.append(
        _inst("dumbrot", [("j", j)], "", SoergelMorphism.from_word(vert), SoergelMorphism.from_word(horiz))
    )
    # lollipop: capped split is zero
    lolli = word((j,), [S(j)], [Cap(j)])
    out.append(
        _inst("lollipop", [("j", j)], "", SoergelMorphism.from_word(lolli), SoergelMorphism.zero((j,), ()))
    )
    # deltam: barbell left + barbell right = 2 * broken strand
    barb_l = word((j,), [Sd(j), Id(j)], [Ed(j), Id(j)])
    barb_r = word((j,), [Id(j), Sd(j)], [Id(j), Ed(j)])
    broken = word((j,), [Ed(j)], [Sd(j)])
    lhs = SoergelMorphism.from_word(barb_l) + SoergelMorphism.from_word(barb_r)
    out.append(_inst("deltam", [("j", j)], "", lhs, SoergelMorphism.from_word(broken, 2)))
    return out


def _distant_instances(i, j):
    out = []
    cols = [("i", i), ("j", j)]
    # v4rot: crossing with either strand bent around equals the crossing
    xij = SoergelMorphism.from_word(word((i, j), [X4(i, j)]))
    rot_l = word(
        (i, j),
        [Cup(j), Id(i), Id(j)],
        [Id(j), X4(j, i), Id(j)],
        [Id(j), Id(i), Cap(j)],
    )
    rot_r = word(
        (i, j),
        [Id(i), Id(j), Cup(i)],
        [Id(i), X4(j, i), Id(i)],
        [Cap(i), Id(j), Id(i)],
    )
    out.append(_inst("v4rot", cols, "left", SoergelMorphism.from_word(rot_l), xij))
    out.append(_inst("v4rot", cols, "right", SoergelMorphism.from_word(rot_r), xij))
    # reid2dist: double crossing equals parallel strands
    double = word((i, j), [X4(i, j)], [X4(j, i)])
    out.append(
        _inst("reid2dist", cols, "", SoergelMorphism.from_word(double), SoergelMorphism.identity((i, j)))
    )
    # slidedotdist: a dotted strand slides through the crossing
    lhs = word((j,), [Sd(i), Id(j)], [X4(i, j)])
    rhs = word((j,), [Id(j), Sd(i)])
    out.append(
        _inst("slidedotdist", cols, "", SoergelMorphism.from_word(lhs), SoergelMorphism.from_word(rhs))
    )
    # slide3v: a split vertex slides through the distant strand
    lhs = word(
        (i, j),
        [S(i), Id(j)],
        [Id(i), X4(i, j)],
        [X4(i, j), Id(i)],
    )
    rhs = word((i, j), [X4(i, j)], [Id(j), S(i)])
    out.append(
        _inst("slide3v", cols, "", SoergelMorphism.from_word(lhs), SoergelMorphism.from_word(rhs))
    )
    return out


def _dot6v_bottom(b, r):
    """Six-valent vertex fed a dotted middle strand = merge-dots + cap-cup-dot."""
    lhs = word((b, b), [Id(b), Sd(r), Id(b)], [W6(b, r)])
    mergedots = word((b, b), [M(b)], [Sd(r), Id(b), Sd(r)])
    capcupdot = word((b, b), [Cap(b)], [Cup(r)], [Id(r), Sd(b), Id(r)])
    return (
        SoergelMorphism.from_word(lhs),
        SoergelMorphism.from_word(mergedots) + SoergelMorphism.from_word(capcupdot),
    )


def _adjacent_instances(b, r):
    out = []
    cols = [("b", b), ("r", r)]
    # v6rot: six-valent vertex with a leg bent on either side
    w6 = SoergelMorphism.from_word(word((b, r, b), [W6(b, r)]))
    rot_l = word(
        (b, r, b),
        [Cup(r), Id(b), Id(r), Id(b)],
        [Id(r), W6(r, b), Id(b)],
        [Id(r), Id(b), Id(r), Cap(b)],
    )
    rot_r = word(
        (b, r, b),
        [Id(b), Id(r), Id(b), Cup(r)],
        [Id(b), W6(r, b), Id(r)],
        [Cap(b), Id(r), Id(b), Id(r)],
    )
    out.append(_inst("v6rot", cols, "left", SoergelMorphism.from_word(rot_l), w6))
    out.append(_inst("v6rot", cols, "right", SoergelMorphism.from_word(rot_r), w6))
    # dot6v in both vertical orientations
    lhs, rhs = _dot6v_bottom(b, r)
    out.append(_inst("dot6v", cols, "bottom", lhs, rhs))
    out.append(_inst("dot6v", cols, "top", lhs.flip(), rhs.flip()))
    # reid3: stacked six-valent vertices = identity + broken-strand dumbbell
    lhs = word((b, r, b), [W6(b, r)], [W6(r, b)])
    dumb = word(
        (b, r, b),
        [Id(b), Ed(r), Id(b)],
        [M(b)],
        [S(b)],
        [Id(b), Sd(r), Id(b)],
    )
    rhs = SoergelMorphism.identity((b, r, b)) + SoergelMorphism.from_word(dumb)
    out.append(_inst("reid3", cols, "", SoergelMorphism.from_word(lhs), rhs))
    # dumbsq: the interlocked barbell square and its quarter-turn
    out.append(_inst("dumbsq", cols, "", _arch_chain([b, r]), _arch_chain([r, b])))
    # slidenext: sliding the other color's barbell across a strand
    def barb_left(c, line):
        return word((line,), [Sd(c), Id(line)], [Ed(c), Id(line)])
    def barb_right(c, line):
        return word((line,), [Id(line), Sd(c)], [Id(line), Ed(c)])
    half = GaussRational.coerce(1) / 2
    lhs = SoergelMorphism.from_word(barb_left(r, b)) - SoergelMorphism.from_word(barb_right(r, b))
    rhs = SoergelMorphism.from_word(barb_right(b, b), half) - SoergelMorphism.from_word(
        barb_left(b, b), half
    )
    out.append(_inst("slidenext", cols, "", lhs, rhs))
    return out


def _arch_chain(colors) -> SoergelMorphism:
    """Chain of interlocked dotted arches, colors[0] lowest; empty boundary.

    Each consecutive pair of arches is linked: arch k is a cup (tips
    pointing up, killed by end dots) when k is even, a cap built from
    start dots when k is odd, and tip 2k+1 of arch k sits inside arch
    k+1.  Two colors give the two-color barbell square, three colors the
    three-color double square.
    """
    if len(colors) == 2:
        b, r = colors
        wd = word(
            (),
            [Cup(b)],
            [Id(b), Sd(r), Id(b)],
            [Ed(b), Id(r), Id(b)],
            [Id(r), Ed(b)],
            [Id(r), Sd(r)],
            [Cap(r)],
        )
        return SoergelMorphism.from_word(wd)
    if len(colors) == 3:
        b, r, y = colors
        wd = word(
            (),
            [Cup(b)],
            [Id(b), Id(b), Cup(y)],
            [Id(b), Sd(r), Id(b), Id(y), Id(y)],
            [Id(b), Id(r), Id(b), Id(y), Sd(r), Id(y)],
            [Ed(b), Id(r), Ed(b), Id(y), Id(r), Id(y)],
            [Id(r), Ed(y), Id(r), Ed(y)],
            [Cap(r)],
        )
        return SoergelMorphism.from_word(wd)
    raise ColorError("arch chains are built for two or three colors")


def _slide6v_instances(b, r, y):
    cols = [("b", b), ("r", r), ("y", y)]
    lhs = word(
        (y, b, r, b),
        [X4(y, b), Id(r), Id(b)],
        [Id(b), X4(y, r), Id(b)],
        [Id(b), Id(r), X4(y, b)],
        [W6(b, r), Id(y)],
    )
    rhs = word(
        (y, b, r, b),
        [Id(y), W6(b, r)],
        [X4(y, r), Id(b), Id(r)],
        [Id(r), X4(y, b), Id(r)],
        [Id(r), Id(b), X4(y, r)],
    )
    return [
        _inst("slide6v", cols, "", SoergelMorphism.from_word(lhs), SoergelMorphism.from_word(rhs))
    ]


def _slide4v_instances(i, j, k):
    cols = [("i", i), ("j", j), ("k", k)]
    lhs = word(
        (i, j, k),
        [X4(i, j), Id(k)],
        [Id(j), X4(i, k)],
        [X4(j, k), Id(i)],
    )
    rhs = word(
        (i, j, k),
        [Id(i), X4(j, k)],
        [X4(i, k), Id(j)],
        [Id(k), X4(i, j)],
    )
    return [
        _inst("slide4v", cols, "", SoergelMorphism.from_word(lhs), SoergelMorphism.from_word(rhs))
    ]


def _dumbdumbsquare_instances(b, r, y):
    cols = [("b", b), ("r", r), ("y", y)]
    return [
        _inst("dumbdumbsquare", cols, "", _arch_chain([b, r, y]), _arch_chain([y, r, b]))
    ]


def relation_instances(n: int):
    """All relation instances with colors drawn from 1..n-1."""
    if n < 2:
        raise ColorError("need at least two strands")
    colors = range(1, n)
    out = []
    for j in colors:
        out.extend(_one_color_instances(j))
    for i in colors:
        for j in colors:
            if distant(i, j):
                out.extend(_distant_instances(i, j))
            elif adjacent(i, j):
                out.extend(_adjacent_instances(i, j))
    for b in colors:
        for r in colors:
            if not adjacent(b, r):
                continue
            for y in colors:
                if distant(y, b) and distant(y, r):
                    out.extend(_slide6v_instances(b, r, y))
    for i in colors:
        for j in colors:
            for k in colors:
                if distant(i, j) and distant(j, k) and distant(i, k):
                    out.extend(_slide4v_instances(i, j, k))
    for j in colors:
        if j + 2 in colors:
            out.extend(_dumbdumbsquare_instances(j, j + 1, j + 2))
            out.extend(_dumbdumbsquare_instances(j + 2, j + 1, j))
    return out


def skipped_families(n: int):
    """Relation labels with no valid coloring at this strand count."""
    present = {inst.label for inst in relation_instances(n)}
    out = []
    for label in RELATION_LABELS:
        if label in present:
            continue
        if label in THREE_COLOR_LABELS:
            reason = "insufficient colors for a three-color assignment"
        elif label in ADJACENT_LABELS or label == "v6rot":
            reason = "no adjacent color pair exists"
        elif label in DISTANT_LABELS or label == "v4rot":
            reason = "no distant color pair exists"
        else:
            reason = "no valid coloring"
        out.append((label, reason))
    return out
