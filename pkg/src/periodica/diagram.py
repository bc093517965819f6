"""Diagram codes: periodic tangle codes (PTC), planar diagram (PD) codes,
annular closures and their flattening into a crossing list.

Crossing slot convention (shared by every diagram type): the four slots of a
crossing are listed counterclockwise; once flattened, slot 0 is the incoming
under-strand and slot 2 the outgoing one. The crossing is positive exactly
when the over-strand enters at slot 3.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .laurent import is_prime

__all__ = [
    "DiagramError",
    "DanglingPort",
    "OrientationMismatch",
    "NotOddPrime",
    "BadGluing",
    "PDParseError",
    "Crossing",
    "Tangle",
    "PeriodicTangleCode",
    "AnnularDiagram",
    "PlanarDiagram",
    "parse_ptc",
    "parse_pd",
    "load_diagram",
    "quotient",
    "crossing_counts",
    "lk_with_axis",
    "braid_tangle",
]


class DiagramError(ValueError):
    pass


class DanglingPort(DiagramError):
    pass


class OrientationMismatch(DiagramError):
    pass


class NotOddPrime(DiagramError):
    pass


class BadGluing(DiagramError):
    pass


class PDParseError(DiagramError):
    pass


ROLES = ("ui", "uo", "oi", "oo")
_DEFAULT_ROLES = {1: ("ui", "oo", "uo", "oi"), -1: ("ui", "oi", "uo", "oo")}

Port = Tuple  # ("c", id, slot) | ("w", i) | ("e", i)


def _port(ref) -> Port:
    if isinstance(ref, (list, tuple)) and ref:
        kind = ref[0]
        if kind == "c" and len(ref) == 3:
            return ("c", int(ref[1]), int(ref[2]))
        if kind in ("w", "e") and len(ref) == 2:
            return (kind, int(ref[1]))
    raise DanglingPort(f"malformed port reference {ref!r}")


def _port_json(port: Port) -> list:
    return list(port)


@dataclass(frozen=True)
class Crossing:
    """A tangle crossing: ``roles[k]`` is the role of counterclockwise slot k."""

    id: int
    sign: int
    roles: Tuple[str, str, str, str]

    @property
    def under_in(self) -> int:
        return self.roles.index("ui")

    def slot(self, role: str) -> int:
        return self.roles.index(role)

    def is_in(self, slot: int) -> bool:
        return self.roles[slot].endswith("i")

    def switched(self) -> "Crossing":
        swap = {"ui": "oi", "oi": "ui", "uo": "oo", "oo": "uo"}
        return Crossing(self.id, -self.sign, tuple(swap[r] for r in self.roles))


def _check_crossing(cid: int, sign: int, roles: Sequence[str]) -> Crossing:
    roles = tuple(roles)
    if sign not in (1, -1):
        raise OrientationMismatch(f"crossing {cid}: sign must be +1 or -1, got {sign}")
    if sorted(roles) != sorted(ROLES):
        raise OrientationMismatch(f"crossing {cid}: ports must be a permutation of {ROLES}")
    ui = roles.index("ui")
    if roles[(ui + 2) % 4] != "uo":
        raise OrientationMismatch(f"crossing {cid}: under-strand slots are not opposite")
    actual = 1 if roles[(ui + 3) % 4] == "oi" else -1
    if actual != sign:
        raise OrientationMismatch(f"crossing {cid}: declared sign {sign} but ports give {actual}")
    return Crossing(cid, sign, roles)


@dataclass(frozen=True)
class Tangle:
    """Fundamental domain of a periodic diagram.

    ``arcs`` are directed ``(tail, head)`` port pairs. ``orient[i]`` is the
    direction (+1 eastward) of the strand through gluing position ``i``;
    east port ``east[i]`` of one copy is glued to west port ``west[i]`` of
    the next copy. ``loops`` counts crossing-free circles inside the domain.
    """

    crossings: Tuple[Crossing, ...]
    arcs: Tuple[Tuple[Port, Port], ...]
    west: Tuple[int, ...]
    east: Tuple[int, ...]
    orient: Tuple[int, ...]
    loops: int = 0

    @property
    def width(self) -> int:
        return len(self.west)

    def crossing(self, cid: int) -> Crossing:
        for c in self.crossings:
            if c.id == cid:
                return c
        raise KeyError(f"no crossing with id {cid}")

    def counts(self) -> Tuple[int, int]:
        npos = sum(1 for c in self.crossings if c.sign > 0)
        return npos, len(self.crossings) - npos

    # -- construction --------------------------------------------------
    @classmethod
    def build(cls, crossings, arcs, west, east, orient, loops: int = 0) -> "Tangle":
        xs = []
        seen = set()
        for c in crossings:
            if isinstance(c, Crossing):
                cid, sign, roles = c.id, c.sign, c.roles
            else:
                cid, sign = int(c["id"]), int(c["sign"])
                roles = c.get("ports") or _DEFAULT_ROLES.get(sign, ())
            if cid in seen:
                raise DanglingPort(f"duplicate crossing id {cid}")
            seen.add(cid)
            xs.append(_check_crossing(cid, sign, roles))

        west, east, orient = tuple(int(x) for x in west), tuple(int(x) for x in east), tuple(int(x) for x in orient)
        a = len(west)
        if len(east) != a:
            raise BadGluing(f"west has {a} ports but east has {len(east)}")
        if sorted(west) != list(range(a)):
            raise BadGluing(f"west ports {list(west)} are not a permutation of 0..{a - 1}")
        if sorted(east) != list(range(a)):
            raise BadGluing(f"east ports {list(east)} are not a permutation of 0..{a - 1}")
        if len(orient) != a or any(o not in (1, -1) for o in orient):
            raise OrientationMismatch(f"orient must list +1/-1 for each of the {a} gluing positions")
        if loops < 0:
            raise DiagramError("loops must be non-negative")

        by_id = {c.id: c for c in xs}
        w_dir = {west[i]: orient[i] for i in range(a)}
        e_dir = {east[i]: orient[i] for i in range(a)}

        def is_tail(port: Port) -> bool:
            kind = port[0]
            if kind == "c":
                return not by_id[port[1]].is_in(port[2])
            if kind == "w":
                return w_dir[port[1]] == 1
            return e_dir[port[1]] == -1

        expected = {("c", c.id, k) for c in xs for k in range(4)}
        expected |= {("w", i) for i in range(a)} | {("e", i) for i in range(a)}
        used: Dict[Port, int] = {}
        directed = []
        for idx, arc in enumerate(arcs):
            if len(arc) != 2:
                raise DanglingPort(f"arc {idx} must join exactly two ports")
            p0, p1 = _port(arc[0]), _port(arc[1])
            for pt in (p0, p1):
                if pt not in expected:
                    raise DanglingPort(f"arc {idx} references unknown port {list(pt)}")
                if pt in used:
                    kind = BadGluing if pt[0] in ("w", "e") else DanglingPort
                    raise kind(f"port {list(pt)} is used by arcs {used[pt]} and {idx}")
                used[pt] = idx
            t0, t1 = is_tail(p0), is_tail(p1)
            if t0 == t1:
                raise OrientationMismatch(
                    f"arc {idx} joins {list(p0)} and {list(p1)}, which are both "
                    + ("outgoing" if t0 else "incoming")
                )
            directed.append((p0, p1) if t0 else (p1, p0))
        missing = sorted(expected - set(used), key=repr)
        if missing:
            raise DanglingPort(f"port {list(missing[0])} is not attached to any arc")
        return cls(tuple(xs), tuple(directed), west, east, orient, loops)

    def to_json(self) -> dict:
        return {
            "crossings": [{"id": c.id, "sign": c.sign, "ports": list(c.roles)} for c in self.crossings],
            "arcs": [[_port_json(t), _port_json(h)] for t, h in self.arcs],
            "west": list(self.west),
            "east": list(self.east),
            "orient": list(self.orient),
            "loops": self.loops,
        }

    # -- local modifications (used by the skein checks) ----------------
    def with_sign(self, cid: int, sign: int) -> "Tangle":
        xs = tuple(c if c.id != cid or c.sign == sign else c.switched() for c in self.crossings)
        self.crossing(cid)
        return Tangle(xs, self.arcs, self.west, self.east, self.orient, self.loops)

    def mirror(self) -> "Tangle":
        return Tangle(tuple(c.switched() for c in self.crossings), self.arcs, self.west, self.east, self.orient, self.loops)

    def resolve(self, cid: int) -> "Tangle":
        """Oriented resolution of crossing ``cid``."""
        x = self.crossing(cid)
        virtual = {("c", cid, x.slot("ui")): ("c", cid, x.slot("oo")), ("c", cid, x.slot("oi")): ("c", cid, x.slot("uo"))}
        nxt = dict(self.arcs)
        new_arcs = []
        reached = set()
        for tail, head in self.arcs:
            if tail[0] == "c" and tail[1] == cid:
                continue
            while head in virtual:
                reached.add(virtual[head])
                head = nxt[virtual[head]]
            new_arcs.append((tail, head))
        loops = self.loops
        for tail, _ in self.arcs:
            if tail[0] == "c" and tail[1] == cid and tail not in reached:
                # closed circle through the resolved crossing only
                cur = tail
                while True:
                    reached.add(cur)
                    cur = virtual[nxt[cur]]
                    if cur == tail:
                        break
                loops += 1
        xs = tuple(c for c in self.crossings if c.id != cid)
        return Tangle(xs, tuple(new_arcs), self.west, self.east, self.orient, loops)


@dataclass(frozen=True)
class PeriodicTangleCode:
    """``p**n`` copies of ``tangle`` glued into an annulus."""

    p: int
    n: int
    tangle: Tangle

    def __post_init__(self):
        if not (isinstance(self.p, int) and self.p > 2 and is_prime(self.p)):
            raise NotOddPrime(f"period base p={self.p} is not an odd prime")
        if self.n < 1:
            raise DiagramError(f"exponent n={self.n} must be at least 1")
        # gluing must close up consistently for every number of copies
        AnnularDiagram(self.tangle, 1).flatten()

    @property
    def order(self) -> int:
        return self.p**self.n

    def replace(self, tangle: Tangle) -> "PeriodicTangleCode":
        return PeriodicTangleCode(self.p, self.n, tangle)

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "tangle": self.tangle.to_json()}

    def dumps(self) -> str:
        """JSON text with one arc or crossing per line."""
        t = self.tangle.to_json()
        rows = [f'{{"p": {self.p}, "n": {self.n}, "tangle": {{']
        for key in ("crossings", "arcs"):
            items = [json.dumps(x) for x in t[key]]
            if items:
                rows.append(f'  "{key}": [\n    ' + ",\n    ".join(items) + "\n  ],")
            else:
                rows.append(f'  "{key}": [],')
        for key in ("west", "east", "orient"):
            rows.append(f'  "{key}": {json.dumps(t[key])},')
        rows.append(f'  "loops": {t["loops"]}')
        rows.append("}}")
        return "\n".join(rows) + "\n"


@dataclass(frozen=True)
class PlanarDiagram:
    """Oriented crossing list with optional winding data.

    ``crossings[x]`` holds the four edge ids at the slots of crossing ``x``
    (slot 0 = incoming under-strand). Each edge runs from an outgoing slot
    (tail) to an incoming slot (head); ``seam[e]`` counts signed passages of
    that edge through the annulus seam, tail to head. ``loops`` lists the
    windings of crossing-free circles.
    """

    crossings: Tuple[Tuple[int, int, int, int], ...]
    signs: Tuple[int, ...]
    n_edges: int
    seam: Tuple[int, ...] = ()
    loops: Tuple[int, ...] = ()
    labels: Tuple = ()

    def __post_init__(self):
        if not self.seam:
            object.__setattr__(self, "seam", (0,) * self.n_edges)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def ends(self) -> Tuple[List[int], List[int]]:
        """``slot_end[4x+k]`` and ``end_slot[2e+t]`` with t=0 tail, t=1 head."""
        slot_end = [0] * (4 * len(self.crossings))
        end_slot = [-1] * (2 * self.n_edges)
        for x, (sgn, edges) in enumerate(zip(self.signs, self.crossings)):
            ins = (0, 3) if sgn > 0 else (0, 1)
            for k, e in enumerate(edges):
                t = 1 if k in ins else 0
                if end_slot[2 * e + t] != -1:
                    raise OrientationMismatch(f"edge {self.label(e)} has two {'heads' if t else 'tails'}")
                end_slot[2 * e + t] = 4 * x + k
                slot_end[4 * x + k] = 2 * e + t
        if -1 in end_slot:
            e = end_slot.index(-1) // 2
            raise DanglingPort(f"edge {self.label(e)} is not attached at both ends")
        return slot_end, end_slot

    def label(self, e: int):
        return self.labels[e] if self.labels else e

    def mirror(self) -> "PlanarDiagram":
        xs = []
        for sgn, (a, b, c, d) in zip(self.signs, self.crossings):
            xs.append((d, a, b, c) if sgn > 0 else (b, c, d, a))
        return PlanarDiagram(tuple(xs), tuple(-s for s in self.signs), self.n_edges, self.seam, self.loops, self.labels)

    def disjoint_union(self, other: "PlanarDiagram") -> "PlanarDiagram":
        off = self.n_edges
        xs = self.crossings + tuple(tuple(e + off for e in x) for x in other.crossings)
        labels = ()
        if self.labels or other.labels:
            labels = tuple(("a", self.label(e)) for e in range(self.n_edges)) + tuple(
                ("b", other.label(e)) for e in range(other.n_edges)
            )
        return PlanarDiagram(xs, self.signs + other.signs, off + other.n_edges, self.seam + other.seam, self.loops + other.loops, labels)

    def components(self) -> int:
        slot_end, end_slot = self.ends()
        seen = [False] * self.n_edges
        count = 0
        for e0 in range(self.n_edges):
            if seen[e0]:
                continue
            count += 1
            e = e0
            while not seen[e]:
                seen[e] = True
                s = end_slot[2 * e + 1]
                e = slot_end[s - (s & 3) + ((s & 3) + 2) % 4] >> 1
        return count + len(self.loops)

    def to_pd(self) -> str:
        lines = [f"X[{','.join(str(self.label(e)) for e in x)}]" for x in self.crossings]
        lines += ["Loop[]"] * len(self.loops)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AnnularDiagram:
    """``copies`` copies of a tangle glued cyclically."""

    tangle: Tangle
    copies: int

    def __post_init__(self):
        if self.copies < 1:
            raise DiagramError("an annular diagram needs at least one copy")

    def global_id(self, copy: int, cid: int) -> int:
        idx = [c.id for c in self.tangle.crossings].index(cid)
        return copy * len(self.tangle.crossings) + idx

    def counts(self) -> Tuple[int, int]:
        npos, nneg = self.tangle.counts()
        return npos * self.copies, nneg * self.copies

    def flatten(self) -> PlanarDiagram:
        t = self.tangle
        c = self.copies
        nc = len(t.crossings)
        index = {x.id: i for i, x in enumerate(t.crossings)}
        head_of = dict(t.arcs)
        arc_idx = {tail: i for i, (tail, _) in enumerate(t.arcs)}
        w_pos = {w: i for i, w in enumerate(t.west)}
        e_pos = {e: i for i, e in enumerate(t.east)}
        visited = set()

        def walk(copy: int, tail: Port):
            """Follow arcs from ``tail`` until a crossing slot is reached."""
            weight = 0
            while True:
                key = (copy, arc_idx[tail])
                if key in visited:
                    return None, weight, copy
                visited.add(key)
                head = head_of[tail]
                if head[0] == "c":
                    return head, weight, copy
                if head[0] == "e":
                    g = e_pos[head[1]]
                    if copy == c - 1:
                        weight += 1
                    copy = (copy + 1) % c
                    tail = ("w", t.west[g])
                else:
                    g = w_pos[head[1]]
                    if copy == 0:
                        weight -= 1
                    copy = (copy - 1) % c
                    tail = ("e", t.east[g])

        crossings = [[None] * 4 for _ in range(nc * c)]
        seam = []
        n_edges = 0
        for copy in range(c):
            for x in t.crossings:
                for k in range(4):
                    if x.is_in(k):
                        continue
                    head, weight, hcopy = walk(copy, ("c", x.id, k))
                    if head is None:
                        raise BadGluing(f"strand from crossing {x.id} slot {k} does not close up")
                    e = n_edges
                    n_edges += 1
                    seam.append(weight)
                    crossings[copy * nc + index[x.id]][k] = e
                    crossings[hcopy * nc + index[head[1]]][head[2]] = e
        loops = []
        for copy in range(c):
            for i, (tail, _) in enumerate(t.arcs):
                if (copy, i) in visited:
                    continue
                _, weight, end_copy = walk(copy, tail)
                if end_copy != copy:
                    raise BadGluing("crossing-free strand does not close up")
                loops.append(weight)
        loops.extend([0] * (t.loops * c))

        flat = []
        signs = []
        for gx in range(nc * c):
            x = t.crossings[gx % nc]
            r = x.under_in
            flat.append(tuple(crossings[gx][(r + k) % 4] for k in range(4)))
            signs.append(x.sign)
        return PlanarDiagram(tuple(flat), tuple(signs), n_edges, tuple(seam), tuple(loops))


# -- periodic tangle codes ------------------------------------------------


def _code_from_json(obj) -> PeriodicTangleCode:
    if not isinstance(obj, dict) or "tangle" not in obj:
        raise DiagramError("PTC document must be an object with p, n and tangle")
    p, n = obj.get("p"), obj.get("n", 1)
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise NotOddPrime(f"period base p={p!r} is not an odd prime")
    t = obj["tangle"]
    tangle = Tangle.build(
        t.get("crossings", []),
        t.get("arcs", []),
        t.get("west", []),
        t.get("east", []),
        t.get("orient", []),
        int(t.get("loops", 0)),
    )
    return PeriodicTangleCode(int(p), int(n), tangle)


def parse_ptc(text: str) -> PeriodicTangleCode:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"invalid JSON: {exc}") from None
    return _code_from_json(obj)


def quotient(code: PeriodicTangleCode, v: int) -> AnnularDiagram:
    """Quotient of the full diagram by the subgroup of order ``p**v``."""
    if not 0 <= v <= code.n:
        raise ValueError(f"level v={v} outside 0..{code.n}")
    return AnnularDiagram(code.tangle, code.p ** (code.n - v))


def crossing_counts(d) -> Tuple[int, int]:
    if isinstance(d, AnnularDiagram):
        return d.counts()
    if isinstance(d, PeriodicTangleCode):
        return quotient(d, 0).counts()
    npos = sum(1 for s in d.signs if s > 0)
    return npos, len(d.signs) - npos


def lk_with_axis(code: PeriodicTangleCode) -> int:
    """Signed count of strand passages through one seam."""
    return sum(code.tangle.orient)


def braid_tangle(width: int, word: Iterable[int], orient: Optional[Sequence[int]] = None) -> Tangle:
    """Tangle of a braid word; generator ``i`` crosses positions ``i-1`` and ``i``.

    Positive letters put the strand running from the top-left corner over.
    ``orient`` gives the direction of the strand entering each west position.
    """
    orient = list(orient) if orient is not None else [1] * width
    cur_dir = list(orient)
    open_port: List[Port] = [("w", i) for i in range(width)]
    crossings = []
    arcs = []
    # counterclockwise slots: 0=SW 1=SE 2=NE 3=NW
    for cid, letter in enumerate(word):
        i = abs(letter)
        if not 1 <= i < width:
            raise DiagramError(f"braid letter {letter} out of range for width {width}")
        top, bot = cur_dir[i - 1], cur_dir[i]
        roles = [None] * 4
        nw_se_over = letter > 0
        # strand NW-SE carries the top direction, SW-NE the bottom one
        pref = "o" if nw_se_over else "u"
        roles[3], roles[1] = (pref + "i", pref + "o") if top == 1 else (pref + "o", pref + "i")
        pref = "u" if nw_se_over else "o"
        roles[0], roles[2] = (pref + "i", pref + "o") if bot == 1 else (pref + "o", pref + "i")
        ui = roles.index("ui")
        sign = 1 if roles[(ui + 3) % 4] == "oi" else -1
        crossings.append(Crossing(cid, sign, tuple(roles)))
        arcs.append((open_port[i - 1], ("c", cid, 3)))
        arcs.append((open_port[i], ("c", cid, 0)))
        open_port[i - 1], open_port[i] = ("c", cid, 2), ("c", cid, 1)
        cur_dir[i - 1], cur_dir[i] = bot, top
    for i in range(width):
        arcs.append((open_port[i], ("e", i)))
    if cur_dir != orient:
        raise OrientationMismatch("braid permutation does not preserve the strand orientations")
    return Tangle.build(crossings, arcs, range(width), range(width), orient)


# -- planar diagram codes ---------------------------------------------------

_X = re.compile(r"^X\[\s*([^\]]*)\]$")
_LOOP = re.compile(r"^Loop\[\s*([^\]]*)\]$")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse ``X[a,b,c,d]`` lines (slot a = incoming under-strand).

    Header lines start with ``#``. ``# reverse: l1 l2 ...`` reverses the
    components through the listed edge labels. ``Loop[]`` adds a
    crossing-free circle. Over-strands of components that never pass under
    are oriented with the over-strand entering at the fourth slot.
    """
    raw: List[Tuple] = []
    n_loops = 0
    reverse: List[str] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("reverse:"):
                reverse.extend(body.split(":", 1)[1].replace(",", " ").split())
            continue
        for item in re.findall(r"(?:X|Loop)\[[^\]]*\]", line) or [line]:
            m = _X.match(item)
            if m:
                parts = [s.strip() for s in m.group(1).split(",")]
                if len(parts) != 4 or not all(parts):
                    raise PDParseError(f"line {lineno}: crossing {item!r} must have four labels")
                raw.append(tuple(parts))
                continue
            if _LOOP.match(item):
                n_loops += 1
                continue
            raise PDParseError(f"line {lineno}: cannot parse {item!r}")

    labels: List[str] = []
    index: Dict[str, int] = {}
    occ: Dict[str, List[Tuple[int, int]]] = {}
    for x, parts in enumerate(raw):
        for k, lab in enumerate(parts):
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
            occ.setdefault(lab, []).append((x, k))
    for lab, where in occ.items():
        if len(where) != 2:
            raise PDParseError(f"arc label {lab} appears {len(where)} times (expected 2)")

    # direction[(x, k)] = True when the strand enters crossing x at slot k
    direction: Dict[Tuple[int, int], bool] = {}
    queue: List[Tuple[int, int]] = []

    def assign(slot, value):
        old = direction.get(slot)
        if old is None:
            direction[slot] = value
            queue.append(slot)
        elif old != value:
            raise OrientationMismatch(f"inconsistent orientation at crossing {slot[0]} slot {slot[1]}")

    def other_end(x, k):
        a, b = occ[raw[x][k]]
        return b if a == (x, k) else a

    for x in range(len(raw)):
        assign((x, 0), True)
        assign((x, 2), False)
    pending = list(range(len(raw)))
    while True:
        while queue:
            x, k = queue.pop()
            assign(other_end(x, k), not direction[(x, k)])
            assign((x, (k + 2) % 4), not direction[(x, k)])
        free = [x for x in pending if (x, 1) not in direction]
        if not free:
            break
        assign((free[0], 3), True)

    if reverse:
        flip = set()
        for lab in reverse:
            if lab not in occ:
                raise PDParseError(f"reverse header names unknown label {lab}")
            start = occ[lab][0]
            cur = start
            while True:
                flip.add(cur)
                nxt = other_end(*cur)
                flip.add(nxt)
                cur = (nxt[0], (nxt[1] + 2) % 4)
                if cur == start:
                    break
        for slot in flip:
            direction[slot] = not direction[slot]

    crossings = []
    signs = []
    for x, parts in enumerate(raw):
        r = 0 if direction[(x, 0)] else 2
        ids = tuple(index[parts[(r + k) % 4]] for k in range(4))
        over_in = 3 if direction[(x, (r + 3) % 4)] else 1
        crossings.append(ids)
        signs.append(1 if over_in == 3 else -1)
    d = PlanarDiagram(tuple(crossings), tuple(signs), len(labels), (), (0,) * n_loops, tuple(labels))
    d.ends()
    return d


def load_diagram(path: str):
    """Load a ``.pd`` file as a PlanarDiagram, anything else as a PTC."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".pd"):
        return parse_pd(text)
    return parse_ptc(text)
