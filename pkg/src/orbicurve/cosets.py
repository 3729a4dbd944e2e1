"""Bounded Todd-Coxeter coset enumeration and small permutation utilities.

The enumerator is the HLT strategy: process live cosets in definition
order, scan-and-fill every relator, then define any still-missing neighbor.
Coincidences go through a union-find with queued edge transfer; the table
is compacted whenever dead rows outnumber live ones, so memory stays linear
in the live-coset count.  Everything is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityMismatch, IncompleteTable
from .presentations import FinitePresentation, Word

DEFAULT_MAX_COSETS = 10**6
DEFAULT_CLOSURE_CAP = 10**6


@dataclass(frozen=True)
class Exceeded:
    """Bounded-resource outcome: the computation hit its configured cap."""

    bound: int


def _letters(word: Word) -> tuple[int, ...]:
    """Flatten to letters: generator g is 2g, its inverse 2g+1."""
    out = []
    for g, e in word:
        letter = 2 * g if e > 0 else 2 * g + 1
        out.extend([letter] * abs(e))
    return tuple(out)


def _inv(letter: int) -> int:
    return letter ^ 1


@dataclass(frozen=True)
class CosetTable:
    """Completed coset table: `action[c][2g]` is the image of coset c under
    generator g, `action[c][2g+1]` under its inverse.  Coset 0 is the coset
    of the subgroup."""

    presentation: FinitePresentation
    rows: int
    action: tuple[tuple[int, ...], ...]
    complete: bool


class _Enumerator:
    def __init__(self, presentation: FinitePresentation, subgroup_generators,
                 max_cosets: int):
        if max_cosets < 1:
            raise ValueError("max_cosets must be >= 1")
        self.presentation = presentation
        self.width = 2 * presentation.ngens
        self.relators = [_letters(w) for w in presentation.relators]
        self.subgens = [_letters(w) for w in subgroup_generators]
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = []
        self.parent: list[int] = []
        self.live = 0
        self.exceeded = False

    # -- union-find ---------------------------------------------------
    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    # -- table management ----------------------------------------------
    def define(self, c: int, letter: int) -> int | None:
        if self.live + 1 > self.max_cosets:
            self.exceeded = True
            return None
        new = len(self.table)
        self.table.append([None] * self.width)
        self.parent.append(new)
        self.live += 1
        self.table[c][letter] = new
        self.table[new][_inv(letter)] = c
        return new

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        lo, hi = (a, b) if a < b else (b, a)
        self.parent[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        qi = 0
        while qi < len(queue):
            dead = queue[qi]
            qi += 1
            for letter in range(self.width):
                delta = self.table[dead][letter]
                if delta is None:
                    continue
                # drop the back edge before transplanting
                if self.table[delta][_inv(letter)] == dead:
                    self.table[delta][_inv(letter)] = None
                mu, nu = self.find(dead), self.find(delta)
                if self.table[mu][letter] is not None:
                    self._merge(nu, self.table[mu][letter], queue)
                elif self.table[nu][_inv(letter)] is not None:
                    self._merge(mu, self.table[nu][_inv(letter)], queue)
                else:
                    self.table[mu][letter] = nu
                    self.table[nu][_inv(letter)] = mu

    def scan_and_fill(self, alpha: int, word: tuple[int, ...]) -> None:
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and self.table[f][word[i]] is not None:
                f = self.find(self.table[f][word[i]])
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.table[b][_inv(word[j])] is not None:
                b = self.find(self.table[b][_inv(word[j])])
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self.table[f][word[i]] = b
                self.table[b][_inv(word[i])] = f
                return
            new = self.define(f, word[i])
            if new is None:
                return
            f = new
            i += 1

    def compact(self, cursor: int) -> int:
        """Renumber live cosets in order; returns the relocated cursor."""
        mapping: dict[int, int] = {}
        for c in range(len(self.table)):
            if self.find(c) == c:
                mapping[c] = len(mapping)
        new_table = []
        for c in range(len(self.table)):
            if c not in mapping:
                continue
            row = self.table[c]
            new_table.append([
                None if x is None else mapping[self.find(x)] for x in row
            ])
        new_cursor = sum(1 for c in mapping if c < cursor)
        self.table = new_table
        self.parent = list(range(len(new_table)))
        return new_cursor

    def run(self) -> CosetTable | Exceeded:
        self.table.append([None] * self.width)
        self.parent.append(0)
        self.live = 1
        for word in self.subgens:
            self.scan_and_fill(0, word)
            if self.exceeded:
                return Exceeded(self.max_cosets)
        alpha = 0
        while alpha < len(self.table):
            dead = len(self.table) - self.live
            if dead > max(self.live, 256):
                alpha = self.compact(alpha)
                continue  # bound and liveness must be re-checked
            if self.find(alpha) != alpha:
                alpha += 1
                continue
            for word in self.relators:
                self.scan_and_fill(alpha, word)
                if self.exceeded:
                    return Exceeded(self.max_cosets)
                if self.find(alpha) != alpha:
                    break
            if self.find(alpha) == alpha:
                for letter in range(self.width):
                    if self.table[alpha][letter] is None:
                        if self.define(alpha, letter) is None:
                            return Exceeded(self.max_cosets)
            alpha += 1
        self.compact(0)
        action = tuple(tuple(row) for row in self.table)
        complete = all(x is not None for row in action for x in row)
        return CosetTable(self.presentation, len(action), action, complete)


def coset_enumeration(
    p: FinitePresentation,
    subgroup_generators=(),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable | Exceeded:
    """Enumerate cosets of the subgroup generated by the given words.

    On completion the row count is the index of the subgroup.  Returns
    Exceeded when the live-coset count would pass `max_cosets`.
    """
    return _Enumerator(p, subgroup_generators, max_cosets).run()


def group_order(p: FinitePresentation, bound: int = DEFAULT_MAX_COSETS) -> int | Exceeded:
    """Order of the presented group by enumeration over the trivial subgroup."""
    result = coset_enumeration(p, (), bound)
    if isinstance(result, Exceeded):
        return result
    return result.rows


# ---------------------------------------------------------------------------
# permutations, stored as image tuples on 0..k-1


def identity_perm(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def perm_mul(p, q) -> tuple[int, ...]:
    """Apply p, then q."""
    return tuple(q[x] for x in p)


def perm_inverse(p) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_order(p) -> int:
    order = 1
    q = p
    ident = identity_perm(len(p))
    while q != ident:
        q = perm_mul(q, p)
        order += 1
    return order


def perm_power(p, e: int) -> tuple[int, ...]:
    if e < 0:
        return perm_power(perm_inverse(p), -e)
    out = identity_perm(len(p))
    for _ in range(e):
        out = perm_mul(out, p)
    return out


def cycles_of(p) -> list[tuple[int, ...]]:
    """Nontrivial cycles, 0-based points."""
    seen = set()
    cycles = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cycle = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cycle.append(j)
            seen.add(j)
            j = p[j]
        cycles.append(tuple(cycle))
    return cycles


@dataclass(frozen=True)
class PermutationImages:
    """One permutation per presentation generator, all of the same degree."""

    degree: int
    images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for p in self.images:
            if sorted(p) != list(range(self.degree)):
                raise ArityMismatch(f"not a permutation of degree {self.degree}: {p}")


def generator_permutations(t: CosetTable) -> PermutationImages:
    """Right-multiplication action of each generator on the cosets."""
    if not t.complete:
        raise IncompleteTable("coset table has undefined entries")
    images = tuple(
        tuple(t.action[c][2 * g] for c in range(t.rows))
        for g in range(t.presentation.ngens)
    )
    return PermutationImages(t.rows, images)


def permutation_group_order(perms: PermutationImages, cap: int = DEFAULT_CLOSURE_CAP) -> int | Exceeded:
    """Order of the generated group by breadth-first closure, capped."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    ident = identity_perm(perms.degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for p in frontier:
            for q in perms.images:
                r = perm_mul(p, q)
                if r not in seen:
                    seen.add(r)
                    if len(seen) > cap:
                        return Exceeded(cap)
                    new_frontier.append(r)
        frontier = new_frontier
    return len(seen)


def evaluate_word(word: Word, perms: PermutationImages) -> tuple[int, ...]:
    out = identity_perm(perms.degree)
    for g, e in word:
        out = perm_mul(out, perm_power(perms.images[g], e))
    return out


def verify_homomorphism(p: FinitePresentation, images: PermutationImages) -> bool:
    """True iff sending each generator to its image kills every relator."""
    if len(images.images) != p.ngens:
        raise ArityMismatch(
            f"{p.ngens} generators but {len(images.images)} images"
        )
    ident = identity_perm(images.degree)
    return all(evaluate_word(w, images) == ident for w in p.relators)


# ---------------------------------------------------------------------------
# cycle-notation text format (1-based points), used by the CLI


def format_cycles(p) -> str:
    cycles = cycles_of(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles)


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse '(1 2)(3 4)' into an image tuple on 0..degree-1."""
    text = text.strip()
    if text in ("()", "id", ""):
        return identity_perm(degree)
    if not (text.startswith("(") and text.endswith(")")):
        raise ArityMismatch(f"bad cycle notation: {text!r}")
    images = list(range(degree))
    for chunk in text[1:-1].split(")("):
        points = [int(tok) - 1 for tok in chunk.replace(",", " ").split()]
        if any(not 0 <= x < degree for x in points):
            raise ArityMismatch(f"point out of range in {text!r}")
        if len(set(points)) != len(points):
            raise ArityMismatch(f"repeated point in {text!r}")
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    p = tuple(images)
    if sorted(p) != list(range(degree)):
        raise ArityMismatch(f"cycles do not define a permutation: {text!r}")
    return p
