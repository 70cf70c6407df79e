"""Queen configurations, conflict reports and Slater pairings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, NamedTuple

from .board import InvalidInput, LineId, Square, attacks, lines_through


def _as_tuple(values: Iterable[int]) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or int(v) != v:
            raise InvalidInput(f"expected integers, got {v!r}")
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class Configuration:
    """One queen per row; ``cols[i-1]`` is the column of the queen in row i."""

    n: int
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        cols = _as_tuple(self.cols)
        object.__setattr__(self, "cols", cols)
        if self.n < 0 or len(cols) != self.n:
            raise InvalidInput(f"need {self.n} columns, got {len(cols)}")
        if sorted(cols) != list(range(1, self.n + 1)):
            raise InvalidInput(f"columns {list(cols)} are not a permutation of 1..{self.n}")

    @classmethod
    def of(cls, cols: Iterable[int]) -> "Configuration":
        cols = _as_tuple(cols)
        return cls(len(cols), cols)

    def squares(self) -> list[Square]:
        return [Square(i, j) for i, j in enumerate(self.cols, start=1)]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "cols": list(self.cols)})

    @classmethod
    def from_dict(cls, obj: dict) -> "Configuration":
        if not isinstance(obj, dict) or set(obj) != {"n", "cols"}:
            raise InvalidInput('expected an object with keys "n" and "cols"')
        n, cols = obj["n"], obj["cols"]
        if isinstance(n, bool) or not isinstance(n, int) or not isinstance(cols, list):
            raise InvalidInput('"n" must be an integer and "cols" a list')
        return cls(n, tuple(cols))


@dataclass(frozen=True)
class SlaterPairing:
    """Row i is paired with ``a[i-1]`` from {n+1, ..., 2n}."""

    n: int
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        a = _as_tuple(self.a)
        object.__setattr__(self, "a", a)
        if len(a) != self.n or sorted(a) != list(range(self.n + 1, 2 * self.n + 1)):
            raise InvalidInput(
                f"{list(a)} is not a bijection onto {self.n + 1}..{2 * self.n}"
            )

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, ai) for i, ai in enumerate(self.a, start=1)]


class Conflict(NamedTuple):
    row_a: int
    row_b: int
    line: LineId


def is_valid(c: Configuration) -> bool:
    """No two queens attack each other (pairwise check)."""
    sq = c.squares()
    for x in range(c.n):
        for y in range(x + 1, c.n):
            if attacks(sq[x], sq[y], c.n):
                return False
    return True


def conflicts(c: Configuration) -> list[Conflict]:
    """Every attacking pair of queens with the first shared line in tag order."""
    lines = [lines_through(sq, c.n) for sq in c.squares()]
    out = []
    for x in range(c.n):
        for y in range(x + 1, c.n):
            shared = lines[x] & lines[y]
            if shared:
                out.append(Conflict(x + 1, y + 1, min(shared)))
    return out


def to_slater(c: Configuration) -> SlaterPairing:
    return SlaterPairing(c.n, tuple(c.n + j for j in c.cols))


def from_slater(p: SlaterPairing) -> Configuration:
    return Configuration(p.n, tuple(a - p.n for a in p.a))


def slater_is_valid(p: SlaterPairing) -> bool:
    """All 2n sums and differences ``a_i +- i`` are distinct."""
    values = [a + i for i, a in p.pairs()] + [a - i for i, a in p.pairs()]
    return len(set(values)) == 2 * p.n


def mirror(c: Configuration) -> Configuration:
    return Configuration(c.n, tuple(c.n + 1 - j for j in c.cols))


def read_jsonl(stream: IO[str]) -> Iterator[tuple[int, Configuration]]:
    """Yield ``(line_number, configuration)`` from a JSON-lines stream.

    Blank lines are skipped.  Malformed records raise :class:`InvalidInput`
    naming the 1-based line number.
    """
    for lineno, text in enumerate(stream, start=1):
        if not text.strip():
            continue
        try:
            yield lineno, Configuration.from_dict(json.loads(text))
        except (json.JSONDecodeError, InvalidInput) as exc:
            raise InvalidInput(f"line {lineno}: {exc}") from exc
