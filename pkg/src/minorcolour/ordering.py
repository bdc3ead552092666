"""Linear vertex orderings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import GraphError


@dataclass(frozen=True)
class VertexOrdering:
    """A linear ordering; ``order[0]`` is the smallest vertex."""

    order: tuple[int, ...]
    position: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pos = {v: i for i, v in enumerate(self.order)}
        if len(pos) != len(self.order) or sorted(pos) != list(range(len(self.order))):
            raise GraphError("ordering must be a permutation of 0..n-1")
        object.__setattr__(self, "position", pos)

    @classmethod
    def of(cls, order: Iterable[int]) -> "VertexOrdering":
        return cls(tuple(order))

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.order)

    def precedes(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]

    def to_json_obj(self) -> list[int]:
        return list(self.order)
