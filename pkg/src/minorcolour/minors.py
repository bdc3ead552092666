"""Minor patterns, branch-set certificates and refute-or-decompose outcomes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Sequence

from .errors import ParseError

if TYPE_CHECKING:
    from .partition import ConnectedPartition


@dataclass(frozen=True)
class Pattern:
    """A pattern graph.

    ``kind`` is ``"K"`` (complete graph on ``t`` vertices), ``"K*"`` (the join
    of K_s with t independent vertices) or ``"Kbip"`` (complete bipartite
    K_{s,t}). In both bipartite kinds the s-side comes first.
    """

    kind: str
    t: int
    s: int = 0

    @classmethod
    def complete(cls, t: int) -> "Pattern":
        return cls("K", t)

    @classmethod
    def star_join(cls, s: int, t: int) -> "Pattern":
        return cls("K*", t, s)

    @classmethod
    def star(cls, t: int) -> "Pattern":
        return cls("K*", t, 1)

    @classmethod
    def bipartite(cls, s: int, t: int) -> "Pattern":
        return cls("Kbip", t, s)

    @property
    def order(self) -> int:
        return self.t if self.kind == "K" else self.s + self.t

    def edges(self) -> list[tuple[int, int]]:
        if self.kind == "K":
            return list(combinations(range(self.t), 2))
        cross = [(i, self.s + j) for i in range(self.s) for j in range(self.t)]
        if self.kind == "K*":
            return list(combinations(range(self.s), 2)) + cross
        if self.kind == "Kbip":
            return cross
        raise ValueError(f"unknown pattern kind {self.kind!r}")

    def roles(self) -> tuple[str, ...] | None:
        if self.kind == "K":
            return None
        return ("hub",) * self.s + ("leaf",) * self.t

    @property
    def name(self) -> str:
        if self.kind == "K":
            return f"K{self.t}"
        if self.kind == "K*":
            return f"K*{self.s},{self.t}"
        return f"K{self.s},{self.t}"

    def params(self) -> dict[str, int]:
        return {"t": self.t} if self.kind == "K" else {"s": self.s, "t": self.t}

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """Parse ``K5``, ``K*2,3`` or ``K3,3``."""
        try:
            if text.startswith("K*"):
                s, t = text[2:].split(",")
                return cls.star_join(int(s), int(t))
            if "," in text:
                s, t = text[1:].split(",")
                return cls.bipartite(int(s), int(t))
            return cls.complete(int(text[1:]))
        except ValueError:
            raise ParseError(f"cannot parse pattern {text!r}") from None


@dataclass(frozen=True)
class MinorModel:
    """Branch sets realising ``pattern``; ``branch_sets[i]`` represents
    pattern vertex ``i``."""

    pattern: Pattern
    branch_sets: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, pattern: Pattern, sets: Sequence) -> "MinorModel":
        return cls(pattern, tuple(frozenset(s) for s in sets))

    def to_json_obj(self) -> dict:
        obj = {
            "pattern": self.pattern.kind,
            "params": self.pattern.params(),
            "branch_sets": [sorted(b) for b in self.branch_sets],
        }
        roles = self.pattern.roles()
        if roles is not None:
            obj["roles"] = list(roles)
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MinorModel":
        try:
            kind = obj["pattern"]
            params = obj["params"]
            pattern = Pattern(kind, int(params["t"]), int(params.get("s", 0)))
            return cls.of(pattern, [[int(v) for v in b] for b in obj["branch_sets"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad minor model JSON: {exc}") from None


@dataclass(frozen=True)
class DecompositionOutcome:
    """Exactly one of ``partition`` and ``certificate`` is set."""

    partition: "ConnectedPartition | None" = None
    certificate: MinorModel | None = None

    def __post_init__(self):
        if (self.partition is None) == (self.certificate is None):
            raise ValueError("exactly one of partition and certificate must be given")

    @property
    def kind(self) -> str:
        return "partition" if self.partition is not None else "certificate"
