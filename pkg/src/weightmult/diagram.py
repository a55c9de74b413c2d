from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import AlgebraType


@dataclass(frozen=True)
class WeightDiagram:
    """Multiplicities keyed by offset from the lowest weight.

    An offset ``j`` stands for the weight ``w0(lambda) + sum_i j_i alpha_i``;
    ``delta`` is the offset of the highest weight. Only nonzero
    multiplicities are stored.
    """

    algebra: AlgebraType
    highest: tuple[int, ...]
    delta: tuple[int, ...]
    entries: dict[tuple[int, ...], int] = field(compare=True)
    method: str = field(default="", compare=False)

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, offset) -> int:
        return self.entries.get(tuple(offset), 0)

    def __len__(self):
        return len(self.entries)

    def sorted_items(self):
        return sorted(self.entries.items())

    def first_difference(self, other: "WeightDiagram"):
        """Lexicographically first offset where the two diagrams disagree, or None."""
        for key in sorted(set(self.entries) | set(other.entries)):
            if self[key] != other[key]:
                return key, self[key], other[key]
        return None
