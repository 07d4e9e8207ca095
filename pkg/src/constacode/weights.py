"""Weight distribution container (exact integer counts)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidDistribution


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    q: int
    counts: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(a) for a in self.counts)
        if len(c) != self.n + 1:
            raise InvalidDistribution(f"need {self.n + 1} counts, got {len(c)}")
        if any(a < 0 for a in c):
            raise InvalidDistribution("negative count")
        object.__setattr__(self, "counts", c)

    @classmethod
    def from_dict(cls, n: int, q: int, d: dict) -> "WeightDistribution":
        c = [0] * (n + 1)
        for w, a in d.items():
            c[int(w)] += int(a)
        return cls(n, q, tuple(c))

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def k(self) -> int:
        t, k = self.total, 0
        while t > 1:
            if t % self.q:
                raise InvalidDistribution(f"total {self.total} is not a power of {self.q}")
            t //= self.q
            k += 1
        return k

    @property
    def min_distance(self) -> int | None:
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        return None

    def nonzero(self) -> dict[int, int]:
        return {w: a for w, a in enumerate(self.counts) if a}

    def to_json(self) -> dict[str, str]:
        return {str(w): str(a) for w, a in self.nonzero().items()}

    def enumerator(self, var: str = "z") -> str:
        """1+30z^3+15z^4 style string."""
        parts = []
        for w, a in self.nonzero().items():
            if w == 0:
                parts.append(str(a))
            else:
                parts.append(f"{a}{var}^{w}")
        return "+".join(parts)

    def __getitem__(self, w: int) -> int:
        return self.counts[w]
