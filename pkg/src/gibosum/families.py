from __future__ import annotations

import enum


class SumFamily(enum.Enum):
    """Sum families; ``value`` is the CLI spelling, ``args`` the free integers."""

    LINEAR = "linear"
    LINEAR_ALT = "linear_alt"
    FIFTH = "fifth"
    FIFTH_ALT = "fifth_alt"
    FIVE_PRODUCT = "five_product"
    FIVE_PRODUCT_ALT = "five_product_alt"
    FIVE_PRODUCT_WEIGHTED = "five_product_weighted"
    PENTAD_PROGRESSION = "pentad_progression"
    RECIPROCAL = "reciprocal"
    R_PRODUCT = "r_product"
    R_RECIPROCAL = "r_reciprocal"

    @property
    def args(self) -> tuple[str, ...]:
        return _ARGS[self]

    @property
    def reciprocal(self) -> bool:
        return self in (SumFamily.RECIPROCAL, SumFamily.R_RECIPROCAL)

    @classmethod
    def parse(cls, name: str) -> "SumFamily":
        key = name.strip().lower().replace("-", "_")
        for fam in cls:
            if fam.value == key:
                return fam
        raise ValueError(f"unknown family {name!r}")


_ARGS = {
    SumFamily.LINEAR: ("n", "t"),
    SumFamily.LINEAR_ALT: ("n", "t"),
    SumFamily.FIFTH: ("n", "t"),
    SumFamily.FIFTH_ALT: ("n", "t"),
    SumFamily.FIVE_PRODUCT: ("n", "t", "m"),
    SumFamily.FIVE_PRODUCT_ALT: ("n", "t", "m"),
    SumFamily.FIVE_PRODUCT_WEIGHTED: ("n", "t", "m"),
    SumFamily.PENTAD_PROGRESSION: ("n", "t", "m", "s"),
    SumFamily.RECIPROCAL: ("n", "t", "m"),
    SumFamily.R_PRODUCT: ("n", "t", "m", "r"),
    SumFamily.R_RECIPROCAL: ("n", "t", "m", "r"),
}
