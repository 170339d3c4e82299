"""Types and weights exercised by the suite."""

from __future__ import annotations

from wallcrys.cartan import cartan_data, parse_type

ALL_TYPES = ["A1~1", "A2~1", "A3~1", "A5~2", "A7~2", "D4~1", "D5~1",
             "A4~2", "A6~2", "D3~2", "D4~2", "B3~1", "B4~1"]
RANK_MINIMAL = ["A1~1", "A5~2", "D4~1", "A4~2", "D3~2", "B3~1"]


def type_weights(types=ALL_TYPES):
    return [(name, lam) for name in types for lam in cartan_data(parse_type(name)).level1_weights]


TYPE_WEIGHTS = type_weights()
