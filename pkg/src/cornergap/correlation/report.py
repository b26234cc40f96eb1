from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactmath import to_exact_str
from .finite import finite_n_correlation
from .images import distance_product_check, image_configuration
from .omega import omega_asymptotic, omega_exact, signed_double_sum


def fmt_float(x: float) -> str:
    return format(x, ".15g")


@dataclass
class CorrelationReport:
    R: int
    v: int
    exact_value: Fraction
    double_sum_value: Fraction
    double_sum_sign: int
    asymptotic_value: float | None = None
    asymptotic_ratio: float | None = None
    distance_product: float | None = None
    distance_rel_error: float | None = None
    image_points: tuple = ()
    squared_distances: dict = field(default_factory=dict)
    finite_n_samples: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.exact_value == self.double_sum_value

    def to_dict(self) -> dict:
        out = {
            "R": self.R,
            "v": self.v,
            "exact": to_exact_str(self.exact_value),
            "double_sum": to_exact_str(self.double_sum_value),
            "double_sum_sign": self.double_sum_sign,
            "consistent": self.consistent,
            "image_points": [[p, q] for p, q in self.image_points],
            "squared_distances": {f"{i}-{j}": d for (i, j), d in sorted(self.squared_distances.items())},
            "finite_n": [{"n": n, "ratio": to_exact_str(r), "approx": fmt_float(float(r))} for n, r in self.finite_n_samples],
        }
        if self.asymptotic_value is not None:
            out["asymptotic"] = fmt_float(self.asymptotic_value)
            out["asymptotic_ratio"] = fmt_float(self.asymptotic_ratio)
            out["distance_product"] = fmt_float(self.distance_product)
            out["distance_rel_error"] = fmt_float(self.distance_rel_error)
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def build_report(R: int, v: int, finite_ns=()) -> CorrelationReport:
    exact = omega_exact(R, v)
    signed = signed_double_sum(R, v)
    config = image_configuration(R, v)
    report = CorrelationReport(
        R=R,
        v=v,
        exact_value=exact,
        double_sum_value=abs(signed),
        double_sum_sign=(signed > 0) - (signed < 0),
        image_points=config.points,
        squared_distances=dict(config.squared_distances),
    )
    if 3 * v - 2 * R > 0:
        asym = omega_asymptotic(R, v)
        check = distance_product_check(R, v)
        report.asymptotic_value = asym
        report.asymptotic_ratio = float(exact) / asym
        report.distance_product = check.rhs
        report.distance_rel_error = check.rel_error
    else:
        report.notes.append("gap touches or crosses the western line (3v <= 2R); asymptotic fields omitted")
    for n in finite_ns:
        report.finite_n_samples.append((n, finite_n_correlation(n, R, v)))
    return report
