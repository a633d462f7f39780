"""Seeded random algebra instances for the property suites."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ConcreteAlgebra, validate_algebra
from .groups import Bicharacter, GradingGroup


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneratorParams:
    arity: int = 2
    n_indices: int = 3
    dim_v: int = 0
    mode: str = "multiplicative"       # or "general"
    density: float = 0.3
    seed: int = 0
    group_orders: tuple[int, ...] = (2,)

    def __post_init__(self):
        if not 2 <= self.arity <= 3:
            raise ValueError("arity must be 2 or 3")
        if not 1 <= self.n_indices <= 8:
            raise ValueError("n_indices must be between 1 and 8")
        if not 0 <= self.dim_v <= 4:
            raise ValueError("dim_v must be between 0 and 4")
        if self.mode not in ("multiplicative", "general"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "multiplicative" and self.dim_v:
            raise ValueError("multiplicative mode requires dim_v = 0")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")


def _coeff(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))


def generate_random(params: GeneratorParams) -> ConcreteAlgebra:
    """Degree-first generation: degrees are drawn, then products only where the
    grading allows a target, so every instance validates by construction.
    Deterministic per seed."""
    rng = random.Random(params.seed)
    group = GradingGroup(params.group_orders)
    elements = group.elements()
    w_ids = tuple(f"e{i}" for i in range(1, params.n_indices + 1))
    v_ids = tuple(f"u{i}" for i in range(1, params.dim_v + 1))
    last_error = "no eligible product target under any degree assignment"
    for _attempt in range(25):
        degs = {i: rng.choice(elements) for i in w_ids}
        degs.update({i: rng.choice(elements) for i in v_ids})
        products: dict[tuple[str, ...], dict[str, Fraction]] = {}
        any_eligible = False

        def eligible(total, ids):
            return [j for j in ids if degs[j] == total]

        for args in itertools.product(w_ids, repeat=params.arity):
            total = group.sum(degs[a] for a in args)
            elig_w = eligible(total, w_ids)
            elig_v = eligible(total, v_ids) if params.mode == "general" else []
            if not (elig_w or elig_v):
                continue
            any_eligible = True
            if rng.random() < params.density:
                target = rng.choice(elig_w + elig_v)
                products[args] = {target: _coeff(rng)}

        if params.mode == "general" and v_ids:
            syms = list(w_ids) + [None]
            for pattern in itertools.product(syms, repeat=params.arity):
                v_slots = [k for k, s in enumerate(pattern) if s is None]
                if not v_slots or len(v_slots) == params.arity:
                    continue
                fills = list(itertools.product(v_ids, repeat=len(v_slots)))
                fill_totals = {}
                for fill in fills:
                    key = list(pattern)
                    for slot, vid in zip(v_slots, fill):
                        key[slot] = vid
                    fill_totals[tuple(key)] = group.sum(degs[a] for a in key)
                targets = sorted({j for total in fill_totals.values() for j in eligible(total, w_ids)})
                if not targets:
                    continue
                any_eligible = True
                if rng.random() < params.density:
                    j = rng.choice(targets)
                    for key, total in fill_totals.items():
                        if degs[j] == total:
                            products[key] = {j: _coeff(rng)}
            # the all-V pattern
            fills = list(itertools.product(v_ids, repeat=params.arity))
            fill_totals = {fill: group.sum(degs[a] for a in fill) for fill in fills}
            targets_w = sorted({j for total in fill_totals.values() for j in eligible(total, w_ids)})
            targets_v = sorted({j for total in fill_totals.values() for j in eligible(total, v_ids)})
            if targets_w or targets_v:
                any_eligible = True
                if rng.random() < params.density:
                    t = rng.choice(targets_w + targets_v)
                    for fill, total in fill_totals.items():
                        if degs[t] == total:
                            products[fill] = {t: _coeff(rng)}

        if params.density > 0 and not any_eligible:
            continue
        alg = ConcreteAlgebra.create(
            params.arity, group, Bicharacter.trivial(group),
            [(i, degs[i]) for i in w_ids], [(i, degs[i]) for i in v_ids], products,
        )
        report = validate_algebra(alg)
        if not report.ok:
            last_error = report.describe()
            continue
        return alg
    raise GenerationError(f"infeasible degree assignment after bounded retries: {last_error}")
