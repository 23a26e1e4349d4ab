"""Timing harness comparing EssBM with the full-ring Buchberger-Moeller run."""

from __future__ import annotations

import csv
import gc
import io
import itertools
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass

from .bma import PointSet, buchberger_moller
from .essbm import essbm
from .order import parse_order
from .rng import random_variety
from .verify import canonical_set, verify_result

CSV_HEADER = ("algorithm", "p", "n", "m", "order", "seed", "micros")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    p: int
    n: int
    m: int
    order: str
    seed: int
    micros: int

    @property
    def millis(self) -> float:
        return self.micros / 1000


class VerificationFailure(RuntimeError):
    pass


def _timed(fn, *args):
    # collector pauses would dominate millisecond-scale runs
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        out = fn(*args)
        t1 = time.perf_counter_ns()
    finally:
        if enabled:
            gc.enable()
    return out, (t1 - t0) // 1000


def _run_bma(v, order):
    return buchberger_moller(PointSet(v.points, v.p, order))


def run_instance(p: int, n: int, m: int, order_text: str, seed: int,
                 verify: bool = False) -> list[BenchRecord]:
    """Time both algorithms on the variety drawn from ``seed``."""
    v = random_variety(p, n, m, seed)
    order = parse_order(order_text, n)
    res, t_ess = _timed(essbm, v, order)
    (gb, _), t_bma = _timed(_run_bma, v, order)
    if verify:
        report = verify_result(res, v)
        if not report.passed:
            raise VerificationFailure(f"p={p} n={n} m={m} {order_text} seed={seed}:\n{report.render()}")
        if canonical_set(res.g) != canonical_set(gb):
            raise VerificationFailure(f"p={p} n={n} m={m} {order_text} seed={seed}: EssBM and BMA disagree")
    return [BenchRecord("essbm", p, n, m, order_text, seed, t_ess),
            BenchRecord("bma", p, n, m, order_text, seed, t_bma)]


def _cell(args):
    p, n, m, order_text, seeds, verify = args
    out = []
    for seed in seeds:
        out.extend(run_instance(p, n, m, order_text, seed, verify))
    return out


def warm_up(p: int = 3, n: int = 20, m: int = 5, order_text: str = "lex", seed: int = 0) -> None:
    run_instance(p, n, m, order_text, seed)


def check_grid(ps, ns, ms, orders) -> None:
    for p, n, m, order_text in itertools.product(ps, ns, ms, orders):
        if m > p ** n:
            raise ValueError(f"cell p={p} n={n} m={m}: more points than F_p^n holds")
        parse_order(order_text, n)


def run_bench(ps, ns, ms, orders, seeds: int = 10, base_seed: int = 0,
              verify: bool = False, jobs: int = 1) -> list[BenchRecord]:
    """Time both algorithms over the grid ``ps x ns x ms x orders``.

    Seed ``base_seed + s`` (``s < seeds``) selects the variety for every
    cell, and both algorithms see the same variety.  Records come back
    grouped by cell, then seed.  Serial runs visit the cells round-robin
    per seed so that slow drift in machine load spreads over all cells.
    With ``jobs > 1`` cells run in parallel processes and timings include
    contention.
    """
    check_grid(ps, ns, ms, orders)
    seed_list = [base_seed + s for s in range(seeds)]
    grid = list(itertools.product(ps, ns, ms, orders))
    if not grid or not seed_list:
        return []
    first = (*grid[0], seed_list[0])
    if jobs > 1:
        cells = [(*cell, seed_list, verify) for cell in grid]
        with ProcessPoolExecutor(jobs, initializer=warm_up, initargs=first) as pool:
            chunks = list(pool.map(_cell, cells))
        return [r for chunk in chunks for r in chunk]
    warm_up(*first)
    by_cell: dict[tuple, list[BenchRecord]] = {cell: [] for cell in grid}
    for seed in seed_list:
        for cell in grid:
            by_cell[cell].extend(run_instance(*cell, seed, verify))
    return [r for cell in grid for r in by_cell[cell]]


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(astuple(r))
    return buf.getvalue()


def coefficient_of_variation(values) -> float | None:
    """Sample standard deviation over mean; None for fewer than 2 values."""
    values = list(values)
    if len(values) < 2:
        return None
    mean = statistics.fmean(values)
    if mean == 0:
        return 0.0
    return statistics.stdev(values) / mean


def summarize(records) -> list[dict]:
    groups: dict[tuple, list[int]] = {}
    for r in records:
        groups.setdefault((r.algorithm, r.p, r.n, r.m, r.order), []).append(r.micros)
    rows = []
    for (alg, p, n, m, order), micros in groups.items():
        ms = [x / 1000 for x in micros]
        rows.append({
            "algorithm": alg, "p": p, "n": n, "m": m, "order": order,
            "runs": len(ms), "mean_ms": statistics.fmean(ms),
            "cov": coefficient_of_variation(ms),
        })
    return rows


def format_summary(rows) -> str:
    lines = ["algorithm,p,n,m,order,runs,mean_ms,cov"]
    for r in rows:
        cov = "NA" if r["cov"] is None else f"{r['cov']:.4f}"
        lines.append(f"{r['algorithm']},{r['p']},{r['n']},{r['m']},{r['order']},"
                     f"{r['runs']},{r['mean_ms']:.3f},{cov}")
    return "\n".join(lines) + "\n"
