"""Deterministic generation, violation scanning, and tightness search.

``generate`` enumerates or samples (x, y) vector pairs from a valuation-
stratified scalar grid; ``scan`` evaluates the requested checks on every
pair with exact arithmetic and aggregates slack histograms, extreme
slacks, tight witnesses, and violations; ``find_tight`` extracts the first
pairs achieving equality at one chosen link.

Exactness under the hood: all magnitudes appearing in a scan are scaled by
one common denominator D, turning every norm into an integer and every
link check into integer comparisons (see ``_checkdefs``).  Small scalar
pools precompute S x S tables of |s_i +/- s_j| weighted per coordinate;
larger pools fall back to per-pair Fraction arithmetic.  Blocks of pairs
may be evaluated in parallel (``ULTRACHAIN_THREADS``) and through either
kernel; the merged report is identical in every configuration because
aggregation is commutative and merging follows generation order.
"""

from __future__ import annotations

import os
from array import array
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from random import Random
from typing import Iterator, NamedTuple, Optional, Sequence

from . import _kernel
from ._checkdefs import (
    ARCH_CHECKS,
    CHECK_BIT,
    CHECK_ORDER,
    CHECKS,
    DEN_PLAIN,
    DEN_TWO_D,
    DEN_TWO_N,
    PRECONDITION_CHECKS,
    REL_EQ,
    ULTRA_CHECKS,
    fraction_slacks,
    link_key,
    ordered_links,
)
from .errors import GridTooLarge, NotUnitTwo, SpecMismatch
from .fields import FieldBackend, two_magnitude
from .reports import dumps, fraction_str
from .spaces import NormSpec, Vector
from .chains import norm_quadruple

_TABLE_POOL_LIMIT = 256
_CHUNK = 1 << 16
_VIOLATION_CAP = 32
_C64_HEADROOM = 1 << 62


@dataclass(frozen=True)
class GenConfig:
    """Reproducible description of one generation/scan workload."""

    field: FieldBackend
    spec: NormSpec = NormSpec()
    dim: int = 1
    seed: int = 0
    v_max: int = 2
    unit_bound: int = 1
    samples: int = 1000
    exhaustive: bool = False
    pair_ceiling: int = 10**6
    witnesses: int = 16

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if not 0 <= self.v_max <= 64:
            raise ValueError("v_max must lie in [0, 64]")
        if self.unit_bound < 1:
            raise ValueError("unit_bound must be at least 1")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit nonnegative integer")
        if self.pair_ceiling < 1:
            raise ValueError("pair_ceiling must be positive")
        if self.witnesses < 0:
            raise ValueError("witnesses must be nonnegative")
        if self.spec.weights and len(self.spec.weights) != self.dim:
            raise ValueError(
                f"{len(self.spec.weights)} weights for dimension {self.dim}"
            )

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.selector(),
            "norm": self.spec.selector(),
            "dim": self.dim,
            "seed": self.seed,
            "v_max": self.v_max,
            "unit_bound": self.unit_bound,
            "samples": self.samples,
            "mode": "exhaustive" if self.exhaustive else "random",
            "pair_ceiling": self.pair_ceiling,
            "witnesses": self.witnesses,
        }


class Violation(NamedTuple):
    check: str
    link: int
    x: Vector
    y: Vector
    slack: Fraction


@dataclass(frozen=True)
class ScanReport:
    """Aggregated results of one scan; serializes to the published schema."""

    config: GenConfig
    checks: tuple
    pairs_evaluated: int
    pairs_skipped: int
    violation_count: int
    violations: tuple
    slack: dict
    slack_min: dict
    slack_max: dict
    tight_total: dict
    tight_witnesses: dict

    @property
    def holds(self) -> bool:
        return self.violation_count == 0

    def to_json_dict(self) -> dict:
        slack_json = {}
        for key, hist in self.slack.items():
            values = sorted(hist)
            bucketed = {}
            overflow = 0
            for rank, value in enumerate(values):
                if rank < 64:
                    bucketed[fraction_str(value)] = hist[value]
                else:
                    overflow += hist[value]
            if overflow:
                bucketed["overflow"] = overflow
            slack_json[key] = bucketed
        return {
            "config": self.config.to_json_dict(),
            "checks": list(self.checks),
            "pairs_evaluated": self.pairs_evaluated,
            "pairs_skipped": self.pairs_skipped,
            "violation_count": self.violation_count,
            "violations": [
                {
                    "check": v.check,
                    "link": v.link,
                    "x": str(v.x),
                    "y": str(v.y),
                    "slack": fraction_str(v.slack),
                }
                for v in self.violations
            ],
            "slack": slack_json,
            "slack_min": {
                k: None if v is None else fraction_str(v)
                for k, v in self.slack_min.items()
            },
            "slack_max": {
                k: None if v is None else fraction_str(v)
                for k, v in self.slack_max.items()
            },
            "tight_total": dict(self.tight_total),
            "tight_witnesses": {
                k: [{"x": str(x), "y": str(y)} for x, y in pairs]
                for k, pairs in self.tight_witnesses.items()
            },
        }

    def to_json(self) -> str:
        return dumps(self.to_json_dict())


# ---------------------------------------------------------------------------
# scalar grids and deterministic drawing
# ---------------------------------------------------------------------------


def scalar_grid(field: FieldBackend, v_max: int, unit_bound: int) -> list:
    """Zero first, then valuation ascending, unit parts in their canonical
    order, positive before negative on signed backends."""
    units = field.unit_parts(unit_bound)
    grid = [field.zero()]
    exponents = range(-v_max, v_max + 1) if field.graded else (0,)
    for v in exponents:
        for u in units:
            grid.append(field.compose(v, u, False))
            if field.signed_units:
                grid.append(field.compose(v, u, True))
    return grid


def _draw_scalar_index(rng: Random, field: FieldBackend, v_max: int,
                       nunits: int) -> int:
    """Grid index of one random scalar.

    The valuation exponent is uniform on [-v_max, v_max] with an extra
    atom at zero (probability 1/(2*v_max+2)); unit part and sign are
    uniform.  Returns indices into scalar_grid's ordering, so random draws
    always land inside the corresponding exhaustive grid.
    """
    k = rng.randrange(2 * v_max + 2)
    if k == 2 * v_max + 1:
        return 0
    idx = rng.randrange(nunits)
    slot = k * nunits + idx if field.graded else idx
    if field.signed_units:
        return 1 + 2 * slot + rng.randrange(2)
    return 1 + slot


def _draw_vector_indices(rng: Random, field: FieldBackend, v_max: int,
                         nunits: int, dim: int) -> tuple:
    return tuple(
        _draw_scalar_index(rng, field, v_max, nunits) for _ in range(dim)
    )


def _exhaustive_vector_count(nscalars: int, dim: int) -> int:
    return nscalars**dim


def generate(cfg: GenConfig) -> Iterator[tuple[Vector, Vector]]:
    """Stream of (x, y) pairs: the exhaustive grid in lexicographic order,
    or a seed-reproducible random sample."""
    grid = scalar_grid(cfg.field, cfg.v_max, cfg.unit_bound)
    if cfg.exhaustive:
        nv = _exhaustive_vector_count(len(grid), cfg.dim)
        if nv * nv > cfg.pair_ceiling:
            raise GridTooLarge(
                f"{nv}^2 = {nv * nv} ordered pairs exceed the ceiling "
                f"{cfg.pair_ceiling}"
            )
        vectors = [
            Vector(cfg.field, coords)
            for coords in product(grid, repeat=cfg.dim)
        ]
        for x in vectors:
            for y in vectors:
                yield (x, y)
    else:
        rng = Random(cfg.seed)
        nunits = len(cfg.field.unit_parts(cfg.unit_bound))
        for _ in range(cfg.samples):
            xi = _draw_vector_indices(rng, cfg.field, cfg.v_max, nunits, cfg.dim)
            yi = _draw_vector_indices(rng, cfg.field, cfg.v_max, nunits, cfg.dim)
            yield (
                Vector(cfg.field, tuple(grid[i] for i in xi)),
                Vector(cfg.field, tuple(grid[i] for i in yi)),
            )


# ---------------------------------------------------------------------------
# scan machinery
# ---------------------------------------------------------------------------


def _validate_checks(cfg: GenConfig, checks) -> tuple:
    requested = tuple(c for c in CHECK_ORDER if c in set(checks))
    unknown = set(checks) - set(CHECK_ORDER)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    if not requested:
        raise ValueError("no checks requested")
    non_arch = cfg.field.is_non_archimedean
    for check in requested:
        if check in ARCH_CHECKS and non_arch:
            raise SpecMismatch(
                f"{check} is an Archimedean baseline check; "
                f"{cfg.field.selector()} is ultrametric"
            )
        if check in ULTRA_CHECKS and not non_arch:
            raise SpecMismatch(
                f"{check} needs an ultrametric backend, not "
                f"{cfg.field.selector()}"
            )
    if "tarski" in requested and cfg.dim != 1:
        raise SpecMismatch("the scalar identity check runs at dim 1 only")
    two = Fraction(1)
    if any(c in ULTRA_CHECKS for c in requested):
        two = two_magnitude(cfg.field)  # CharacteristicTwo surfaces here
        if "collapse" in requested and two != 1:
            raise NotUnitTwo(
                f"collapse requires |2| = 1, but |2| = {fraction_str(two)} "
                f"in {cfg.field.selector()}"
            )
    return requested, two


def _weight_layout(cfg: GenConfig):
    """Distinct weights and the per-coordinate weight-table index."""
    weights = [cfg.spec.weight(k) for k in range(cfg.dim)]
    if cfg.spec.kind in ("l1", "linf"):
        weights = [Fraction(1)] * cfg.dim
    distinct = sorted(set(weights))
    index = {w: i for i, w in enumerate(distinct)}
    return distinct, [index[w] for w in weights]


class _Workload(NamedTuple):
    mode: int
    npairs: int
    nv: int
    vec: Sequence[int]  # flat scalar-index array, nv * dim
    xs: Optional[Sequence[int]]
    ys: Optional[Sequence[int]]


def _build_workload(cfg: GenConfig, nscalars: int) -> _Workload:
    if cfg.exhaustive:
        nv = _exhaustive_vector_count(nscalars, cfg.dim)
        if nv * nv > cfg.pair_ceiling:
            raise GridTooLarge(
                f"{nv}^2 = {nv * nv} ordered pairs exceed the ceiling "
                f"{cfg.pair_ceiling}"
            )
        vec = [0] * (nv * cfg.dim)
        pos = 0
        for coords in product(range(nscalars), repeat=cfg.dim):
            for c in coords:
                vec[pos] = c
                pos += 1
        return _Workload(0, nv * nv, nv, vec, None, None)
    rng = Random(cfg.seed)
    seen: dict[tuple, int] = {}
    vec: list[int] = []
    xs, ys = [], []
    nunits = len(cfg.field.unit_parts(cfg.unit_bound))
    for _ in range(cfg.samples):
        for out in (xs, ys):
            key = _draw_vector_indices(rng, cfg.field, cfg.v_max, nunits, cfg.dim)
            vid = seen.get(key)
            if vid is None:
                vid = len(seen)
                seen[key] = vid
                vec.extend(key)
            out.append(vid)
    return _Workload(1, cfg.samples, len(seen), vec, xs, ys)


def _scaled_tables(grid, field, distinct_weights):
    """(D, abs/plus/minus int tables flattened per weight, max entry)."""
    ns = len(grid)
    mag = [field.abs_value(s) for s in grid]
    plus_frac = [[None] * (ns * ns) for _ in distinct_weights]
    minus_frac = [[None] * (ns * ns) for _ in distinct_weights]
    abs_frac = [[None] * ns for _ in distinct_weights]
    dens = set()
    sums = [[None] * ns for _ in range(ns)]
    for i in range(ns):
        for j in range(ns):
            sums[i][j] = field.abs_value(field.add(grid[i], grid[j]))
    diffs = [[None] * ns for _ in range(ns)]
    for i in range(ns):
        for j in range(ns):
            diffs[i][j] = field.abs_value(field.sub(grid[i], grid[j]))
    for w_idx, w in enumerate(distinct_weights):
        at = abs_frac[w_idx]
        pt = plus_frac[w_idx]
        mt = minus_frac[w_idx]
        for i in range(ns):
            v = w * mag[i]
            at[i] = v
            dens.add(v.denominator)
            row = i * ns
            for j in range(ns):
                v = w * sums[i][j]
                pt[row + j] = v
                dens.add(v.denominator)
                v = w * diffs[i][j]
                mt[row + j] = v
                dens.add(v.denominator)
    d = lcm(*dens) if dens else 1
    max_entry = 0
    abs_tab, plus_tab, minus_tab = [], [], []
    for w_idx in range(len(distinct_weights)):
        for v in abs_frac[w_idx]:
            iv = int(v * d)
            abs_tab.append(iv)
            if iv > max_entry:
                max_entry = iv
        for v in plus_frac[w_idx]:
            iv = int(v * d)
            plus_tab.append(iv)
            if iv > max_entry:
                max_entry = iv
        for v in minus_frac[w_idx]:
            iv = int(v * d)
            minus_tab.append(iv)
            if iv > max_entry:
                max_entry = iv
    return d, abs_tab, plus_tab, minus_tab, max_entry


def _vector_norms(workload: _Workload, abs_tab, wk, ns, dim, fold_sum):
    norms = [0] * workload.nv
    vec = workload.vec
    for v in range(workload.nv):
        off = v * dim
        if fold_sum:
            total = 0
            for k in range(dim):
                total += abs_tab[wk[k] * ns + vec[off + k]]
        else:
            total = 0
            for k in range(dim):
                e = abs_tab[wk[k] * ns + vec[off + k]]
                if e > total:
                    total = e
        norms[v] = total
    return norms


def _thread_count() -> int:
    raw = os.environ.get("ULTRACHAIN_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    if n < 1:
        raise ValueError("ULTRACHAIN_THREADS must be a positive integer")
    return n


def _merge_blocks(results, total_links, k_witness):
    pairs = skipped = violation_count = 0
    hists = [{} for _ in range(total_links)]
    mins = [None] * total_links
    maxs = [None] * total_links
    tight_totals = [0] * total_links
    tight_ids = [[] for _ in range(total_links)]
    violations = []
    for block_pairs, block_skipped, links_out, block_viol, block_count in results:
        pairs += block_pairs
        skipped += block_skipped
        violation_count += block_count
        for pos in range(total_links):
            hist, have, mn, mx, tight_total, ids = links_out[pos]
            if have:
                target = hists[pos]
                for key, count in hist.items():
                    target[key] = target.get(key, 0) + count
                if mins[pos] is None or mn < mins[pos]:
                    mins[pos] = mn
                if maxs[pos] is None or mx > maxs[pos]:
                    maxs[pos] = mx
            tight_totals[pos] += tight_total
            room = k_witness - len(tight_ids[pos])
            if room > 0:
                tight_ids[pos].extend(ids[:room])
        if len(violations) < _VIOLATION_CAP:
            violations.extend(block_viol[: _VIOLATION_CAP - len(violations)])
    return pairs, skipped, hists, mins, maxs, tight_totals, tight_ids, violations, violation_count


def _eval_direct_block(start, stop, workload, grid, cfg, weights, two,
                       requested, checks_mask, k_witness):
    """Per-pair Fraction evaluation for pools too large to tabulate.

    Mirrors the kernels' output protocol with Fraction slack keys.
    """
    from ._purekernel import _link_layout

    total_links = _link_layout(checks_mask)[1]
    hists = [{} for _ in range(total_links)]
    mins = [None] * total_links
    maxs = [None] * total_links
    tight_totals = [0] * total_links
    tight_ids = [[] for _ in range(total_links)]
    violations = []
    violation_count = 0
    skipped = 0
    field = cfg.field
    dim = cfg.dim
    vec = workload.vec
    fold_sum = cfg.spec.kind == "l1"
    mag = [field.abs_value(s) for s in grid]

    def vec_norm(vid):
        off = vid * dim
        vals = (weights[k] * mag[vec[off + k]] for k in range(dim))
        return sum(vals, Fraction(0)) if fold_sum else max(vals)

    norm_cache = {}

    def cached_norm(vid):
        n = norm_cache.get(vid)
        if n is None:
            n = vec_norm(vid)
            norm_cache[vid] = n
        return n

    for t in range(start, stop):
        if workload.mode == 0:
            ix, iy = divmod(t, workload.nv)
        else:
            ix, iy = workload.xs[t], workload.ys[t]
        nx, ny = cached_norm(ix), cached_norm(iy)
        xoff, yoff = ix * dim, iy * dim
        plus_vals = (
            weights[k]
            * field.abs_value(field.add(grid[vec[xoff + k]], grid[vec[yoff + k]]))
            for k in range(dim)
        )
        minus_vals = (
            weights[k]
            * field.abs_value(field.sub(grid[vec[xoff + k]], grid[vec[yoff + k]]))
            for k in range(dim)
        )
        if fold_sum:
            nplus = sum(plus_vals, Fraction(0))
            nminus = sum(minus_vals, Fraction(0))
        else:
            nplus = max(plus_vals)
            nminus = max(minus_vals)
        zero_pair = nx == 0 or ny == 0
        pos = 0
        skipped_here = False
        for check in requested:
            nlinks = len(CHECKS[check])
            if check in PRECONDITION_CHECKS and zero_pair:
                skipped_here = True
                pos += nlinks
                continue
            slacks = fraction_slacks(check, nx, ny, nplus, nminus, two)
            for i, slack in enumerate(slacks):
                p = pos + i
                h = hists[p]
                h[slack] = h.get(slack, 0) + 1
                if mins[p] is None or slack < mins[p]:
                    mins[p] = slack
                if maxs[p] is None or slack > maxs[p]:
                    maxs[p] = slack
                if slack == 0:
                    tight_totals[p] += 1
                    if len(tight_ids[p]) < k_witness:
                        tight_ids[p].append(t)
                is_eq = CHECKS[check][i].rel_kind == REL_EQ
                violated = (slack != 0) if is_eq else (slack < 0)
                if violated:
                    violation_count += 1
                    if len(violations) < _VIOLATION_CAP:
                        violations.append((t, p, slack))
            pos += nlinks
        if skipped_here:
            skipped += 1
    links_out = [
        [hists[i], mins[i] is not None, mins[i], maxs[i], tight_totals[i], tight_ids[i]]
        for i in range(total_links)
    ]
    return (stop - start, skipped, links_out, violations, violation_count)


def scan(cfg: GenConfig, checks) -> ScanReport:
    """Evaluate the requested checks on every generated pair.

    The report is identical for any thread count and either kernel: blocks
    are merged in generation order and all aggregation is commutative.
    """
    requested, two = _validate_checks(cfg, checks)
    checks_mask = 0
    for check in requested:
        checks_mask |= CHECK_BIT[check]
    skip_mask = 0
    for check in PRECONDITION_CHECKS:
        if check in requested:
            skip_mask |= CHECK_BIT[check]

    grid = scalar_grid(cfg.field, cfg.v_max, cfg.unit_bound)
    ns = len(grid)
    workload = _build_workload(cfg, ns)
    distinct_weights, wk = _weight_layout(cfg)
    weights = [distinct_weights[w] for w in wk]
    fold_sum = 1 if cfg.spec.kind == "l1" else 0
    # validates weight/backend compatibility once up front
    if workload.nv:
        probe = Vector(cfg.field, tuple(grid[i] for i in workload.vec[: cfg.dim]))
        norm_quadruple(probe, probe, cfg.spec)

    k_witness = cfg.witnesses
    two_n, two_d = two.numerator, two.denominator
    links = ordered_links(requested)
    total_links = len(links)

    table_path = ns <= _TABLE_POOL_LIMIT
    if table_path:
        d, abs_tab, plus_tab, minus_tab, max_entry = _scaled_tables(
            grid, cfg.field, distinct_weights
        )
        norms = _vector_norms(workload, abs_tab, wk, ns, cfg.dim, fold_sum)
        norm_bound = max_entry * (cfg.dim if fold_sum else 1)
        eligible = (
            8 * max(two_n, two_d, 1) * max(norm_bound, 1) < _C64_HEADROOM
        )
        use_fast = _kernel.have_fast() and eligible
        if use_fast:
            vec_a = array("q", workload.vec)
            xs_a = array("q", workload.xs) if workload.xs is not None else array("q")
            ys_a = array("q", workload.ys) if workload.ys is not None else array("q")
            norms_a = array("q", norms)
            wk_a = array("q", wk)
            plus_a = array("q", plus_tab)
            minus_a = array("q", minus_tab)

            def run_block(bounds):
                return _kernel.eval_block_fast(
                    workload.mode, bounds[0], bounds[1], workload.nv,
                    cfg.dim, ns, vec_a, xs_a, ys_a, norms_a, wk_a,
                    plus_a, minus_a, fold_sum, two_n, two_d,
                    checks_mask, skip_mask, k_witness, _VIOLATION_CAP,
                )
        else:

            def run_block(bounds):
                return _kernel.eval_block_pure(
                    workload.mode, bounds[0], bounds[1], workload.nv,
                    cfg.dim, ns, workload.vec, workload.xs, workload.ys,
                    norms, wk, plus_tab, minus_tab, fold_sum, two_n, two_d,
                    checks_mask, skip_mask, k_witness, _VIOLATION_CAP,
                )
    else:
        d = 1

        def run_block(bounds):
            return _eval_direct_block(
                bounds[0], bounds[1], workload, grid, cfg, weights, two,
                requested, checks_mask, k_witness,
            )

    bounds = [
        (s, min(s + _CHUNK, workload.npairs))
        for s in range(0, workload.npairs, _CHUNK)
    ]
    threads = _thread_count()
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_block, bounds))
    else:
        results = [run_block(b) for b in bounds]

    (pairs, skipped, hists, mins, maxs, tight_totals,
     tight_ids, violations, violation_count) = _merge_blocks(
        results, total_links, k_witness
    )

    if table_path:
        den_of = {
            DEN_PLAIN: d,
            DEN_TWO_N: two_n * d,
            DEN_TWO_D: two_d * d,
        }

        def to_fraction(pos, value):
            check, i = links[pos]
            return Fraction(value, den_of[CHECKS[check][i].den_kind])
    else:

        def to_fraction(pos, value):
            return value

    def pair_vectors(t):
        if workload.mode == 0:
            ix, iy = divmod(t, workload.nv)
        else:
            ix, iy = workload.xs[t], workload.ys[t]
        return (_vector_at(cfg, grid, workload, ix),
                _vector_at(cfg, grid, workload, iy))

    slack, slack_min, slack_max = {}, {}, {}
    tight_total, tight_witnesses = {}, {}
    for pos, (check, i) in enumerate(links):
        key = link_key(check, i)
        slack[key] = {
            to_fraction(pos, v): c for v, c in hists[pos].items()
        }
        slack_min[key] = (
            None if mins[pos] is None else to_fraction(pos, mins[pos])
        )
        slack_max[key] = (
            None if maxs[pos] is None else to_fraction(pos, maxs[pos])
        )
        tight_total[key] = tight_totals[pos]
        tight_witnesses[key] = tuple(pair_vectors(t) for t in tight_ids[pos])

    report_violations = tuple(
        Violation(
            check=links[pos][0],
            link=links[pos][1],
            x=pair_vectors(t)[0],
            y=pair_vectors(t)[1],
            slack=to_fraction(pos, raw),
        )
        for t, pos, raw in violations
    )

    return ScanReport(
        config=cfg,
        checks=requested,
        pairs_evaluated=pairs,
        pairs_skipped=skipped,
        violation_count=violation_count,
        violations=report_violations,
        slack=slack,
        slack_min=slack_min,
        slack_max=slack_max,
        tight_total=tight_total,
        tight_witnesses=tight_witnesses,
    )


def _vector_at(cfg: GenConfig, grid, workload: _Workload, vid: int) -> Vector:
    off = vid * cfg.dim
    return Vector(
        cfg.field, tuple(grid[workload.vec[off + k]] for k in range(cfg.dim))
    )


def find_tight(cfg: GenConfig, chain: str, link: int):
    """First cfg.witnesses pairs (generation order) tight at chain:link."""
    if chain not in CHECKS:
        raise ValueError(f"unknown check {chain!r}")
    if not 0 <= link < len(CHECKS[chain]):
        raise ValueError(
            f"{chain} has {len(CHECKS[chain])} links; index {link} is out of range"
        )
    if cfg.witnesses == 0:
        return []
    report = scan(cfg, {chain})
    return list(report.tight_witnesses[link_key(chain, link)])
