"""Pure-Python scan kernel: evaluates check links over scaled-int tables.

This is the fallback for (and the reference implementation of) the
compiled kernel in ``_fastkernel``.  Both produce identical outputs for
identical inputs; the compiled one is restricted to workloads whose scaled
magnitudes fit comfortably in 64-bit integers, while this one runs on
arbitrary Python integers.

See ``_checkdefs`` for the slack formulas and their orientations.

Block protocol
--------------
``eval_block`` processes the flat pair range [start, stop).  In cross mode
(mode 0) the flat pair id t encodes the vector pair (t // nv, t % nv); in
explicit mode (mode 1) it indexes the ``xs``/``ys`` arrays.  Per enabled
link (canonical order) it returns ``[hist, have, mn, mx, tight_total,
tight_ids]`` where ``hist`` maps exact integer slack -> count, ``mn``/``mx``
are the extreme slacks seen (valid iff ``have``), and ``tight_ids`` holds
the first ``k_witness`` flat pair ids with slack exactly 0.  Violations are
returned as ``(pair_id, link_pos, slack)`` plus an exact total count, so
merging blocks in generation order reproduces a sequential scan.
"""

from __future__ import annotations

# bit positions follow _checkdefs.CHECK_ORDER
_TARSKI, _MAL1, _MAL2, _NA1, _NA2, _STEPS, _COLLAPSE = (1 << i for i in range(7))

# links per check, canonical order
_LINK_COUNTS = (2, 2, 1, 2, 1, 8, 3)


def _link_layout(checks_mask: int):
    """(flat link offset per check, total link count) for a mask."""
    offsets = [-1] * 7
    total = 0
    for idx in range(7):
        if checks_mask & (1 << idx):
            offsets[idx] = total
            total += _LINK_COUNTS[idx]
    return offsets, total


def eval_block(
    mode: int,
    start: int,
    stop: int,
    nv: int,
    dim: int,
    ns: int,
    vec,
    xs,
    ys,
    norms,
    wk,
    plus_tab,
    minus_tab,
    fold_sum: int,
    two_n: int,
    two_d: int,
    checks_mask: int,
    skip_zero_mask: int,
    k_witness: int,
    viol_cap: int,
):
    offsets, total_links = _link_layout(checks_mask)
    hists = [{} for _ in range(total_links)]
    mins = [0] * total_links
    maxs = [0] * total_links
    have = [False] * total_links
    tight_totals = [0] * total_links
    tight_ids = [[] for _ in range(total_links)]
    violations = []
    violation_count = 0
    skipped = 0

    ns2 = ns * ns
    do_tarski = checks_mask & _TARSKI
    do_mal1 = checks_mask & _MAL1
    do_mal2 = checks_mask & _MAL2
    do_na1 = checks_mask & _NA1
    do_na2 = checks_mask & _NA2
    do_steps = checks_mask & _STEPS
    do_collapse = checks_mask & _COLLAPSE
    skip_mal = skip_zero_mask & (_MAL1 | _MAL2)

    def record(pos: int, slack: int, pair_id: int, is_eq: bool):
        nonlocal violation_count
        h = hists[pos]
        h[slack] = h.get(slack, 0) + 1
        if not have[pos]:
            have[pos] = True
            mins[pos] = maxs[pos] = slack
        elif slack < mins[pos]:
            mins[pos] = slack
        elif slack > maxs[pos]:
            maxs[pos] = slack
        if slack == 0:
            tight_totals[pos] += 1
            ids = tight_ids[pos]
            if len(ids) < k_witness:
                ids.append(pair_id)
        violated = (slack != 0) if is_eq else (slack < 0)
        if violated:
            violation_count += 1
            if len(violations) < viol_cap:
                violations.append((pair_id, pos, slack))

    for t in range(start, stop):
        if mode == 0:
            ix, iy = divmod(t, nv)
        else:
            ix, iy = xs[t], ys[t]
        ax = norms[ix]
        ay = norms[iy]

        # fold the plus/minus tables over the coordinates
        xoff = ix * dim
        yoff = iy * dim
        if dim == 1:
            base = wk[0] * ns2 + vec[xoff] * ns + vec[yoff]
            ap = plus_tab[base]
            am = minus_tab[base]
        elif fold_sum:
            ap = 0
            am = 0
            for k in range(dim):
                base = wk[k] * ns2 + vec[xoff + k] * ns + vec[yoff + k]
                ap += plus_tab[base]
                am += minus_tab[base]
        else:
            ap = 0
            am = 0
            for k in range(dim):
                base = wk[k] * ns2 + vec[xoff + k] * ns + vec[yoff + k]
                e = plus_tab[base]
                if e > ap:
                    ap = e
                e = minus_tab[base]
                if e > am:
                    am = e

        gap = ax - ay if ax >= ay else ay - ax
        s1 = ax + ay
        combo_max = ap if ap >= am else am
        combo_gap = ap - am if ap >= am else am - ap
        norm_max = ax if ax >= ay else ay
        norm_min = ay if ax >= ay else ax

        zero_pair = ax == 0 or ay == 0
        if zero_pair and (
            (do_mal1 and skip_mal & _MAL1) or (do_mal2 and skip_mal & _MAL2)
        ):
            skipped += 1

        if do_tarski:
            pos = offsets[0]
            record(pos, (am + ap - s1) - gap, t, True)
            record(pos + 1, s1 - combo_max, t, False)
        if do_mal1 and not (zero_pair and skip_mal & _MAL1):
            pos = offsets[1]
            record(pos, (ap + am - s1) - gap, t, False)
            record(pos + 1, s1 - combo_max, t, False)
        if do_mal2 and not (zero_pair and skip_mal & _MAL2):
            pos = offsets[2]
            record(pos, (s1 - combo_gap) - gap, t, False)
        if do_na1:
            pos = offsets[3]
            record(pos, 2 * two_d * combo_max - two_n * (s1 + gap), t, False)
            record(pos + 1, 2 * two_d * (norm_max - combo_max), t, False)
        if do_na2:
            pos = offsets[4]
            record(pos, two_n * (s1 - gap) - 2 * two_d * combo_gap, t, False)
        if do_steps:
            pos = offsets[5]
            record(pos, 2 * norm_max - (s1 + gap), t, True)
            record(pos + 1, two_d * combo_max - two_n * ax, t, False)
            record(pos + 2, two_d * combo_max - two_n * ay, t, False)
            record(pos + 3, two_d * combo_max - two_n * norm_max, t, False)
            record(pos + 4, 2 * norm_min - (s1 - gap), t, True)
            record(pos + 5, two_n * ax - two_d * combo_gap, t, False)
            record(pos + 6, two_n * ay - two_d * combo_gap, t, False)
            record(pos + 7, two_n * norm_min - two_d * combo_gap, t, False)
        if do_collapse:
            pos = offsets[6]
            record(pos, norm_max - combo_max, t, True)
            record(pos + 1, 2 * combo_max - (s1 + gap), t, True)
            record(pos + 2, 2 * (norm_max - combo_max), t, True)

    links_out = [
        [hists[i], have[i], mins[i], maxs[i], tight_totals[i], tight_ids[i]]
        for i in range(total_links)
    ]
    return (stop - start, skipped, links_out, violations, violation_count)
