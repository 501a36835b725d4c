# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel: same block protocol as ``_purekernel.eval_block``.

Restricted to workloads whose scaled magnitudes were proven by the caller
to fit in 64-bit arithmetic (the explorer checks the bound before choosing
this kernel); produces bit-identical aggregates to the pure kernel.
"""

_TARSKI = 1 << 0
_MAL1 = 1 << 1
_MAL2 = 1 << 2
_NA1 = 1 << 3
_NA2 = 1 << 4
_STEPS = 1 << 5
_COLLAPSE = 1 << 6

_LINK_COUNTS = (2, 2, 1, 2, 1, 8, 3)


cdef class _Agg:
    cdef dict hist
    cdef bint have
    cdef long long pos
    cdef long long mn
    cdef long long mx
    cdef long long tight_total
    cdef list tight_ids

    def __cinit__(self):
        self.hist = {}
        self.have = False
        self.pos = 0
        self.mn = 0
        self.mx = 0
        self.tight_total = 0
        self.tight_ids = []


cdef inline void _record(_Agg a, long long slack, long long pair_id,
                         bint is_eq, long long k_witness,
                         list violations, long long viol_cap,
                         long long* viol_count):
    cdef object key = slack
    cdef object prev = a.hist.get(key)
    cdef bint violated
    if prev is None:
        a.hist[key] = 1
    else:
        a.hist[key] = prev + 1
    if not a.have:
        a.have = True
        a.mn = slack
        a.mx = slack
    elif slack < a.mn:
        a.mn = slack
    elif slack > a.mx:
        a.mx = slack
    if slack == 0:
        a.tight_total += 1
        if len(a.tight_ids) < k_witness:
            a.tight_ids.append(pair_id)
        violated = False
    else:
        violated = is_eq or slack < 0
    if violated:
        viol_count[0] += 1
        if len(violations) < viol_cap:
            violations.append((pair_id, a.pos, slack))


def eval_block(int mode, long long start, long long stop, long long nv,
               int dim, int ns, long long[:] vec, long long[:] xs,
               long long[:] ys, long long[:] norms, long long[:] wk,
               long long[:] plus_tab, long long[:] minus_tab, int fold_sum,
               long long two_n, long long two_d, long long checks_mask,
               long long skip_zero_mask, long long k_witness,
               long long viol_cap):
    cdef int idx
    cdef long long total = 0
    cdef long long i
    cdef _Agg agg
    offsets = [-1] * 7
    for idx in range(7):
        if checks_mask & (1 << idx):
            offsets[idx] = total
            total += _LINK_COUNTS[idx]

    aggs = []
    for i in range(total):
        agg = _Agg()
        agg.pos = i
        aggs.append(agg)

    cdef list violations = []
    cdef long long viol_count = 0
    cdef long long skipped = 0

    cdef bint do_tarski = (checks_mask & _TARSKI) != 0
    cdef bint do_mal1 = (checks_mask & _MAL1) != 0
    cdef bint do_mal2 = (checks_mask & _MAL2) != 0
    cdef bint do_na1 = (checks_mask & _NA1) != 0
    cdef bint do_na2 = (checks_mask & _NA2) != 0
    cdef bint do_steps = (checks_mask & _STEPS) != 0
    cdef bint do_collapse = (checks_mask & _COLLAPSE) != 0
    cdef bint skip_mal1 = do_mal1 and (skip_zero_mask & _MAL1) != 0
    cdef bint skip_mal2 = do_mal2 and (skip_zero_mask & _MAL2) != 0

    cdef long long off_tarski = offsets[0]
    cdef long long off_mal1 = offsets[1]
    cdef long long off_mal2 = offsets[2]
    cdef long long off_na1 = offsets[3]
    cdef long long off_na2 = offsets[4]
    cdef long long off_steps = offsets[5]
    cdef long long off_collapse = offsets[6]

    cdef long long ns2 = <long long>ns * ns
    cdef long long t, ix, iy, xoff, yoff, base, e
    cdef long long ax, ay, ap, am
    cdef long long gap, s1, combo_max, combo_gap, norm_max, norm_min
    cdef bint zero_pair
    cdef int k

    for t in range(start, stop):
        if mode == 0:
            ix = t // nv
            iy = t - ix * nv
        else:
            ix = xs[t]
            iy = ys[t]
        ax = norms[ix]
        ay = norms[iy]

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
        if zero_pair and (skip_mal1 or skip_mal2):
            skipped += 1

        if do_tarski:
            _record(<_Agg>aggs[off_tarski], (am + ap - s1) - gap, t, True,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_tarski + 1], s1 - combo_max, t, False,
                    k_witness, violations, viol_cap, &viol_count)
        if do_mal1 and not (zero_pair and skip_mal1):
            _record(<_Agg>aggs[off_mal1], (ap + am - s1) - gap, t, False,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_mal1 + 1], s1 - combo_max, t, False,
                    k_witness, violations, viol_cap, &viol_count)
        if do_mal2 and not (zero_pair and skip_mal2):
            _record(<_Agg>aggs[off_mal2], (s1 - combo_gap) - gap, t, False,
                    k_witness, violations, viol_cap, &viol_count)
        if do_na1:
            _record(<_Agg>aggs[off_na1],
                    2 * two_d * combo_max - two_n * (s1 + gap), t, False,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_na1 + 1],
                    2 * two_d * (norm_max - combo_max), t, False,
                    k_witness, violations, viol_cap, &viol_count)
        if do_na2:
            _record(<_Agg>aggs[off_na2],
                    two_n * (s1 - gap) - 2 * two_d * combo_gap, t, False,
                    k_witness, violations, viol_cap, &viol_count)
        if do_steps:
            _record(<_Agg>aggs[off_steps], 2 * norm_max - (s1 + gap), t, True,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_steps + 1],
                    two_d * combo_max - two_n * ax, t, False,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_steps + 2],
                    two_d * combo_max - two_n * ay, t, False,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_steps + 3],
                    two_d * combo_max - two_n * norm_max, t, False,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_steps + 4],
                    2 * norm_min - (s1 - gap), t, True,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_steps + 5],
                    two_n * ax - two_d * combo_gap, t, False,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_steps + 6],
                    two_n * ay - two_d * combo_gap, t, False,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_steps + 7],
                    two_n * norm_min - two_d * combo_gap, t, False,
                    k_witness, violations, viol_cap, &viol_count)
        if do_collapse:
            _record(<_Agg>aggs[off_collapse], norm_max - combo_max, t, True,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_collapse + 1],
                    2 * combo_max - (s1 + gap), t, True,
                    k_witness, violations, viol_cap, &viol_count)
            _record(<_Agg>aggs[off_collapse + 2],
                    2 * (norm_max - combo_max), t, True,
                    k_witness, violations, viol_cap, &viol_count)

    links_out = []
    cdef _Agg a
    for i in range(total):
        a = <_Agg>aggs[i]
        links_out.append(
            [a.hist, a.have, a.mn, a.mx, a.tight_total, a.tight_ids]
        )
    return (stop - start, skipped, links_out, violations, viol_count)
