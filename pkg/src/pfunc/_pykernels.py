"""Pure-Python hot kernels.

All kernels work on *scaled* integers: a statistic is a list of numerators over
one shared denominator, a trial is a list of integer masses over another.  The
compiled twin in ``_ckernels.pyx`` must return identical results.
"""

NOT_P_FUNCTION = 0
EXACT = 1
CONSERVATIVE = 2


def level_groups(vals):
    """Indices grouped by equal value, groups in ascending value order."""
    order = sorted(range(len(vals)), key=vals.__getitem__)
    groups = []
    prev = None
    for i in order:
        v = vals[i]
        if groups and v == prev:
            groups[-1].append(i)
        else:
            groups.append([i])
            prev = v
    return groups


def cumulative_masses(vals, masses):
    """For every index i, the total mass of {j : vals[j] <= vals[i]}."""
    out = [0] * len(vals)
    total = 0
    for group in level_groups(vals):
        for i in group:
            total += masses[i]
        for i in group:
            out[i] = total
    return out


def is_canonic(vals, vden, masses, mden):
    """True iff vals[i]/vden == cumulative mass at i / mden for every i."""
    cum = cumulative_masses(vals, masses)
    for v, c in zip(vals, cum):
        if v * mden != c * vden:
            return False
    return True


def classify(vals, vden, masses, mden):
    """Scan the tail function P[f <= eps] at every jump point.

    The tail is a right-continuous step function of eps that only jumps at
    range values, so the checks at eps = 0 and at every positive range value
    decide all eps >= 0.  Returns ``(kind, eps_num, tail_num)``; the witness
    is eps_num/vden and tail_num/mden.  The first (smallest) violation wins;
    for conservative functions the smallest strict range point is reported.
    """
    total = 0
    zero_checked = False
    witness = None
    for group in level_groups(vals):
        v = vals[group[0]]
        if v > 0 and not zero_checked:
            zero_checked = True
            if total > 0:
                return NOT_P_FUNCTION, 0, total
        for i in group:
            total += masses[i]
        if v <= 0:
            continue
        lhs = total * vden
        rhs = v * mden
        if lhs > rhs:
            return NOT_P_FUNCTION, v, total
        if lhs < rhs and witness is None:
            witness = (v, total)
    if not zero_checked and total > 0:
        return NOT_P_FUNCTION, 0, total
    if witness is None:
        return EXACT, 0, 0
    return CONSERVATIVE, witness[0], witness[1]


def tail_mass(vals, masses, threshold):
    total = 0
    for v, m in zip(vals, masses):
        if v <= threshold:
            total += m
    return total


def scaled_min(vectors, factor):
    """factor * pointwise minimum of equally long integer vectors."""
    return [factor * min(column) for column in zip(*vectors)]
