"""Numba kernels for the simulation-loop hot paths.

Each game keeps its readable pure-Python rules in its own module; these
kernels re-implement just the two operations that dominate search time,
random playouts and all-children evaluation, on flat numpy-typed data.
They must match the reference implementations exactly (move order included)
and are cross-checked against them in tests/test_kernels.py.

Outcome codes: 0 = game continues / cap reached, 1 = first player wins,
2 = second player wins, 3 = draw.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64

U1 = np.uint64(1)
U0 = np.uint64(0)
_MIX1 = np.uint64(0x9E3779B97F4A7C15)
_MIX2 = np.uint64(0xBF58476D1CE4E5B9)
_MIX3 = np.uint64(0x94D049BB133111EB)


@njit(cache=True, inline="always")
def _splitmix_next(state):
    """Advance a splitmix64 state; returns (new_state, output)."""
    state = state + _MIX1
    z = state
    z = (z ^ (z >> np.uint64(30))) * _MIX2
    z = (z ^ (z >> np.uint64(27))) * _MIX3
    z = z ^ (z >> np.uint64(31))
    return state, z


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> U1) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True, inline="always")
def _lowest_bit(x):
    return x & (~x + U1)


# ----------------------------------------------------------------------
# Lines of Action
# ----------------------------------------------------------------------


@njit(cache=True, inline="always")
def _loa_connected(pieces, n, not_left, not_right, full):
    comp = _lowest_bit(pieces)
    while True:
        left = comp & not_left
        right = comp & not_right
        nb = (
            (right << U1)
            | (left >> U1)
            | (comp << n)
            | (comp >> n)
            | (right << (n + U1))
            | (left >> (n + U1))
            | (left << (n - U1))
            | (right >> (n - U1))
        ) & full
        grown = (comp | nb) & pieces
        if grown == comp:
            return comp == pieces
        comp = grown


@njit(cache=True)
def _loa_gen_moves(own, opp, n_int, line_mask, ray_len, ray_sq, path_mask, axis_of_dir, src_out, dst_out):
    occ = own | opp
    cnt = 0
    bb = own
    while bb != U0:
        b = _lowest_bit(bb)
        bb ^= b
        sq = _popcount(b - U1)
        for d in range(8):
            dist = _popcount(line_mask[sq, axis_of_dir[d]] & occ)
            if dist > ray_len[sq, d]:
                continue
            if path_mask[sq, d, dist] & opp != U0:
                continue
            dst = ray_sq[sq, d, dist - 1]
            if own & (U1 << np.uint64(dst)) != U0:
                continue
            src_out[cnt] = sq
            dst_out[cnt] = dst
            cnt += 1
    return cnt


@njit(cache=True)
def _loa_has_move(own, opp, n_int, line_mask, ray_len, ray_sq, path_mask, axis_of_dir):
    occ = own | opp
    bb = own
    while bb != U0:
        b = _lowest_bit(bb)
        bb ^= b
        sq = _popcount(b - U1)
        for d in range(8):
            dist = _popcount(line_mask[sq, axis_of_dir[d]] & occ)
            if dist > ray_len[sq, d]:
                continue
            if path_mask[sq, d, dist] & opp != U0:
                continue
            if own & (U1 << np.uint64(ray_sq[sq, d, dist - 1])) != U0:
                continue
            return True
    return False


@njit(cache=True)
def _loa_outcome(first, second, to_move, n, not_left, not_right, full,
                 line_mask, ray_len, ray_sq, path_mask, axis_of_dir):
    """Outcome code for a position where `1 - to_move` has just moved."""
    cf = _loa_connected(first, n, not_left, not_right, full)
    cs = _loa_connected(second, n, not_left, not_right, full)
    mover_code = 2 - to_move  # 1 if FIRST just moved, 2 if SECOND did
    if cf and cs:
        return mover_code
    if cf:
        return 1
    if cs:
        return 2
    if to_move == 0:
        own, opp = first, second
    else:
        own, opp = second, first
    if not _loa_has_move(own, opp, 0, line_mask, ray_len, ray_sq, path_mask, axis_of_dir):
        return mover_code
    return 0


@njit(cache=True)
def loa_playout(first, second, to_move, max_moves, move_count, game_cap, seed,
                n, not_left, not_right, full,
                line_mask, ray_len, ray_sq, path_mask, axis_of_dir):
    rng = seed
    src_buf = np.empty(520, np.int64)
    dst_buf = np.empty(520, np.int64)
    steps = 0
    while True:
        code = _loa_outcome(first, second, to_move, n, not_left, not_right, full,
                            line_mask, ray_len, ray_sq, path_mask, axis_of_dir)
        if code != 0:
            return code
        if game_cap >= 0 and move_count >= game_cap:
            return 3
        if steps >= max_moves:
            return 0
        if to_move == 0:
            own, opp = first, second
        else:
            own, opp = second, first
        cnt = _loa_gen_moves(own, opp, 0, line_mask, ray_len, ray_sq, path_mask, axis_of_dir,
                             src_buf, dst_buf)
        rng, z = _splitmix_next(rng)
        k = np.int64(z % np.uint64(cnt))
        own = (own ^ (U1 << np.uint64(src_buf[k]))) | (U1 << np.uint64(dst_buf[k]))
        opp = opp & ~(U1 << np.uint64(dst_buf[k]))
        if to_move == 0:
            first, second = own, opp
        else:
            first, second = opp, own
        to_move = 1 - to_move
        move_count += 1
        steps += 1


@njit(cache=True)
def loa_children(first, second, to_move, move_count, game_cap,
                 n, not_left, not_right, full,
                 line_mask, ray_len, ray_sq, path_mask, axis_of_dir,
                 src_out, dst_out, code_out):
    if to_move == 0:
        own, opp = first, second
    else:
        own, opp = second, first
    cnt = _loa_gen_moves(own, opp, 0, line_mask, ray_len, ray_sq, path_mask, axis_of_dir,
                         src_out, dst_out)
    for k in range(cnt):
        new_own = (own ^ (U1 << np.uint64(src_out[k]))) | (U1 << np.uint64(dst_out[k]))
        new_opp = opp & ~(U1 << np.uint64(dst_out[k]))
        if to_move == 0:
            f, s = new_own, new_opp
        else:
            f, s = new_opp, new_own
        code = _loa_outcome(f, s, 1 - to_move, n, not_left, not_right, full,
                            line_mask, ray_len, ray_sq, path_mask, axis_of_dir)
        if code == 0 and game_cap >= 0 and move_count + 1 >= game_cap:
            code = 3
        code_out[k] = code
    return cnt


# ----------------------------------------------------------------------
# Knightthrough
# ----------------------------------------------------------------------

_KT_LAST_FIRST = np.uint64(0xFF00000000000000)
_KT_LAST_SECOND = np.uint64(0x00000000000000FF)


@njit(cache=True)
def _kt_gen_moves(own, dests, ndests, src_out, dst_out):
    cnt = 0
    bb = own
    while bb != U0:
        b = _lowest_bit(bb)
        bb ^= b
        sq = _popcount(b - U1)
        for j in range(ndests[sq]):
            dst = dests[sq, j]
            if own & (U1 << np.uint64(dst)) == U0:
                src_out[cnt] = sq
                dst_out[cnt] = dst
                cnt += 1
    return cnt


@njit(cache=True)
def _kt_has_move(own, dests, ndests):
    bb = own
    while bb != U0:
        b = _lowest_bit(bb)
        bb ^= b
        sq = _popcount(b - U1)
        for j in range(ndests[sq]):
            if own & (U1 << np.uint64(dests[sq, j])) == U0:
                return True
    return False


@njit(cache=True)
def _kt_outcome(first, second, to_move, dests_first, ndests_first, dests_second, ndests_second):
    first_wins = (first & _KT_LAST_FIRST) != U0 or second == U0
    second_wins = (second & _KT_LAST_SECOND) != U0 or first == U0
    if to_move == 1:  # FIRST just moved
        if first_wins:
            return 1
        if second_wins:
            return 2
        if not _kt_has_move(second, dests_second, ndests_second):
            return 1
    else:
        if second_wins:
            return 2
        if first_wins:
            return 1
        if not _kt_has_move(first, dests_first, ndests_first):
            return 2
    return 0


@njit(cache=True)
def kt_playout(first, second, to_move, max_moves, seed,
               dests_first, ndests_first, dests_second, ndests_second):
    rng = seed
    src_buf = np.empty(260, np.int64)
    dst_buf = np.empty(260, np.int64)
    steps = 0
    while True:
        code = _kt_outcome(first, second, to_move, dests_first, ndests_first,
                           dests_second, ndests_second)
        if code != 0:
            return code
        if steps >= max_moves:
            return 0
        if to_move == 0:
            cnt = _kt_gen_moves(first, dests_first, ndests_first, src_buf, dst_buf)
        else:
            cnt = _kt_gen_moves(second, dests_second, ndests_second, src_buf, dst_buf)
        rng, z = _splitmix_next(rng)
        k = np.int64(z % np.uint64(cnt))
        sbit = U1 << np.uint64(src_buf[k])
        dbit = U1 << np.uint64(dst_buf[k])
        if to_move == 0:
            first = (first ^ sbit) | dbit
            second = second & ~dbit
        else:
            second = (second ^ sbit) | dbit
            first = first & ~dbit
        to_move = 1 - to_move
        steps += 1


@njit(cache=True)
def kt_children(first, second, to_move,
                dests_first, ndests_first, dests_second, ndests_second,
                src_out, dst_out, code_out):
    if to_move == 0:
        cnt = _kt_gen_moves(first, dests_first, ndests_first, src_out, dst_out)
    else:
        cnt = _kt_gen_moves(second, dests_second, ndests_second, src_out, dst_out)
    for k in range(cnt):
        sbit = U1 << np.uint64(src_out[k])
        dbit = U1 << np.uint64(dst_out[k])
        if to_move == 0:
            f = (first ^ sbit) | dbit
            s = second & ~dbit
        else:
            s = (second ^ sbit) | dbit
            f = first & ~dbit
        code_out[k] = _kt_outcome(f, s, 1 - to_move, dests_first, ndests_first,
                                  dests_second, ndests_second)
    return cnt


# ----------------------------------------------------------------------
# Gomoku
# ----------------------------------------------------------------------


@njit(cache=True, inline="always")
def _gomoku_wins(cells, n, move, stone):
    y = move // n
    x = move % n
    for a in range(4):
        if a == 0:
            dx, dy = 1, 0
        elif a == 1:
            dx, dy = 0, 1
        elif a == 2:
            dx, dy = 1, 1
        else:
            dx, dy = 1, -1
        run = 1
        cx, cy = x + dx, y + dy
        while 0 <= cx < n and 0 <= cy < n and cells[cy * n + cx] == stone:
            run += 1
            cx += dx
            cy += dy
        cx, cy = x - dx, y - dy
        while 0 <= cx < n and 0 <= cy < n and cells[cy * n + cx] == stone:
            run += 1
            cx -= dx
            cy -= dy
        if run == 5:
            return True
    return False


@njit(cache=True)
def gomoku_playout(cells, to_move, max_moves, seed, n):
    """`cells` is a scratch uint8 copy owned by the caller; it gets mutated."""
    rng = seed
    nsq = n * n
    empties = np.empty(nsq, np.int64)
    cnt = 0
    for i in range(nsq):
        if cells[i] == 0:
            empties[cnt] = i
            cnt += 1
    steps = 0
    while True:
        if steps >= max_moves:
            return 0
        rng, z = _splitmix_next(rng)
        k = np.int64(z % np.uint64(cnt))
        move = empties[k]
        stone = 1 if to_move == 0 else 2
        cells[move] = stone
        if _gomoku_wins(cells, n, move, stone):
            return stone
        cnt -= 1
        empties[k] = empties[cnt]
        if cnt == 0:
            return 3
        to_move = 1 - to_move
        steps += 1


@njit(cache=True)
def gomoku_children(cells, to_move, n, move_out, code_out):
    nsq = n * n
    stone = 1 if to_move == 0 else 2
    cnt = 0
    empty_total = 0
    for i in range(nsq):
        if cells[i] == 0:
            empty_total += 1
    for i in range(nsq):
        if cells[i] != 0:
            continue
        cells[i] = stone
        if _gomoku_wins(cells, n, i, stone):
            code = stone
        elif empty_total == 1:
            code = 3
        else:
            code = 0
        cells[i] = 0
        move_out[cnt] = i
        code_out[cnt] = code
        cnt += 1
    return cnt


# ----------------------------------------------------------------------
# Awari
# ----------------------------------------------------------------------


@njit(cache=True)
def _awari_outcome(holes, cap_f, cap_s, to_move, h, move_count, game_cap):
    nh = 2 * h
    all_low = True
    for i in range(nh):
        if holes[i] > 1:
            all_low = False
            break
    if not all_low:
        base = 0 if to_move == 0 else h
        has = False
        for i in range(h):
            if holes[base + i] > 0:
                has = True
                break
        if has:
            if game_cap >= 0 and move_count >= game_cap:
                return 3
            return 0
        rest = 0
        for i in range(nh):
            rest += holes[i]
        if to_move == 0:
            cap_s += rest
        else:
            cap_f += rest
    if cap_f > cap_s:
        return 1
    if cap_s > cap_f:
        return 2
    return 3


@njit(cache=True)
def awari_playout(holes, cap_f, cap_s, to_move, h, max_moves, move_count, game_cap, seed):
    """`holes` is a scratch int64 copy owned by the caller; it gets mutated."""
    rng = seed
    nh = 2 * h
    steps = 0
    own_moves = np.empty(h, np.int64)
    while True:
        code = _awari_outcome(holes, cap_f, cap_s, to_move, h, move_count, game_cap)
        if code != 0:
            return code
        if steps >= max_moves:
            return 0
        base = 0 if to_move == 0 else h
        cnt = 0
        for i in range(h):
            if holes[base + i] > 0:
                own_moves[cnt] = base + i
                cnt += 1
        rng, z = _splitmix_next(rng)
        origin = own_moves[np.int64(z % np.uint64(cnt))]
        counters = holes[origin]
        holes[origin] = 0
        g = origin
        for _ in range(counters):
            g = (g + 1) % nh
            holes[g] += 1
        opp_lo = h if to_move == 0 else 0
        captured = 0
        while opp_lo <= g < opp_lo + h and (holes[g] == 2 or holes[g] == 3):
            captured += holes[g]
            holes[g] = 0
            g = (g - 1) % nh
        if to_move == 0:
            cap_f += captured
        else:
            cap_s += captured
        to_move = 1 - to_move
        move_count += 1
        steps += 1


@njit(cache=True)
def awari_children(holes, cap_f, cap_s, to_move, h, move_count, game_cap, move_out, code_out):
    nh = 2 * h
    base = 0 if to_move == 0 else h
    scratch = np.empty(nh, np.int64)
    cnt = 0
    for i in range(h):
        origin = base + i
        if holes[origin] == 0:
            continue
        for j in range(nh):
            scratch[j] = holes[j]
        counters = scratch[origin]
        scratch[origin] = 0
        g = origin
        for _ in range(counters):
            g = (g + 1) % nh
            scratch[g] += 1
        opp_lo = h if to_move == 0 else 0
        captured = 0
        while opp_lo <= g < opp_lo + h and (scratch[g] == 2 or scratch[g] == 3):
            captured += scratch[g]
            scratch[g] = 0
            g = (g - 1) % nh
        f = cap_f + captured if to_move == 0 else cap_f
        s = cap_s + captured if to_move == 1 else cap_s
        move_out[cnt] = i
        code_out[cnt] = _awari_outcome(scratch, f, s, 1 - to_move, h, move_count + 1, game_cap)
        cnt += 1
    return cnt
