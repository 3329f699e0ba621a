"""
Compiled sweeps over the lattice.

All kernels take plain numpy arrays indexed [i, j] (i along e1, j along e2)
and use the successor encoding 0 = right, 1 = up.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def value_sweep(weights, root_i, root_j):
    """
    Backward anti-diagonal sweep of G(v) = T(v, root).

    Vertices that cannot reach the root keep -inf. Ties go up.
    """
    nx, ny = weights.shape
    values = np.full((nx, ny), -np.inf)
    values[root_i, root_j] = 0.0
    for level in range(root_i + root_j - 1, -1, -1):
        lo = max(0, level - root_j)
        hi = min(root_i, level)
        for i in range(lo, hi + 1):
            j = level - i
            right = -np.inf
            if i < root_i:
                right = weights[i + 1, j] + values[i + 1, j]
            up = -np.inf
            if j < root_j:
                up = weights[i, j + 1] + values[i, j + 1]
            if up >= right:
                values[i, j] = up
            else:
                values[i, j] = right
    return values


@njit(cache=True)
def row_sweep(weights, next_weights, next_values, values, root_row):
    """
    One row of the backward value sweep, filled right to left in place.

    next_weights and next_values belong to row i + 1. In the root row the
    root is the last entry and next_values is all -inf. Per vertex the
    arithmetic is that of value_sweep.
    """
    ny = len(values)
    for j in range(ny - 1, -1, -1):
        if root_row and j == ny - 1:
            values[j] = 0.0
            continue
        right = next_weights[j] + next_values[j]
        up = -np.inf
        if j < ny - 1:
            up = weights[j + 1] + values[j + 1]
        if up >= right:
            values[j] = up
        else:
            values[j] = right


@njit(cache=True)
def corner_passage(weights):
    """
    T((0, 0), (nx-1, ny-1)) over a block, keeping two rolling rows.

    Arithmetic per vertex is the same as in value_sweep, so the result
    equals the value grid entry bit for bit.
    """
    nx, ny = weights.shape
    upper = np.empty(ny)
    current = np.empty(ny)
    upper[ny - 1] = 0.0
    for j in range(ny - 2, -1, -1):
        upper[j] = weights[nx - 1, j + 1] + upper[j + 1]
    for i in range(nx - 2, -1, -1):
        for j in range(ny - 1, -1, -1):
            right = weights[i + 1, j] + upper[j]
            up = -np.inf
            if j < ny - 1:
                up = weights[i, j + 1] + current[j + 1]
            if up >= right:
                current[j] = up
            else:
                current[j] = right
        upper, current = current, upper
    return upper[0]


@njit(cache=True)
def inorder(steps):
    """
    In-order traversal of the successor tree rooted at the top-right vertex.

    The e1-child (arriving horizontally) is visited before its parent and
    the e2-child after. Returns the linear ids in order and how many
    vertices were reached.
    """
    nx, ny = steps.shape
    order = np.empty(nx * ny, dtype=np.int64)
    stack = np.empty(nx + ny, dtype=np.int64)
    top = 0
    count = 0
    current = (nx - 1) * ny + (ny - 1)
    while True:
        while current >= 0:
            stack[top] = current
            top += 1
            ci = current // ny
            cj = current % ny
            if ci > 0 and steps[ci - 1, cj] == 0:
                current = current - ny
            else:
                current = -1
        if top == 0:
            break
        top -= 1
        node = stack[top]
        order[count] = node
        count += 1
        ni = node // ny
        nj = node % ny
        if nj > 0 and steps[ni, nj - 1] == 1:
            current = node - 1
        else:
            current = -1
    return order, count


@njit(cache=True)
def coalescence_sweep(steps, base_i, base_j):
    """Level at which each successor chain first meets the chain of base."""
    nx, ny = steps.shape
    on_chain = np.zeros((nx, ny), dtype=np.bool_)
    ci = base_i
    cj = base_j
    while True:
        on_chain[ci, cj] = True
        if ci == nx - 1 and cj == ny - 1:
            break
        if steps[ci, cj] == 1:
            cj += 1
        else:
            ci += 1

    levels = np.empty((nx, ny), dtype=np.int64)
    top_level = nx + ny - 2
    levels[nx - 1, ny - 1] = top_level
    for level in range(top_level - 1, -1, -1):
        lo = max(0, level - (ny - 1))
        hi = min(nx - 1, level)
        for i in range(lo, hi + 1):
            j = level - i
            if on_chain[i, j]:
                levels[i, j] = level
            elif steps[i, j] == 1:
                levels[i, j] = levels[i, j + 1]
            else:
                levels[i, j] = levels[i + 1, j]
    return levels


@njit(cache=True)
def follow_chain(steps, start_i, start_j):
    """Vertices of the successor chain from start to the top-right root."""
    nx, ny = steps.shape
    length = (nx - 1 - start_i) + (ny - 1 - start_j) + 1
    chain = np.empty((length, 2), dtype=np.int64)
    ci = start_i
    cj = start_j
    for k in range(length):
        chain[k, 0] = ci
        chain[k, 1] = cj
        if k == length - 1:
            break
        if steps[ci, cj] == 1:
            cj += 1
        else:
            ci += 1
    return chain
