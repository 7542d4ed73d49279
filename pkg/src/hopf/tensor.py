"""
Sparse elements of tensor powers H^(x)n.

An element is a dict mapping index tuples (i_1, ..., i_n) to nonzero
scalars, meaning the sum of c * e_{i_1} (x) ... (x) e_{i_n}. Twists,
cocycles and the A(k, e) construction all compute in this form.
"""

from typing import Dict, Iterable, List, Sequence, Tuple

from src.field.cyclotomic import CyclotomicContext, CyclotomicElement
from src.linalg.matrix import Matrix, Vector

TensorElement = Dict[Tuple[int, ...], CyclotomicElement]


def _accumulate(result: TensorElement, key: Tuple[int, ...], value: CyclotomicElement):
    current = result.get(key)
    total = value if current is None else current + value
    if total:
        result[key] = total
    elif current is not None:
        del result[key]


def pure_tensor(*vectors: Sequence[CyclotomicElement]) -> TensorElement:
    """e.g. pure_tensor(x, y) = x (x) y."""
    partial = [((), None)]
    for vector in vectors:
        nonzero = [(i, c) for i, c in enumerate(vector) if c]
        partial = [(key + (i,), c if value is None else value * c)
                   for key, value in partial for i, c in nonzero]
    return {key: value for key, value in partial if value is not None}


def basis_tensor(ctx: CyclotomicContext, *indices: int) -> TensorElement:
    return {tuple(indices): ctx.one}


def tensor_add(a: TensorElement, b: TensorElement) -> TensorElement:
    result = dict(a)
    for key, value in b.items():
        _accumulate(result, key, value)
    return result


def tensor_sub(a: TensorElement, b: TensorElement) -> TensorElement:
    result = dict(a)
    for key, value in b.items():
        _accumulate(result, key, -value)
    return result


def tensor_scale(c, a: TensorElement) -> TensorElement:
    if not c:
        return {}
    return {key: c * value for key, value in a.items()}


def tensor_multiply(algebras: Sequence, a: TensorElement, b: TensorElement) -> TensorElement:
    """
    Componentwise product in A_1 (x) ... (x) A_n.

    Args:
        algebras: One AlgebraData per slot (a single algebra may be repeated)
        a: Left factor
        b: Right factor
    """
    result: TensorElement = {}
    for left, x in a.items():
        for right, y in b.items():
            partial = [((), x * y)]
            for slot, (i, j) in enumerate(zip(left, right)):
                terms = algebras[slot].mult_terms.get((i, j))
                if not terms:
                    partial = []
                    break
                partial = [(key + (k,), value * c) for key, value in partial for k, c in terms]
            for key, value in partial:
                _accumulate(result, key, value)
    return result


def apply_comult(h, t: TensorElement, slot: int) -> TensorElement:
    """Apply the comultiplication of h at one slot, growing the tensor by one."""
    result: TensorElement = {}
    for key, value in t.items():
        for j, k, c in h.comult_terms[key[slot]]:
            _accumulate(result, key[:slot] + (j, k) + key[slot + 1:], value * c)
    return result


def apply_counit(h, t: TensorElement, slot: int) -> TensorElement:
    """Apply the counit of h at one slot, shrinking the tensor by one."""
    result: TensorElement = {}
    for key, value in t.items():
        e = h.counit[key[slot]]
        if e:
            _accumulate(result, key[:slot] + key[slot + 1:], value * e)
    return result


def apply_linear(matrix: Matrix, t: TensorElement, slot: int) -> TensorElement:
    """Apply a linear map (columns are images of basis vectors) at one slot."""
    result: TensorElement = {}
    for key, value in t.items():
        column = matrix.column(key[slot])
        for r, c in enumerate(column):
            if c:
                _accumulate(result, key[:slot] + (r,) + key[slot + 1:], value * c)
    return result


def multiply_slots(algebra, t: TensorElement, slot: int) -> TensorElement:
    """Multiply slots slot and slot + 1 together."""
    result: TensorElement = {}
    for key, value in t.items():
        terms = algebra.mult_terms.get((key[slot], key[slot + 1]))
        if terms:
            for k, c in terms:
                _accumulate(result, key[:slot] + (k,) + key[slot + 2:], value * c)
    return result


def iterated_comult(h, vector: Sequence[CyclotomicElement], n: int) -> TensorElement:
    """
    The left-nested n-fold coproduct x_1 (x) ... (x) x_n of a vector.

    n = 1 returns the vector itself as a one-slot tensor.
    """
    t = pure_tensor(vector)
    for _ in range(1, n):
        t = apply_comult(h, t, 0)
    return t


def permute(t: TensorElement, order: Sequence[int]) -> TensorElement:
    """Reorder slots: slot s of the result is slot order[s] of t."""
    return {tuple(key[s] for s in order): value for key, value in t.items()}


def to_dense(ctx: CyclotomicContext, t: TensorElement, dims: Sequence[int]) -> Vector:
    """Row-major flattening: (i_1, ..., i_n) -> ((i_1 * d_2) + i_2) * d_3 + ..."""
    size = 1
    for d in dims:
        size *= d
    dense = [ctx.zero] * size
    for key, value in t.items():
        dense[flat_index(key, dims)] = value
    return tuple(dense)


def flat_index(key: Sequence[int], dims: Sequence[int]) -> int:
    index = 0
    for i, d in zip(key, dims):
        index = index * d + i
    return index


def from_dense(vector: Sequence[CyclotomicElement], dims: Sequence[int]) -> TensorElement:
    result: TensorElement = {}
    for flat, value in enumerate(vector):
        if value:
            key: List[int] = []
            rest = flat
            for d in reversed(dims):
                key.append(rest % d)
                rest //= d
            result[tuple(reversed(key))] = value
    return result


def contract(t: TensorElement, forms: Iterable) -> CyclotomicElement:
    """Evaluate (f_1 (x) ... (x) f_n)(t) for coordinate covectors f_s."""
    forms = list(forms)
    total = None
    for key, value in t.items():
        term = value
        for form, i in zip(forms, key):
            c = form[i]
            if not c:
                term = None
                break
            term = term * c
        if term is not None:
            total = term if total is None else total + term
    if total is None:
        return forms[0][0].context.zero
    return total
