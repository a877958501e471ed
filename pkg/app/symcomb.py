"""
Комбинаторика симметрической группы: длины, приведенные слова, подгруппы Юнга,
выделенные представители смежных и двойных смежных классов, разбиение Деодара.

Перестановки записываются в однострочной нотации σ(1),...,σ(n) с единицы.

>>> perm_length((3, 2, 1))
3
>>> reduced_word((2, 3, 1))
[1, 2]
>>> sorted(young_generators((2, 2)))
[1, 3]
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Dict, FrozenSet, List, NewType, Sequence, Tuple

logger = logging.getLogger(__name__)

# перестановка в однострочной нотации, значения 1..n
Perm = NewType("Perm", Tuple[int, ...])

# композиция n: положительные части с суммой n
Composition = NewType("Composition", Tuple[int, ...])


class CompositionError(ValueError):
    """Некорректная композиция или несовпадение n"""


@dataclass
class DeodharSplit:
    """Разбиение D_λ = A_i(λ) ∪ τ_i A_i(λ) ∪ B_i(λ)"""
    a_set: List[Perm]
    tau_a_set: List[Perm]
    b_set: List[Perm]
    # для σ из B_i(λ): индекс j = σ⁻¹(i), τ_i σ = σ τ_j
    b_index: Dict[Perm, int] = field(default_factory=dict)


@dataclass
class DoubleCosetDatum:
    """Выделенный представитель π двойного класса S_μ π S_λ и данные ν(π)"""
    rep: Perm
    nu_generators: FrozenSet[int]
    nu: Composition


# --- Перестановки ---

def identity(n: int) -> Perm:
    return Perm(tuple(range(1, n + 1)))


def perm_mul(a: Perm, b: Perm) -> Perm:
    """Композиция a·b: сначала b, затем a"""
    return Perm(tuple(a[k - 1] for k in b))


def perm_inverse(w: Perm) -> Perm:
    """
    >>> perm_inverse((2, 3, 1))
    (3, 1, 2)
    """
    inverse = [0] * len(w)
    for position, value in enumerate(w, start=1):
        inverse[value - 1] = position
    return Perm(tuple(inverse))


def perm_length(w: Perm) -> int:
    """Число инверсий"""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def left_mul_simple(i: int, w: Perm) -> Perm:
    """τ_i·w: меняет местами значения i и i+1"""
    return Perm(tuple(i + 1 if v == i else i if v == i + 1 else v for v in w))


def right_mul_simple(w: Perm, i: int) -> Perm:
    """w·τ_i: меняет местами позиции i и i+1"""
    images = list(w)
    images[i - 1], images[i] = images[i], images[i - 1]
    return Perm(tuple(images))


def simple_transposition(n: int, i: int) -> Perm:
    return right_mul_simple(identity(n), i)


def has_left_descent(w: Perm, i: int) -> bool:
    """τ_i w < w, т.е. i+1 стоит левее i"""
    return w.index(i) > w.index(i + 1)


def has_right_descent(w: Perm, i: int) -> bool:
    """w τ_i < w"""
    return w[i - 1] > w[i]


def reduced_word(w: Perm) -> List[int]:
    """Лексикографически наименьшее приведенное слово: каждый раз берется наименьший левый спуск"""
    word = []
    current = w
    n = len(w)
    while True:
        for i in range(1, n):
            if has_left_descent(current, i):
                word.append(i)
                current = left_mul_simple(i, current)
                break
        else:
            return word


def perm_from_word(n: int, word: Sequence[int]) -> Perm:
    """τ_{i1}···τ_{ik}"""
    w = identity(n)
    for i in word:
        w = right_mul_simple(w, i)
    return w


@lru_cache(maxsize=None)
def all_perms(n: int) -> Tuple[Perm, ...]:
    """Все элементы S_n в порядке (длина, лексикографический)"""
    perms = [Perm(p) for p in permutations(range(1, n + 1))]
    return tuple(sorted(perms, key=perm_key))


def perm_key(w: Perm) -> Tuple[int, Tuple[int, ...]]:
    return perm_length(w), tuple(w)


def format_perm(w: Perm) -> str:
    return " ".join(str(v) for v in w)


def parse_perm(text: str) -> Perm:
    images = tuple(int(part) for part in text.split())
    if sorted(images) != list(range(1, len(images) + 1)):
        raise ValueError(f"Not a permutation in one-line notation: {text!r}")
    return Perm(images)


# --- Композиции и подгруппы Юнга ---

def make_composition(parts: Sequence[int], n: int = None) -> Composition:
    parts = tuple(int(p) for p in parts)
    if not parts and n not in (None, 0):
        raise CompositionError(f"Empty composition cannot sum to {n}")
    if any(p < 1 for p in parts):
        raise CompositionError(f"Composition parts must be positive: {parts}")
    if n is not None and sum(parts) != n:
        raise CompositionError(f"Composition {parts} does not sum to {n}")
    return Composition(parts)


def parse_composition(text: str) -> Composition:
    try:
        return make_composition([int(p) for p in text.split(",") if p.strip()])
    except ValueError as e:
        raise CompositionError(f"Invalid composition {text!r}: {e}")


def format_composition(lam: Composition) -> str:
    return ",".join(str(p) for p in lam)


def compositions(n: int) -> List[Composition]:
    """Все композиции n в лексикографическом порядке"""
    if n == 0:
        return [Composition(())]
    result = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            result.append(Composition((first,) + rest))
    return sorted(result)


def partial_sums(lam: Composition) -> List[int]:
    sums, total = [], 0
    for part in lam:
        total += part
        sums.append(total)
    return sums


def young_generators(lam: Composition) -> FrozenSet[int]:
    """Индексы j из 1..n-1, не совпадающие с частичными суммами λ"""
    n = sum(lam)
    cuts = set(partial_sums(lam))
    return frozenset(j for j in range(1, n) if j not in cuts)


def composition_from_generators(n: int, gens) -> Composition:
    """Композиция, чья подгруппа Юнга порождена τ_j, j из gens"""
    parts, current = [], 1
    for j in range(1, n):
        if j in gens:
            current += 1
        else:
            parts.append(current)
            current = 1
    if n > 0:
        parts.append(current)
    return Composition(tuple(parts))


def blocks(lam: Composition) -> List[Tuple[int, ...]]:
    """Блоки позиций {1..λ1}, {λ1+1..λ1+λ2}, ..."""
    result, start = [], 1
    for part in lam:
        result.append(tuple(range(start, start + part)))
        start += part
    return result


def block_of(lam: Composition, j: int) -> int:
    """Номер блока, содержащего позицию j"""
    for index, block in enumerate(blocks(lam)):
        if j in block:
            return index
    raise CompositionError(f"Position {j} outside composition {lam}")


def young_subgroup(lam: Composition) -> List[Perm]:
    """Элементы S_λ, упорядоченные по (длина, лексикографически)"""
    n = sum(lam)
    return [w for w in all_perms(n) if all(block_of(lam, w[j - 1]) == block_of(lam, j) for j in range(1, n + 1))]


def in_dist_reps(w: Perm, lam: Composition) -> bool:
    """w τ_j > w для всех τ_j из B_λ"""
    return all(not has_right_descent(w, j) for j in young_generators(lam))


def dist_reps(n: int, lam: Composition) -> Tuple[Perm, ...]:
    """D_λ = D(S_n/S_λ) в порядке (длина, лексикографический)"""
    return _dist_reps(n, make_composition(lam, n))


@lru_cache(maxsize=None)
def _dist_reps(n: int, lam: Composition) -> Tuple[Perm, ...]:
    return tuple(w for w in all_perms(n) if in_dist_reps(w, lam))


def right_coset_reps(lam: Composition) -> Tuple[Perm, ...]:
    """D(S_λ\\S_n) = {π⁻¹ : π ∈ D_λ}"""
    n = sum(lam)
    return tuple(sorted((perm_inverse(w) for w in dist_reps(n, lam)), key=perm_key))


def double_coset(mu: Composition, pi: Perm, lam: Composition) -> List[Perm]:
    """S_μ π S_λ замыканием орбиты"""
    left, right = young_generators(mu), young_generators(lam)
    seen = {pi}
    frontier = [pi]
    while frontier:
        w = frontier.pop()
        neighbours = [left_mul_simple(i, w) for i in left] + [right_mul_simple(w, j) for j in right]
        for v in neighbours:
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    return sorted(seen, key=perm_key)


def nu_generators(mu: Composition, pi: Perm, lam: Composition) -> FrozenSet[int]:
    """{τ_i ∈ B_μ : π⁻¹ τ_i π ∈ B_λ}"""
    inverse = perm_inverse(pi)
    lam_gens = young_generators(lam)
    result = set()
    for i in young_generators(mu):
        a, b = sorted((inverse[i - 1], inverse[i]))
        if b == a + 1 and a in lam_gens:
            result.add(i)
    return frozenset(result)


def double_dist_reps(mu: Composition, lam: Composition) -> Tuple[DoubleCosetDatum, ...]:
    """Выделенные представители двойных классов S_μ\\S_n/S_λ с данными ν(π)"""
    if sum(mu) != sum(lam):
        raise CompositionError(f"Compositions {mu} and {lam} have different sizes")
    return _double_dist_reps(make_composition(mu), make_composition(lam))


@lru_cache(maxsize=None)
def _double_dist_reps(mu: Composition, lam: Composition) -> Tuple[DoubleCosetDatum, ...]:
    n = sum(lam)
    seen = set()
    data = []
    for w in all_perms(n):
        if w in seen:
            continue
        # первый встреченный элемент класса в порядке длины и есть кратчайший
        seen.update(double_coset(mu, w, lam))
        gens = nu_generators(mu, w, lam)
        data.append(DoubleCosetDatum(rep=w, nu_generators=gens, nu=composition_from_generators(n, gens)))
    logger.debug(f"Double cosets for mu={mu}, lam={lam}: {len(data)}")
    return tuple(data)


def deodhar_partition(lam: Composition, i: int) -> DeodharSplit:
    """Разбиение Деодара D_λ относительно τ_i"""
    n = sum(lam)
    if not 1 <= i <= n - 1:
        raise CompositionError(f"Generator index {i} out of range for n={n}")
    reps = dist_reps(n, lam)
    rep_set = set(reps)
    split = DeodharSplit(a_set=[], tau_a_set=[], b_set=[])
    for sigma in reps:
        moved = left_mul_simple(i, sigma)
        if moved in rep_set:
            if has_left_descent(sigma, i):
                split.tau_a_set.append(sigma)
            else:
                split.a_set.append(sigma)
        else:
            split.b_set.append(sigma)
            split.b_index[sigma] = perm_inverse(sigma)[i - 1]
    return split


def longest_element(n: int) -> Perm:
    return Perm(tuple(range(n, 0, -1)))


def longest_elements(n: int, lam: Composition) -> Tuple[Perm, Perm, Perm]:
    """(w_n, w_λ, d_λ = w_n w_λ)"""
    lam = make_composition(lam, n)
    w_n = longest_element(n)
    w_lam = Perm(tuple(v for block in blocks(lam) for v in reversed(block)))
    return w_n, w_lam, perm_mul(w_n, w_lam)


def trivial_intersection_reps(mu: Composition, lam: Composition) -> List[Perm]:
    """π ∈ _μD_λ с S_μ ∩ πS_λπ⁻¹ = e"""
    return [datum.rep for datum in double_dist_reps(mu, lam) if not datum.nu_generators]


if __name__ == "__main__":
    import doctest
    doctest.testmod()
