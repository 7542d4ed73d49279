"""
Group algebras, function algebras of finite groups and their representations.
"""

import logging
from typing import List, Optional, Sequence

from src.builders.example import HopfExample
from src.builders.groups import GroupTable, cyclic_group_table
from src.field.cyclotomic import CyclotomicContext, CyclotomicElement
from src.hopf.algebra import product_algebra
from src.hopf.structure import HopfAlgebraData, HopfMorphism, dual, validate, validate_morphism
from src.image.representation import Representation, require_valid
from src.linalg.matrix import Matrix, Vector
from src.pointed.grouplikes import verify_grouplikes
from src.tannaka.comodule import Comodule, validate_comodule
from src.utils.error_handling import (
    ClosureInvariantError, IndexOutOfRange, InvalidTable, MissingCharacterTable, NotAnNthRoot
)


logger = logging.getLogger(__name__)


def _require_valid_hopf(h: HopfAlgebraData, subject: str):
    report = validate(h, subject)
    if not report.ok:
        raise ClosureInvariantError(f"{subject} fails {[c.name for c in report.failures()]}")


def group_algebra(t: GroupTable, ctx: CyclotomicContext) -> HopfExample:
    """k[G]: Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^-1."""
    n = t.order
    mult = [(a, b, t.table[a][b], 1) for a in range(n) for b in range(n)]
    unit = [1 if a == t.identity else 0 for a in range(n)]
    comult = [(a, a, a, 1) for a in range(n)]
    antipode = [(t.inverses[a], a, 1) for a in range(n)]
    h = HopfAlgebraData.from_sparse(ctx, t.labels, mult, unit, comult, [1] * n, antipode)
    _require_valid_hopf(h, f"k[{t.name}]")
    grouplikes = verify_grouplikes(h, [h.basis_vector(a) for a in range(n)])
    logger.info(f"Built k[{t.name}] of dimension {n}")
    return HopfExample(h, grouplikes, group=t, parameters={"group": t.name})


def linear_characters(t: GroupTable, ctx: CyclotomicContext) -> List[Vector]:
    """
    Homomorphisms G -> k^x with values in the field, as value vectors.

    Each generator is sent to every root of unity of the field whose order
    divides the generator's order; assignments that do not extend to a
    homomorphism are dropped.
    """
    generators = t.generators()
    roots = ctx.roots_of_unity()
    options = []
    for g in generators:
        order = t.element_order(g)
        options.append([w for w in roots if w ** order == 1])

    found: List[Vector] = []

    def extend(assignment):
        values = {t.identity: ctx.one}
        frontier = [t.identity]
        while frontier:
            added = []
            for x in frontier:
                for g, w in zip(generators, assignment):
                    y = t.table[x][g]
                    value = values[x] * w
                    if y in values:
                        if values[y] != value:
                            return None
                    else:
                        values[y] = value
                        added.append(y)
            frontier = added
        # every product must respect the table
        for a in range(t.order):
            for b in range(t.order):
                if values[t.table[a][b]] != values[a] * values[b]:
                    return None
        return tuple(values[a] for a in range(t.order))

    def search(prefix):
        if len(prefix) == len(generators):
            chi = extend(prefix)
            if chi is not None and chi not in found:
                found.append(chi)
            return
        for w in options[len(prefix)]:
            search(prefix + [w])

    search([])
    return found


def function_algebra(t: GroupTable, ctx: CyclotomicContext) -> HopfExample:
    """
    k^G = k[G]* on the indicator basis delta_g.

    The group-likes are the linear characters sum chi(g) delta_g with values
    in the field; characters needing roots of unity outside the field are
    absent.
    """
    h = dual(group_algebra(t, ctx).hopf, label_format="delta_{}")
    _require_valid_hopf(h, f"k^{t.name}")
    characters = linear_characters(t, ctx)
    grouplikes = verify_grouplikes(h, characters)
    roots = len(ctx.roots_of_unity())
    if t.is_abelian() and roots % t.exponent():
        logger.warning(f"Q(zeta_{ctx.conductor}) lacks roots of order {t.exponent()}; "
                       f"{len(characters)} of {t.order} characters are defined over it")
    logger.info(f"Built k^{t.name} of dimension {t.order} with {len(grouplikes)} group-likes")
    return HopfExample(h, grouplikes, group=t, parameters={"group": t.name, "function": True})


def evaluation_rep(fa: HopfExample, points: Sequence[int]) -> Representation:
    """
    f -> (f(g_1), ..., f(g_n)) on k^G, landing in the product algebra k^n.

    Raises:
        IndexOutOfRange: when a point is not an element of G
    """
    h = fa.hopf
    n = h.dim
    for p in points:
        if not 0 <= p < n:
            raise IndexOutOfRange(f"group element {p} outside 0..{n - 1}")
    rows = [[1 if g == p else 0 for g in range(n)] for p in points]
    r = Representation(h, product_algebra(h.ctx, len(points)), Matrix.from_rows(h.ctx, rows, n))
    require_valid(r)
    return r


def character_vectors(fa: HopfExample) -> List[Vector]:
    """
    Irreducible characters as elements sum chi(g) delta_g of k^G.

    Raises:
        MissingCharacterTable: when G ships no table and is not abelian
            with all its characters defined over the field
    """
    t = fa.group
    ctx = fa.ctx
    if t is None:
        raise MissingCharacterTable("Hopf algebra was not built from a group")
    if t.characters is not None:
        return [tuple(ctx.rational(v) for v in values) for _, values in t.characters]
    if t.is_abelian():
        characters = linear_characters(t, ctx)
        if len(characters) == t.order:
            return characters
    raise MissingCharacterTable(f"no character table available for {t.name}")


def character_span_injectivity(fa: HopfExample, r: Representation) -> bool:
    """
    Whether pi separates the irreducible characters of G.

    The characters are compared as a set: True when their images are
    pairwise distinct.
    """
    images = [r.apply(chi) for chi in character_vectors(fa)]
    distinct = len(set(images)) == len(images)
    logger.info(f"Character images: {len(set(images))} distinct of {len(images)}")
    return distinct


def character_rep(h: HopfAlgebraData, values: Sequence) -> Representation:
    """The one-dimensional representation e_i -> values[i]."""
    row = [h.ctx.coerce(v) for v in values]
    r = Representation(h, product_algebra(h.ctx, 1), Matrix.from_rows(h.ctx, [row], h.dim))
    require_valid(r)
    return r


def cyclic_rep(n: int, w: CyclotomicElement, group: Optional[HopfExample] = None) -> Representation:
    """
    k[Z_n] -> k, x -> w.

    Raises:
        NotAnNthRoot: when w^n != 1
    """
    if w ** n != 1:
        raise NotAnNthRoot(f"{w} is not an {n}-th root of unity")
    group = group or group_algebra(cyclic_group_table(n), w.context)
    return character_rep(group.hopf, [w ** k for k in range(n)])


def group_morphism_hopf(source: HopfExample, target: HopfExample, f: Sequence[int]) -> HopfMorphism:
    """
    The Hopf map k[G] -> k[K] induced by a homomorphism given on elements.

    Raises:
        InvalidTable: when f is not a homomorphism
    """
    g, k = source.group, target.group
    if len(f) != g.order or any(not 0 <= x < k.order for x in f):
        raise InvalidTable("map does not send every element of the source into the target")
    for a in range(g.order):
        for b in range(g.order):
            if f[g.table[a][b]] != k.table[f[a]][f[b]]:
                raise InvalidTable(f"map is not multiplicative at ({g.labels[a]}, {g.labels[b]})")
    rows = [[1 if f[a] == c else 0 for a in range(g.order)] for c in range(k.order)]
    q = HopfMorphism(source.hopf, target.hopf, Matrix.from_rows(source.ctx, rows, g.order))
    report = validate_morphism(q)
    if not report.ok:
        raise ClosureInvariantError(f"induced map fails {[c.name for c in report.failures()]}")
    return q


def representation_comodule(fa: HopfExample, matrices: Sequence[Matrix], name: str = "V") -> Comodule:
    """
    The comodule of k^G attached to a matrix representation rho of G:
    u_ij = sum_g rho(g)_ij delta_g.

    Raises:
        InvalidTable: when the matrices do not form a representation
    """
    t = fa.group
    h = fa.hopf
    if len(matrices) != t.order:
        raise InvalidTable(f"need one matrix per element, got {len(matrices)}")
    n = matrices[0].rows
    coefficients = tuple(
        tuple(tuple(matrices[g].get(i, j) for g in range(t.order)) for j in range(n))
        for i in range(n)
    )
    comodule = Comodule(h, n, coefficients, name)
    if not validate_comodule(comodule):
        raise InvalidTable("matrices do not define a representation of the group")
    return comodule


def standard_representation_matrices(t: GroupTable, ctx: CyclotomicContext) -> List[Matrix]:
    """
    The (n-1)-dimensional standard representation of S_n on the basis
    b_i = e_i - e_{i+1}; a sum-zero vector v has coordinates c_k = v_1 + ... + v_k.
    """
    if not t.elements:
        raise InvalidTable(f"{t.name} is not a permutation group")
    n = len(t.elements[0])
    result = []
    for perm in t.elements:
        columns = []
        for i in range(n - 1):
            v = [0] * n
            v[perm[i]] += 1
            v[perm[i + 1]] -= 1
            columns.append([sum(v[:k + 1]) for k in range(n - 1)])
        result.append(Matrix.from_rows(ctx, columns, n - 1).transpose())
    return result


def is_projective_generating_family(t: GroupTable, points: Sequence[int]) -> bool:
    """Whether the pairs (g_i, g_j) generate G x G."""
    n = t.order
    pairs = [(a, b) for a in points for b in points]
    identity = (t.identity, t.identity)
    seen = {identity}
    frontier = [identity]
    while frontier:
        added = []
        for x, y in frontier:
            for a, b in pairs:
                z = (t.table[x][a], t.table[y][b])
                if z not in seen:
                    seen.add(z)
                    added.append(z)
        frontier = added
    logger.debug(f"Pairs generate {len(seen)} of {n * n} elements")
    return len(seen) == n * n


def standard_comodule(fa: HopfExample) -> Comodule:
    """The simple comodule of k^(S_n) given by the standard representation."""
    matrices = standard_representation_matrices(fa.group, fa.ctx)
    return representation_comodule(fa, matrices, name="standard")
