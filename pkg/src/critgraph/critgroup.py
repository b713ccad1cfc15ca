"""Critical groups (sandpile groups) of multigraphs, exactly.

Three independent routes are provided for the four-cycle prism family
C4 x Cn and cross-check each other:

  * :func:`group_of_graph` -- Smith normal form of the full 4n x 4n
    Laplacian (works for any connected multigraph);
  * :func:`group_via_relations` -- SNF of an 8 x 8 relations matrix:
    the cokernel relation propagates every layer onto the first two,
    so eight generators suffice;
  * :func:`closed_form_group` -- a seven-term gcd formula in the
    sequences e, f, h, g, split by the parity of n and of n/2.

:func:`verify_reduction_pipeline` replays, stage by stage, the explicit
chain of unimodular transformations that turns the 8 x 8 relations
matrix into block-diagonal form, checking every intermediate template
and the unimodularity of every constant multiplier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .exactla import (
    IntegerMatrix,
    canonical_chain,
    is_unimodular,
    snf,
)
from .graph import Multigraph, laplacian
from .seq import SeqKind, derived_seq, u_seq


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group as its invariant-factor chain.

    ``invariant_factors`` are the cyclic orders >= 2 in divisibility
    order (trivial factors stripped); the empty tuple is the trivial
    group.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        fs = self.invariant_factors
        if any(f < 2 for f in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError(f"invariant factors must form a divisibility chain, got {fs}")

    @classmethod
    def from_factors(cls, factors) -> "AbelianGroup":
        """Canonicalize an arbitrary multiset of positive cyclic orders."""
        chain = canonical_chain(list(factors))
        return cls(tuple(f for f in chain if f > 1))

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z{f}" for f in self.invariant_factors)


@dataclass(frozen=True)
class ReductionCoeffs:
    """Integer coefficients (a, b, c) expressing ring layer i of
    C4 x Cn over the first two layers; see :func:`coeffs`."""

    i: int
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class PipelineReport:
    """Outcome of :func:`verify_reduction_pipeline`: one (name, passed,
    detail) triple per stage."""

    n: int
    stage_checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(passed for _, passed, _ in self.stage_checks)

    def failures(self) -> list[tuple[str, bool, str]]:
        return [c for c in self.stage_checks if not c[1]]


def _exact_div(num: int, den: int) -> int:
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"inexact division {num} / {den}")
    return quot


def coeffs(i: int) -> ReductionCoeffs:
    """Layer-expansion coefficients at index i.

    Closed forms (all divisions exact):

        a = (i + f_i + 2 e_i) / 4
        b = (i - f_i) / 4
        c = (i + f_i - 2 e_i) / 4

    They satisfy a + 2b + c = i and the coupled recurrences
    a' = 4a - 2b - a_prev, b' = 4b - (a + c) - b_prev, c' = 4c - 2b - c_prev.
    """
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    e, f = u_seq(2, i), u_seq(4, i)
    return ReductionCoeffs(
        i=i,
        a=_exact_div(i + f + 2 * e, 4),
        b=_exact_div(i - f, 4),
        c=_exact_div(i + f - 2 * e, 4),
    )


def _circulant_block(i: int) -> list[list[int]]:
    """Symmetric 4x4 circulant (a, b, c, b) built from coeffs(i)."""
    c = coeffs(i)
    return [
        [c.a, c.b, c.c, c.b],
        [c.b, c.a, c.b, c.c],
        [c.c, c.b, c.a, c.b],
        [c.b, c.c, c.b, c.a],
    ]


def relations_matrix(n: int) -> IntegerMatrix:
    """8x8 relations matrix whose cokernel (plus one free rank) is the
    critical group of C4 x Cn.

    Blocks: [[A_{n+1} - I, -A_n], [A_n, -A_{n-1} - I]] with A_i the
    circulant of coeffs(i).  After negating the last four rows every
    row and column sums to zero, which is what lets the first row and
    column be split off as a rank-one zero block.
    """
    if n < 3:
        raise ValueError(f"C4 x Cn needs n >= 3, got {n}")
    top = _circulant_block(n + 1)
    mid = _circulant_block(n)
    bot = _circulant_block(n - 1)
    rows = [top[r] + [-x for x in mid[r]] for r in range(4)]
    rows += [mid[r] + [-x for x in bot[r]] for r in range(4)]
    return IntegerMatrix(
        [[rows[i][j] - (1 if i == j else 0) for j in range(8)] for i in range(8)]
    )


def _group_from_snf_diag(diagonal, expect_zeros: int) -> AbelianGroup:
    zeros = sum(1 for d in diagonal if d == 0)
    if zeros != expect_zeros:
        raise ValueError(
            f"expected exactly {expect_zeros} zero invariant factor(s), found {zeros}"
            " (disconnected graph?)"
        )
    return AbelianGroup(tuple(d for d in diagonal if d > 1))


def group_of_graph(g: Multigraph) -> AbelianGroup:
    """Critical group of a connected multigraph via the Laplacian SNF.

    The SNF diagonal must contain exactly one zero (the free rank of the
    cokernel); more than one means the graph is disconnected.
    """
    return _group_from_snf_diag(snf(laplacian(g)).diagonal, expect_zeros=1)


def group_via_relations(n: int) -> AbelianGroup:
    """Critical group of C4 x Cn via the 8x8 relations matrix."""
    return _group_from_snf_diag(snf(relations_matrix(n)).diagonal, expect_zeros=1)


def closed_form_raw_factors(n: int) -> tuple[int, ...]:
    """The seven cyclic orders of K(C4 x Cn) before canonicalization.

    Three cases.  Odd n = 2s+1 uses h = h_s, g = g_s:

        ( (n,h,g), (h,g), (n,h)(h,g)/(n,h,g), h,
          h(nh,ng,hg)/((n,h)(h,g)), hg/(h,g), 4nhg/(nh,ng,hg) )

    Even n = 2s uses e = e_s, f = f_s; for odd s:

        ( (s,e,f), (e,f), (s,e)(e,f)/(s,e,f), e,
          4e(se,sf,ef)/((s,e)(e,f)), 12ef/(e,f), 48sef/(se,sf,ef) )

    and for even s:

        ( (s,e,f), (e,f), 4(s,e)(e,f)/(s,e,f), 6e,
          6e(se,sf,ef)/((s,e)(e,f)), 2ef/(e,f), 8sef/(se,sf,ef) )

    All divisions are checked exact at runtime.
    """
    if n < 3:
        raise ValueError(f"C4 x Cn needs n >= 3, got {n}")
    gcd = math.gcd
    if n % 2:
        s = (n - 1) // 2
        h = derived_seq(SeqKind.H, s)
        g = derived_seq(SeqKind.G, s)
        triple = gcd(n * h, n * g, h * g)
        return (
            gcd(n, h, g),
            gcd(h, g),
            _exact_div(gcd(n, h) * gcd(h, g), gcd(n, h, g)),
            h,
            _exact_div(h * triple, gcd(n, h) * gcd(h, g)),
            _exact_div(h * g, gcd(h, g)),
            _exact_div(4 * n * h * g, triple),
        )
    s = n // 2
    e = derived_seq(SeqKind.E, s)
    f = derived_seq(SeqKind.F, s)
    triple = gcd(s * e, s * f, e * f)
    if s % 2:
        return (
            gcd(s, e, f),
            gcd(e, f),
            _exact_div(gcd(s, e) * gcd(e, f), gcd(s, e, f)),
            e,
            _exact_div(4 * e * triple, gcd(s, e) * gcd(e, f)),
            _exact_div(12 * e * f, gcd(e, f)),
            _exact_div(48 * s * e * f, triple),
        )
    return (
        gcd(s, e, f),
        gcd(e, f),
        _exact_div(4 * gcd(s, e) * gcd(e, f), gcd(s, e, f)),
        6 * e,
        _exact_div(6 * e * triple, gcd(s, e) * gcd(e, f)),
        _exact_div(2 * e * f, gcd(e, f)),
        _exact_div(8 * s * e * f, triple),
    )


def closed_form_group(n: int) -> AbelianGroup:
    """Critical group of C4 x Cn by the closed-form seven-term tuple,
    canonicalized into a divisibility chain with trivial factors
    stripped."""
    return AbelianGroup.from_factors(closed_form_raw_factors(n))


def subgroup_check(n1: int, n2: int) -> bool:
    """True iff K(C4 x Cn1) embeds into K(C4 x Cn2) by the sufficient
    factorwise criterion: right-align both invariant-factor chains
    (padding the shorter with 1s at the small end) and require each
    factor of the first to divide the matching factor of the second.

    This holds in particular whenever n1 divides n2.
    """
    f1 = list(closed_form_group(n1).invariant_factors)
    f2 = list(closed_form_group(n2).invariant_factors)
    width = max(len(f1), len(f2))
    f1 = [1] * (width - len(f1)) + f1
    f2 = [1] * (width - len(f2)) + f2
    return all(b % a == 0 for a, b in zip(f1, f2))


def verify_layer_expansion(n: int) -> bool:
    """Propagate the cokernel relation symbolically over the eight
    generators (ring positions of layers 0 and 1) and confirm that
    layer i carries exactly the coefficients of coeffs(i) on layer 1
    and -coeffs(i-1) on layer 0, for every 1 <= i <= n."""
    if n < 3:
        raise ValueError(f"C4 x Cn needs n >= 3, got {n}")

    def basis(layer: int, j: int) -> list[int]:
        v = [0] * 8
        v[4 * layer + j] = 1
        return v

    layers = [[basis(0, j) for j in range(4)], [basis(1, j) for j in range(4)]]
    for i in range(1, n):
        prev, cur = layers[i - 1], layers[i]
        layers.append(
            [
                [
                    4 * cur[j][k] - cur[(j + 1) % 4][k] - cur[(j - 1) % 4][k] - prev[j][k]
                    for k in range(8)
                ]
                for j in range(4)
            ]
        )

    for i in range(1, n + 1):
        ci = coeffs(i)
        cp = coeffs(i - 1)
        for j in range(4):
            expect = [0] * 8
            expect[4 + j] += ci.a
            expect[4 + (j + 1) % 4] += ci.b
            expect[4 + (j - 1) % 4] += ci.b
            expect[4 + (j + 2) % 4] += ci.c
            expect[j] -= cp.a
            expect[(j + 1) % 4] -= cp.b
            expect[(j - 1) % 4] -= cp.b
            expect[(j + 2) % 4] -= cp.c
            if layers[i][j] != expect:
                return False
    return True


# --- staged-reduction fixtures -------------------------------------------
#
# Constant unimodular multipliers of the staged reduction.  _L3[6][4] and
# _R3[4][4] are forced by requiring the stage identity to hold for every
# even n together with det = +-1 (see tests for the recorded products).

_L1 = IntegerMatrix([
    [0, 0, 0, 1, 1, 1, 1],
    [1, 2, 1, -1, -1, -1, -1],
    [0, 0, 0, -1, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0],
])
_R1 = IntegerMatrix([
    [-1, -1, 0, 1, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, -1, 0],
    [-1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, -1, 0, -1],
    [-1, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1],
])
_U = IntegerMatrix([
    [1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [0, -1, 4, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0],
    [-1, 0, -1, -1, 6, 0, 0],
    [0, 0, 0, 0, 0, 0, 1],
    [-1, 0, 0, 0, 0, -1, 4],
])
_L2 = IntegerMatrix([
    [0, -1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, -1, 1, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0],
])
_R2 = IntegerMatrix([
    [0, 0, 0, 0, 0, 0, 1],
    [0, -1, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [1, -2, 0, 1, 0, 0, -2],
    [-1, 2, 0, 0, 0, 0, 2],
    [0, 1, 1, 0, 0, 1, 1],
    [0, -1, -1, 0, 0, 0, -1],
])
_L3 = IntegerMatrix([
    [1, 0, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, -1, -1],
    [-1, -4, 1, 7, -1, 0, 0],
    [0, 5, -4, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 2, -2, 1, 0, 0, 0],
])
_R3 = IntegerMatrix([
    [0, -2, 0, 1, -2, 0, 0],
    [0, 6, 0, 0, 5, 0, 0],
    [0, -1, 0, 0, -1, 0, 0],
    [2, 6, 0, -4, 6, 1, 2],
    [-1, -6, 0, 4, -6, -1, -2],
    [0, -3, 2, 2, -3, 1, -1],
    [0, 3, -1, -2, 3, 0, 1],
])
_L4 = IntegerMatrix([
    [1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 1],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [-1, -1, 0, 1, 0, 0, 0],
    [-1, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 0],
])
_R4 = IntegerMatrix([
    [1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [-1, 0, 0, 1, 0, 0, 0],
    [2, 0, -4, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 1, -1, 0, 0, -1, 0],
])

_FIXTURES = {
    "L1": _L1, "R1": _R1, "U": _U, "L2": _L2, "R2": _R2,
    "L3": _L3, "R3": _R3, "L4": _L4, "R4": _R4,
}


def _u_signed(m: int, k: int) -> int:
    # first-kind sequence extended to negative indices: u_{-k} = -u_k
    return -u_seq(m, -k) if k < 0 else u_seq(m, k)


def _p_val(i: int, n: int) -> int:
    return _u_signed(2, i) + _u_signed(2, n - i)


def _q_val(i: int, n: int) -> int:
    return _u_signed(4, i) + _u_signed(4, n - i)


def _seven_template(n: int) -> IntegerMatrix:
    """The 7x7 matrix that the first stage lands on, written in the
     'folded' sequences p_i = e_i + e_{n-i} and q_i = f_i + f_{n-i}."""
    p = {i: _p_val(i, n) for i in (-1, 0, 1)}
    q = {i: _q_val(i, n) for i in (-1, 0, 1)}
    return IntegerMatrix([
        [0, 0, 0, n, n, 0, 0],
        [0, p[-1], p[0], 0, 0, 0, 0],
        [0, p[0], p[1], 0, 0, 0, 0],
        [_exact_div(q[-1] + q[0], 2), _exact_div(p[-1] + q[-1], 2),
         _exact_div(p[0] + q[0], 2), _exact_div(n - q[-1], 4),
         _exact_div(n - q[0], 4), 0, 0],
        [_exact_div(q[0] + q[1], 2), _exact_div(p[0] + q[0], 2),
         _exact_div(p[1] + q[1], 2), _exact_div(n - q[0], 4),
         _exact_div(n - q[1], 4), 0, 0],
        [0, 0, 0, _exact_div(n + p[-1], 2), _exact_div(n + p[0], 2), p[-1], p[0]],
        [0, 0, 0, _exact_div(n + p[0], 2), _exact_div(n + p[1], 2), p[0], p[1]],
    ])


def _block_diag(upper: list[list[int]], lower: list[list[int]]) -> IntegerMatrix:
    k = len(upper)
    width = len(lower[0])
    rows = [row + [0] * width for row in upper]
    rows += [[0] * k + row for row in lower]
    return IntegerMatrix(rows)


def _odd_split_template(n: int) -> IntegerMatrix:
    """Block-diagonal 3+4 target of the odd-n branch, in h = h_s, g = g_s."""
    s = (n - 1) // 2
    h = derived_seq(SeqKind.H, s)
    g = derived_seq(SeqKind.G, s)
    x = [[0, 2 * h, 0], [h, 0, 2 * h], [g, h, 0]]
    y = [
        [n, 0, 0, 0],
        [0, h, 0, 0],
        [_exact_div(n + h, 2), 0, h, 0],
        [_exact_div(n - g, 4), _exact_div(h + g, 2), 0, g],
    ]
    return _block_diag(x, y)


def _even_stage_template(n: int) -> IntegerMatrix:
    """Lower-triangular-shaped 7x7 target of the even-n branch, in
    e = e_s, f = f_s, s = n/2."""
    s = n // 2
    e = derived_seq(SeqKind.E, s)
    f = derived_seq(SeqKind.F, s)
    return IntegerMatrix([
        [2 * s, 0, 0, 0, 0, 0, 0],
        [0, 2 * e, 0, 0, 0, 0, 0],
        [3 * e, 0, 6 * e, 0, 0, 0, 0],
        [s - 2 * f, e + 4 * f, 0, 8 * f, 0, 0, 0],
        [0, 0, 0, 0, 6 * e, 0, 0],
        [s, 0, 0, 0, 0, e, 0],
        [_exact_div(f + s, 2), f, 0, 0, 3 * e, f, 2 * f],
    ])


def _even_split_template(n: int) -> IntegerMatrix:
    """Block-diagonal 4+3 target after rescaling, same parameters."""
    s = n // 2
    e = derived_seq(SeqKind.E, s)
    f = derived_seq(SeqKind.F, s)
    upper = [
        [s, 0, 0, 0],
        [_exact_div(s + f, 2), f, 0, 0],
        [0, 0, e, 0],
        [0, 0, 0, 3 * e],
    ]
    lower = [[f, 0, 0], [0, e, 0], [0, 0, 3 * e]]
    return _block_diag(upper, lower)


def _descale_even_stage(m3: IntegerMatrix) -> IntegerMatrix:
    """Undo the integral scaling of the even-branch stage matrix: divide
    rows 0, 1, 4 by 2, columns 2, 6 by 2, and column 3 by 8 (0-based).
    Raises ArithmeticError if any division is inexact."""
    rows = m3.to_lists()
    for i in (0, 1, 4):
        rows[i] = [_exact_div(x, 2) for x in rows[i]]
    for row in rows:
        row[2] = _exact_div(row[2], 2)
        row[6] = _exact_div(row[6], 2)
        row[3] = _exact_div(row[3], 8)
    return IntegerMatrix(rows)


def _snf_group(m: IntegerMatrix) -> AbelianGroup:
    return AbelianGroup(tuple(d for d in snf(m).diagonal if d > 1))


def verify_reduction_pipeline(n: int) -> PipelineReport:
    """Replay the staged reduction of the 8x8 relations matrix for one n
    and report each stage.  Failures are recorded, never raised."""
    if n < 3:
        raise ValueError(f"C4 x Cn needs n >= 3, got {n}")
    checks: list[tuple[str, bool, str]] = []

    def record(name: str, passed: bool, detail: str) -> None:
        checks.append((name, passed, detail))

    bad = [name for name, mat in _FIXTURES.items() if not is_unimodular(mat)]
    record(
        "fixture-unimodularity",
        not bad,
        "all nine constant multipliers have det = +-1" if not bad
        else f"non-unimodular fixtures: {', '.join(bad)}",
    )

    m_minus_i = relations_matrix(n)
    m1 = m_minus_i.delete_row_col(0, 0)
    full = snf(m_minus_i).diagonal
    inner = snf(m1).diagonal
    ok = full == inner + (0,)
    record(
        "rank-one-split",
        ok,
        "SNF of the 8x8 matrix is the SNF of its 7x7 deletion plus one zero"
        if ok else f"full SNF {full} vs deleted-row/col SNF {inner}",
    )

    m2 = _L1 @ m1 @ _R1
    template = _seven_template(n)
    ok = m2 == template
    record(
        "seven-term-template",
        ok,
        "stage-1 product matches the folded-sequence template" if ok
        else "stage-1 product differs from the folded-sequence template",
    )

    s = (n - 1) // 2 if n % 2 else n // 2
    shifted = (_U ** (s + 1)) @ m2

    if n % 2:
        product = _L2 @ shifted @ _R2
        target = _odd_split_template(n)
        ok = product == target
        record(
            "odd-block-split",
            ok,
            "odd branch lands on the 3+4 block-diagonal template" if ok
            else "odd branch misses the 3+4 block-diagonal template",
        )
        final = product
    else:
        stage = _L3 @ shifted @ _R3
        target = _even_stage_template(n)
        ok = stage == target
        record(
            "even-stage-template",
            ok,
            "even branch lands on the scaled triangular template" if ok
            else "even branch misses the scaled triangular template",
        )
        try:
            descaled = _descale_even_stage(stage)
            record("even-descale-exact", True,
                   "row/column rescaling divides out exactly")
            product = _L4 @ descaled @ _R4
            target2 = _even_split_template(n)
            ok = product == target2
            record(
                "even-block-split",
                ok,
                "descaled matrix splits into the 4+3 block-diagonal template"
                if ok else "descaled matrix misses the 4+3 template",
            )
        except ArithmeticError as exc:
            record("even-descale-exact", False, str(exc))
        final = stage

    expected = closed_form_group(n)
    got = _snf_group(final)
    ok = got == expected
    record(
        "final-snf-closed-form",
        ok,
        f"SNF of the final stage equals the closed form: {expected}" if ok
        else f"final-stage SNF {got} != closed form {expected}",
    )

    return PipelineReport(n=n, stage_checks=checks)
