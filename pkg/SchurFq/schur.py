# -*- coding: utf-8 -*-
# ==============================================================================
#   Copyright 2026 AlphaOmega Technology
#
#   Licensed under the AlphaOmega Technology Open License Version 1.0
#   You may not use this file except in compliance with this License.
#   You may obtain a copy of the License at
#
#       http://www.alphaomega-technology.com.au/license/AOT-OL/1.0
# ==============================================================================
r"""
SchurFq.schur Module
====================

Jacobi-Trudi matrices and the reductions acting on them.

Entry :math:`(i, j)` of the Jacobi-Trudi matrix of :math:`\lambda` is
:math:`x_{\lambda_i - i + j}` with :math:`x_0 = 1` and :math:`x_t = 0` for
:math:`t < 0`, its determinant is :math:`s_\lambda`.

.. code-block:: python

    >>> from SchurFq.partitions import Partition
    >>> from SchurFq.schur import jt_matrix, psi
    >>> M = jt_matrix(Partition((2, 1)))
    >>> print(M.to_text())
    [x2, x3]
    [1, x1]
    >>> print(psi(M).matrix.to_text())
    [x3 - x1*x2]

:func:`psi` uses every nonzero constant of a general Schur matrix as a pivot,
clears its column above it with row operations, clears its row with column
operations and deletes the pivot row and column. :func:`psi_tilde` does the same
without deleting anything, so the determinant is unchanged. :func:`phi` and
:func:`phi_tilde` assign :math:`x_1, x_2, \ldots` one at a time and reduce after
each assignment.
"""

import enum
import logging
from collections import namedtuple
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

try:
    from SchurFq.field import Field, FieldElement, make_field
    from SchurFq.multipoly import MultiPoly, NotLabelForm, Label, label_of, parse
    from SchurFq.partitions import Partition, Composition, transpose
except ImportError:
    from .field import Field, FieldElement, make_field
    from .multipoly import MultiPoly, NotLabelForm, Label, label_of, parse
    from .partitions import Partition, Composition, transpose

logger = logging.getLogger(__name__)

# Symbolic work defaults to F_101, large enough that the small constants
# appearing in hand traces stay distinct
DEFAULT_FIELD_ORDER = 101

MAX_SYMBOLIC_DET = 6


class NotGeneralSchur(ValueError):
    pass


class MatrixClass(enum.Flag):
    NONE = 0
    GENERAL = 1
    REDUCED = 2
    SPECIAL = 4

    def __str__(self):
        names = [m.name.capitalize() for m in (MatrixClass.SPECIAL, MatrixClass.REDUCED, MatrixClass.GENERAL) if m in self]
        return ", ".join(names) or "None"


PsiResult = namedtuple("PsiResult", ["matrix", "alpha", "pivots"])


class _Singular:
    def __repr__(self):
        return "Singular"

    def __bool__(self):
        return False


SINGULAR = _Singular()


class SchurMatrix:
    """Square matrix of polynomials

    Parameters
    ----------
    field: Field
    entries: sequence of rows
        Rows may hold :class:`MultiPoly` values, integers or polynomial strings.
    basis: str
        ``"h"`` or ``"e"``, informational only.
    """

    __slots__ = ("field", "entries", "basis")

    def __init__(self, field: Field, entries: Sequence[Sequence] = (), basis: str = "h"):
        self.field = field
        rows = []
        for row in entries:
            rows.append(tuple(self._entry(e) for e in row))
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix is not square")
        self.entries: Tuple[Tuple[MultiPoly, ...], ...] = tuple(rows)
        self.basis = basis

    def _entry(self, e) -> MultiPoly:
        if isinstance(e, MultiPoly):
            if e.field != self.field:
                raise TypeError("entry over {0!r} in a matrix over {1!r}".format(e.field, self.field))
            return e
        if isinstance(e, int):
            return MultiPoly.const(self.field, self.field.from_int(e))
        return parse(str(e), self.field)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, SchurMatrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def labels(self, monic: bool = False) -> Tuple[Tuple[Label, ...], ...]:
        return tuple(tuple(label_of(e, monic) for e in row) for row in self.entries)

    def max_label(self) -> int:
        return max((e.max_variable() for row in self.entries for e in row), default=0)

    def leading_zeros(self) -> Tuple[int, ...]:
        """The :math:`d_i`, number of zero entries each row starts with"""
        out = []
        for row in self.entries:
            d = 0
            while d < len(row) and row[d].is_zero():
                d += 1
            out.append(d)
        return tuple(out)

    def substitute(self, bindings: Mapping[int, FieldElement]) -> "SchurMatrix":
        return SchurMatrix(
            self.field, [[e.substitute(bindings) for e in row] for row in self.entries], self.basis
        )

    def evaluate(self, assignment) -> List[List[FieldElement]]:
        return [[e.evaluate(assignment) for e in row] for row in self.entries]

    def det_at(self, assignment) -> FieldElement:
        return det_numeric(self.field, self.evaluate(assignment))

    def delete(self, rows: Sequence[int], cols: Sequence[int]) -> "SchurMatrix":
        rows, cols = set(rows), set(cols)
        return SchurMatrix(
            self.field,
            [
                [e for j, e in enumerate(row) if j not in cols]
                for i, row in enumerate(self.entries)
                if i not in rows
            ],
            self.basis,
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SchurMatrix":
        return SchurMatrix(self.field, [[self.entries[i][j] for j in cols] for i in rows], self.basis)

    def det(self) -> MultiPoly:
        """Symbolic determinant by memoised Laplace expansion, for at most 6x6"""
        n = self.n
        if n > MAX_SYMBOLIC_DET:
            raise ValueError(
                "symbolic determinants are limited to {0:d}x{0:d}, got {1:d}x{1:d}".format(
                    MAX_SYMBOLIC_DET, n
                )
            )
        entries = self.entries
        f = self.field

        @lru_cache(maxsize=None)
        def minor(row: int, cols: Tuple[int, ...]) -> MultiPoly:
            if row == n:
                return MultiPoly.const(f, 1)
            total = MultiPoly.zero(f)
            for pos, j in enumerate(cols):
                e = entries[row][j]
                if e.is_zero():
                    continue
                term = e * minor(row + 1, cols[:pos] + cols[pos + 1:])
                total = total - term if pos % 2 else total + term
            return total

        return minor(0, tuple(range(n)))

    def to_text(self, name: str = "x") -> str:
        return "\n".join(
            "[" + ", ".join(e.render(name) for e in row) + "]" for row in self.entries
        )

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "SchurMatrix(n={0:d})".format(self.n)


def det_numeric(field: Field, grid: Sequence[Sequence[FieldElement]]) -> FieldElement:
    """Determinant by Gaussian elimination with first-nonzero pivoting"""
    a = [list(row) for row in grid]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = field.neg(det)
        pv = a[c][c]
        det = field.mul(det, pv)
        inv = field.inv(pv)
        for r in range(c + 1, n):
            if a[r][c]:
                factor = field.mul(a[r][c], inv)
                for j in range(c, n):
                    a[r][j] = field.sub(a[r][j], field.mul(factor, a[c][j]))
    return det


def jt_matrix(lam, basis: str = "h", field: Optional[Field] = None) -> SchurMatrix:
    """Jacobi-Trudi matrix of `lam`

    For ``basis="e"`` the matrix is built from the transpose, its variables then stand
    for :math:`e_i`.
    """
    if basis not in ("h", "e"):
        raise ValueError("basis must be 'h' or 'e', got {0!r}".format(basis))
    if field is None:
        field = make_field(DEFAULT_FIELD_ORDER)
    mu = Partition(lam) if basis == "h" else transpose(Partition(lam))
    k = len(mu)
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            t = mu[i] - i + j
            if t > 0:
                row.append(MultiPoly.var(field, t))
            else:
                row.append(MultiPoly.const(field, 1 if t == 0 else 0))
        rows.append(row)
    return SchurMatrix(field, rows, basis)


def rectangle_matrix(n: int, field: Optional[Field] = None) -> SchurMatrix:
    """The rectangle matrix renamed to :math:`A = (x_{j - i + n})`, variables :math:`x_1..x_{2n-1}`"""
    if field is None:
        field = make_field(DEFAULT_FIELD_ORDER)
    return SchurMatrix(
        field, [[MultiPoly.var(field, j - i + n) for j in range(n)] for i in range(n)]
    )


def classify_matrix(M: SchurMatrix) -> MatrixClass:
    """General, reduced and special flags of `M`

    Labels are read allowing a unit multiple of the top variable, scaling an entry
    by a unit changes none of the three conditions.
    """
    try:
        labels = M.labels(monic=False)
    except NotLabelForm:
        return MatrixClass.NONE
    n = M.n
    d = M.leading_zeros()
    if any(d[i] > d[i + 1] for i in range(n - 1)):
        return MatrixClass.NONE
    for i in range(n):
        row = labels[i][d[i]:]
        if any(lab is None for lab in row):
            return MatrixClass.NONE
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return MatrixClass.NONE
    for j in range(n):
        col = [labels[i][j] for i in range(n) if labels[i][j] is not None]
        if any(col[i] <= col[i + 1] for i in range(len(col) - 1)):
            return MatrixClass.NONE
    flags = MatrixClass.GENERAL
    if any(lab == 0 for row in labels for lab in row):
        return flags
    flags |= MatrixClass.REDUCED
    if any(lab is None for row in labels for lab in row):
        return flags
    if any(e.constant_term() != 0 for row in M.entries for e in row):
        return flags
    # every 2x2 submatrix has equal diagonal and antidiagonal label sums
    for i in range(1, n):
        for j in range(1, n):
            if labels[i][j] + labels[0][0] != labels[i][0] + labels[0][j]:
                return flags
    return flags | MatrixClass.SPECIAL


def _pivots(M: SchurMatrix) -> List[Tuple[int, int]]:
    return [
        (i, j)
        for i, row in enumerate(M.entries)
        for j, e in enumerate(row)
        if e and e.is_constant()
    ]


def _eliminate(M: SchurMatrix, pivots, trace: Optional[Callable] = None) -> List[List[MultiPoly]]:
    f = M.field
    rows = [list(row) for row in M.entries]
    n = M.n
    for r, c in pivots:
        inv = f.inv(rows[r][c].constant_term())
        for i in range(r):
            e = rows[i][c]
            if e.is_zero():
                continue
            factor = e.scale(inv)
            rows[i] = [
                x if rows[r][j].is_zero() else x - factor * rows[r][j]
                for j, x in enumerate(rows[i])
            ]
        logger.debug("pivot (%d, %d) cleared its column", r + 1, c + 1)
        if trace is not None:
            trace("rows", (r, c), SchurMatrix(f, rows, M.basis))
    for r, c in pivots:
        inv = f.inv(rows[r][c].constant_term())
        for j in range(n):
            if j == c or rows[r][j].is_zero():
                continue
            factor = rows[r][j].scale(inv)
            for i in range(n):
                if not rows[i][c].is_zero():
                    rows[i][j] = rows[i][j] - factor * rows[i][c]
        logger.debug("pivot (%d, %d) cleared its row", r + 1, c + 1)
        if trace is not None:
            trace("cols", (r, c), SchurMatrix(f, rows, M.basis))
    return rows


def _require_general(M: SchurMatrix, reduced: bool = False):
    flags = classify_matrix(M)
    needed = MatrixClass.REDUCED if reduced else MatrixClass.GENERAL
    if not flags & needed:
        raise NotGeneralSchur(
            "matrix is not a {0:s}general Schur matrix:\n{1:s}".format(
                "reduced " if reduced else "", M.to_text()
            )
        )


def psi_tilde(M: SchurMatrix, check: bool = True, trace: Optional[Callable] = None) -> PsiResult:
    """Pivot elimination without deletion, ``det`` is preserved exactly"""
    if check:
        _require_general(M)
    pivots = _pivots(M)
    if not pivots:
        return PsiResult(M, 1, ())
    rows = _eliminate(M, pivots, trace)
    return PsiResult(SchurMatrix(M.field, rows, M.basis), 1, tuple(pivots))


def psi(M: SchurMatrix, check: bool = True, trace: Optional[Callable] = None) -> PsiResult:
    """Reduce a general Schur matrix

    Returns
    -------
    PsiResult
        ``matrix`` is the reduced matrix, possibly 0x0. When it is nonempty
        :math:`\\det \\psi(M) = \\alpha \\det M` with ``alpha`` a nonzero constant.
        ``pivots`` lists the pivot positions of `M`, top to bottom.

    Raises
    ------
    NotGeneralSchur
        If `check` is set and `M` is not a general Schur matrix.
    """
    if check:
        _require_general(M)
    f = M.field
    pivots = _pivots(M)
    if not pivots:
        return PsiResult(M, 1, ())
    rows = _eliminate(M, pivots, trace)
    beta = 1
    live_rows = list(range(M.n))
    live_cols = list(range(M.n))
    for r, c in pivots:
        rp, cp = live_rows.index(r), live_cols.index(c)
        v = rows[r][c].constant_term()
        beta = f.mul(beta, f.neg(v) if (rp + cp) % 2 else v)
        live_rows.remove(r)
        live_cols.remove(c)
    reduced = SchurMatrix(f, [[rows[i][j] for j in live_cols] for i in live_rows], M.basis)
    return PsiResult(reduced, f.inv(beta), tuple(pivots))


def _assignment_values(assignments) -> List[FieldElement]:
    if isinstance(assignments, Mapping):
        keys = sorted(assignments)
        if keys != list(range(1, len(keys) + 1)):
            raise ValueError(
                "assignments must be consecutive from x1, got variables {0!r}".format(keys)
            )
        return [assignments[i] for i in keys]
    return list(assignments)


def _check_label_form(M: SchurMatrix, step: int, value: FieldElement):
    try:
        M.labels(monic=False)
    except NotLabelForm as err:
        raise NotLabelForm(
            "entry left label form after assigning x{0:d}={1:d}: {2!s}\n{3:s}".format(
                step, value, err, M.to_text()
            )
        )


def phi(M: SchurMatrix, assignments, check: bool = True, trace: Optional[Callable] = None) -> SchurMatrix:
    """Assign :math:`x_1 = a_1, \\ldots, x_r = a_r` in order, reducing with :func:`psi` after each

    `assignments` is a sequence ``[a_1, ..., a_r]`` or a mapping ``{1: a_1, ...}``
    whose keys must be consecutive from 1. `trace` is called with
    ``(i, a_i, matrix)`` after every step.
    """
    values = _assignment_values(assignments)
    if check:
        _require_general(M, reduced=True)
    for i, a in enumerate(values, 1):
        if M.n == 0:
            break
        M = M.substitute({i: a})
        _check_label_form(M, i, a)
        M = psi(M, check=check).matrix
        if trace is not None:
            trace(i, a, M)
    return M


def phi_tilde(M: SchurMatrix, assignments, check: bool = True, trace: Optional[Callable] = None) -> SchurMatrix:
    """As :func:`phi` but threading :func:`psi_tilde`, so nothing is deleted"""
    values = _assignment_values(assignments)
    if check:
        _require_general(M, reduced=True)
    for i, a in enumerate(values, 1):
        M = M.substitute({i: a})
        _check_label_form(M, i, a)
        # kept pivots break the row ordering of a general Schur matrix
        M = psi_tilde(M, check=False).matrix
        if trace is not None:
            trace(i, a, M)
    return M


def _read_blocks(grid: Sequence[Sequence[FieldElement]]) -> Optional[Composition]:
    # anti-diagonal scalar identity blocks read lower-left to upper-right
    n = len(grid)
    sizes = []
    c = 0
    while c < n:
        nonzero = [r for r in range(n) if grid[r][c] != 0]
        if len(nonzero) != 1:
            return None
        r = nonzero[0]
        s = n - c - r
        if s < 1:
            return None
        v = grid[r][c]
        for t in range(s):
            for i in range(n):
                want = v if i == r + t else 0
                if c + t >= n or grid[i][c + t] != want:
                    return None
        sizes.append(s)
        c += s
    return tuple(sizes)


def block_structure(lam_rect, field: Field, assignment: Sequence[FieldElement]):
    """Block sizes of :func:`phi_tilde` on a fully assigned rectangle, lower-left first

    Returns :data:`SINGULAR` when the determinant vanishes.

    Raises
    ------
    ValueError
        If `lam_rect` is not a rectangle :math:`(a^n)` with :math:`a \\geq n`, or the
        assignment does not cover :math:`x_1..x_{2n-1}`.
    """
    lam = Partition(lam_rect)
    if not lam or lam[0] != lam[-1]:
        raise ValueError("{0!r} is not a rectangle".format(lam))
    n = len(lam)
    if lam[0] < n:
        raise ValueError("rectangle {0!r} has fewer columns than rows".format(lam))
    if len(assignment) != 2 * n - 1:
        raise ValueError(
            "expected {0:d} assigned values, got {1:d}".format(2 * n - 1, len(assignment))
        )
    A = rectangle_matrix(n, field)
    if A.det_at(assignment) == 0:
        return SINGULAR
    final = phi_tilde(A, assignment)
    grid = [[e.constant_term() for e in row] for row in final.entries]
    blocks = _read_blocks(grid)
    if blocks is None:
        raise ArithmeticError(
            "reduced rectangle is not block anti-diagonal:\n{0:s}".format(final.to_text())
        )
    return blocks


def rectangle_trichotomy(B: SchurMatrix, n: int) -> int:
    """Which shape a reduced rectangle :math:`\\phi(A; x_1 = a_1, \\ldots)` takes

    1 when `B` is empty; 2 when its lowest :math:`n'` diagonals vanish; 3 when the
    first nonzero diagonal `k` is constant and every diagonal :math:`i \\geq k` has
    label :math:`2n - 2n' + i`. Diagonals are numbered from the lower-left corner.

    Raises
    ------
    ValueError
        If `B` takes none of the three shapes.
    """
    m = B.n
    if m == 0:
        return 1

    def diagonal(k):
        return [B.entries[i][i + k - m] for i in range(m) if 0 <= i + k - m < m]

    if all(e.is_zero() for k in range(1, m + 1) for e in diagonal(k)):
        return 2
    k = next(k for k in range(1, m + 1) if any(not e.is_zero() for e in diagonal(k)))
    first = diagonal(k)
    if any(e != first[0] for e in first):
        raise ValueError("diagonal {0:d} is not constant:\n{1:s}".format(k, B.to_text()))
    for i in range(k, 2 * m):
        for e in diagonal(i):
            if label_of(e, monic=False) != 2 * n - 2 * m + i:
                raise ValueError(
                    "diagonal {0:d} does not carry label {1:d}:\n{2:s}".format(
                        i, 2 * n - 2 * m + i, B.to_text()
                    )
                )
    return 3


def _scalar_block(T: SchurMatrix, top: int, c: int, s: int) -> bool:
    rows = range(top - s, top)
    v = T.entries[top - s][c]
    if not v.is_constant() or v.is_zero():
        return False
    for di, i in enumerate(rows):
        for dj in range(s):
            e = T.entries[i][c + dj]
            if (e != v) if di == dj else not e.is_zero():
                return False
    return True


def _phi_at(T: SchurMatrix, top: int, c: int, phi_block: SchurMatrix) -> bool:
    m = phi_block.n
    return all(
        T.entries[top - m + i][c + j] == phi_block.entries[i][j] for i in range(m) for j in range(m)
    )


def is_block_anti_diagonal(T: SchurMatrix, phi_block: SchurMatrix) -> bool:
    """Whether a :func:`phi_tilde` result splits into anti-diagonal blocks around `phi_block`

    Blocks run from the lower-left corner to the upper-right one. Each is a
    nonzero scalar multiple of the identity except one equal to `phi_block`. That
    one is normally the upper-right block; when the last pivots fell above the main
    diagonal a zero `phi_block` sits just inside the final scalar block instead.
    Entries outside the blocks vanish.
    """
    n, m = T.n, phi_block.n

    def outside_zero(blocks):
        inside = {(r + i, c + j) for r, c, s in blocks for i in range(s) for j in range(s)}
        return all(
            T.entries[i][j].is_zero() for i in range(n) for j in range(n) if (i, j) not in inside
        )

    def walk(c, placed, blocks):
        if c == n:
            return (placed or m == 0) and outside_zero(blocks)
        top = n - c
        if not placed and 0 < m <= top and _phi_at(T, top, c, phi_block):
            if walk(c + m, True, blocks + [(top - m, c, m)]):
                return True
        for s in range(1, top + 1):
            if _scalar_block(T, top, c, s):
                if walk(c + s, placed, blocks + [(top - s, c, s)]):
                    return True
        return False

    return walk(0, False, [])


def corner_minors(M: SchurMatrix) -> Dict[int, MultiPoly]:
    """Determinants of the bottom-left ``s x s`` corners, ``s = 1..n``"""
    n = M.n
    return {
        s: M.submatrix(range(n - s, n), range(s)).det() for s in range(1, n + 1)
    }


def corner_minors_unchanged(M: SchurMatrix, assignments) -> bool:
    """Replay :func:`phi_tilde` and compare the bottom-left minors around every
    :func:`psi_tilde` step.

    Substituting :math:`x_i` changes the minors, the elimination that follows must not.
    """
    for i, a in enumerate(_assignment_values(assignments), 1):
        M = M.substitute({i: a})
        before = corner_minors(M)
        M = psi_tilde(M, check=False).matrix
        if corner_minors(M) != before:
            logger.debug("corner minors moved after x%d=%d", i, a)
            return False
    return True
