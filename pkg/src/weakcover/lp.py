"""Exact simplex over rationals for covering-style programs.

Every program in this package minimizes the sum of all variables subject to
sparse ">=" rows, at most one "==" row, and x >= 0. Pivoting is exact
(arbitrary-precision rationals) and uses Bland's smallest-index rule, so the
solvers terminate and are deterministic, and every returned point is an
optimal basic feasible solution, i.e. a vertex of the feasible polyhedron.
That last part matters: half-integrality and the integrality results
downstream are statements about vertices, not about arbitrary optima.

The production engine, DualSimplex, pivots on the dual (maximize b.y
subject to A'y <= 1, y >= 0), whose slack basis is feasible from the start:
no artificial variables, and the tableau has one row per primal *variable*
rather than per constraint, which is much smaller here since cutting planes
multiply rows, never columns. Adding a primal row mid-stream is adding a
dual column, which leaves the current basis feasible, so a cutting-plane
loop re-optimizes in a handful of pivots instead of solving from scratch.
The primal solution read off the optimal dual tableau (the reduced costs of
the slack columns) is a vertex of the primal polyhedron: the dual basis
columns transpose to |variables| linearly independent tight primal
constraints.

two_phase_solve is the classic textbook method on the primal; it is slower
and kept as an independent reference, and the test suite checks the two
agree.
"""

from dataclasses import dataclass, field

from .rational import RAT_ONE, RAT_ZERO, Rat

GE = ">="
EQ = "=="


class LpError(Exception):
    """Base class for solver failures."""


class LpInfeasibleError(LpError):
    """No point satisfies all rows."""


class LpUnboundedError(LpError):
    """An improving ray was found; impossible for well-formed programs here."""


@dataclass(frozen=True)
class LpRow:
    """One constraint: sum(coeff * x_var) relation rhs."""

    coeffs: tuple[tuple[int, object], ...]
    relation: str
    rhs: object

    @staticmethod
    def of(coeffs: dict, relation: str, rhs) -> "LpRow":
        if relation not in (GE, EQ):
            raise ValueError(f"relation must be {GE!r} or {EQ!r}")
        pairs = tuple(sorted((int(v), Rat(c)) for v, c in coeffs.items()))
        return LpRow(pairs, relation, Rat(rhs))


@dataclass(frozen=True)
class LpProblem:
    """min sum(x_v) over the given rows; variables are vertex ids."""

    variables: tuple[int, ...]
    rows: tuple[LpRow, ...]

    def __post_init__(self):
        if list(self.variables) != sorted(set(self.variables)):
            raise ValueError("variables must be sorted and unique")
        known = set(self.variables)
        eq_count = 0
        for row in self.rows:
            if row.relation == EQ:
                eq_count += 1
            for v, _ in row.coeffs:
                if v not in known:
                    raise ValueError(f"row references unknown variable {v}")
        if eq_count > 1:
            raise ValueError("at most one equality row is allowed")


@dataclass(frozen=True)
class LpSolution:
    """A basic feasible optimum: exact values, objective, and tight rows."""

    values: dict = field(compare=True)
    objective: object = RAT_ZERO
    tight_rows: frozenset = frozenset()
    is_basic: bool = True


class DualSimplex:
    """Incremental exact engine: solve, append rows, re-solve warm.

    Columns are laid out as one dual variable per ">=" row (a +/- pair per
    "==" row, since its dual variable is free), in row order, followed by one
    slack per primal variable. The slack block of the tableau is the basis
    inverse, which is what makes appending a row cheap: the new column's
    current representation is just that inverse applied to the row's
    coefficient vector.
    """

    def __init__(self, problem: LpProblem):
        self._variables = problem.variables
        self._row_of = {v: r for r, v in enumerate(problem.variables)}
        n = len(problem.variables)
        self._n = n
        self._d = 0
        self._eq_count = 0
        self._rows: list[LpRow] = []
        self._tableau = [
            [RAT_ONE if j == r else RAT_ZERO for j in range(n)] + [RAT_ONE]
            for r in range(n)
        ]
        self._basis = list(range(n))
        self._zrow = [RAT_ZERO] * (n + 1)
        for row in problem.rows:
            self.add_row(row)

    def add_row(self, row: LpRow) -> int:
        """Append a constraint; the current basis stays feasible. Returns the
        new row's index."""
        if row.relation == EQ:
            if self._eq_count:
                raise ValueError("at most one equality row is allowed")
            self._eq_count += 1
        coeffs = []
        for v, c in row.coeffs:
            r = self._row_of.get(v)
            if r is None:
                raise ValueError(f"row references unknown variable {v}")
            coeffs.append((r, c))
        self._rows.append(row)
        self._insert_column(coeffs, -row.rhs)
        if row.relation == EQ:
            self._insert_column([(r, -c) for r, c in coeffs], row.rhs)
        return len(self._rows) - 1

    def solve(self) -> LpSolution:
        """Pivot to optimality from the current basis and extract the primal
        vertex."""
        try:
            _pivot_until_optimal(
                self._tableau, self._zrow, self._basis, self._d + self._n
            )
        except LpUnboundedError:
            raise LpInfeasibleError("no point satisfies all rows") from None
        d = self._d
        values = {v: self._zrow[d + r] for v, r in self._row_of.items()}
        objective = sum(values.values(), RAT_ZERO)
        if objective != self._zrow[-1]:
            raise LpError("strong duality violated; solver bug")
        return LpSolution(values, objective, _tight_rows(self._rows, values), True)

    def _insert_column(self, coeffs, cost) -> None:
        d = self._d
        znew = cost
        for r, c in coeffs:
            znew += c * self._zrow[d + r]
        for line in self._tableau:
            val = RAT_ZERO
            for r, c in coeffs:
                s = line[d + r]
                if s:
                    val += c * s
            line.insert(d, val)
        self._zrow.insert(d, znew)
        self._basis = [b + 1 if b >= d else b for b in self._basis]
        self._d = d + 1


def simplex_solve(problem: LpProblem) -> LpSolution:
    """Solve to optimality via the dual; return a vertex of the polyhedron."""
    return DualSimplex(problem).solve()


def two_phase_solve(problem: LpProblem) -> LpSolution:
    """Classic two-phase primal simplex; reference implementation."""
    variables = problem.variables
    n = len(variables)
    rows = problem.rows
    m = len(rows)
    if m == 0:
        values = {v: RAT_ZERO for v in variables}
        return LpSolution(values, RAT_ZERO, frozenset(), True)

    col_of = {v: k for k, v in enumerate(variables)}
    surplus_col = {}
    for i, row in enumerate(rows):
        if row.relation == GE:
            surplus_col[i] = n + len(surplus_col)
    art0 = n + len(surplus_col)
    width = art0 + 1

    # Artificial variables form the initial basis but never re-enter once
    # they leave, so their columns are never materialized; basis[i] >= art0
    # marks row i as still sitting on its artificial.
    tableau: list[list] = []
    basis: list[int] = []
    for i, row in enumerate(rows):
        line = [RAT_ZERO] * width
        for v, c in row.coeffs:
            line[col_of[v]] = c
        if row.relation == GE:
            line[surplus_col[i]] = -RAT_ONE
        line[-1] = row.rhs
        if line[-1] < RAT_ZERO:
            line = [-a for a in line]
        tableau.append(line)
        basis.append(art0 + i)

    # Phase 1: minimize the artificial sum starting from the artificial basis.
    zrow = [RAT_ZERO] * width
    for line in tableau:
        zrow = [z - a if a else z for z, a in zip(zrow, line)]
    _pivot_until_optimal(tableau, zrow, basis, art0)
    if zrow[-1] != RAT_ZERO:
        raise LpInfeasibleError("no point satisfies all rows")

    # Drive leftover artificials out of the basis; drop redundant rows.
    keep = []
    for i in range(m):
        if basis[i] >= art0:
            line = tableau[i]
            col = next((j for j in range(art0) if line[j] != RAT_ZERO), None)
            if col is None:
                continue  # redundant row, all zeros outside the artificials
            _pivot(tableau, zrow, basis, i, col)
        keep.append(i)
    tableau = [tableau[i] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2: minimize the structural sum from the feasible basis.
    zrow = [RAT_ONE] * n + [RAT_ZERO] * (art0 - n + 1)
    for i, b in enumerate(basis):
        if b < n:
            zrow = [z - a if a else z for z, a in zip(zrow, tableau[i])]
    _pivot_until_optimal(tableau, zrow, basis, art0)

    values = {v: RAT_ZERO for v in variables}
    for i, b in enumerate(basis):
        if b < n:
            values[variables[b]] = tableau[i][-1]
    objective = sum(values.values(), RAT_ZERO)
    return LpSolution(values, objective, _tight_rows(rows, values), True)


def _tight_rows(rows, values) -> frozenset:
    """Indices of rows satisfied with equality; raises if any is violated."""
    tight = []
    for idx, row in enumerate(rows):
        lhs = sum((c * values[v] for v, c in row.coeffs), RAT_ZERO)
        if lhs == row.rhs:
            tight.append(idx)
        elif row.relation == EQ or lhs < row.rhs:
            raise LpError(f"row {idx} violated after solve")
    return frozenset(tight)


def _pivot_until_optimal(tableau, zrow, basis, entering_limit):
    """Bland's rule: smallest eligible column enters, ratio ties break on the
    smallest basic variable index. Never cycles."""
    while True:
        enter = -1
        for j in range(entering_limit):
            if zrow[j] < RAT_ZERO:
                enter = j
                break
        if enter < 0:
            return
        leave = -1
        best = None
        best_var = None
        for i, line in enumerate(tableau):
            a = line[enter]
            if a > RAT_ZERO:
                ratio = line[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < best_var):
                    best, leave, best_var = ratio, i, basis[i]
        if leave < 0:
            raise LpUnboundedError("improving ray found")
        _pivot(tableau, zrow, basis, leave, enter)


def _pivot(tableau, zrow, basis, r, c):
    prow = tableau[r]
    piv = prow[c]
    if piv != RAT_ONE:
        inv = RAT_ONE / piv
        prow = [a * inv for a in prow]
        tableau[r] = prow
    for i, line in enumerate(tableau):
        if i == r:
            continue
        f = line[c]
        if f:
            tableau[i] = [t - f * s if s else t for t, s in zip(line, prow)]
    f = zrow[c]
    if f:
        zrow[:] = [t - f * s if s else t for t, s in zip(zrow, prow)]
    basis[r] = c
