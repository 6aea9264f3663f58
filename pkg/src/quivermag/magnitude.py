"""Euler form, Euler matrix, magnitude, and the identity checks tying them together.

The Euler form pairs two classes in the Grothendieck group through the
alternating sum of Ext dimensions; assembled into a matrix over the simples it
inverts the Cartan matrix, and its total sum is the magnitude of the category
of indecomposable projectives.  When the Cartan matrix is singular, magnitude
falls back to a weighting/coweighting pair when one exists.

All functions are pure over immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import Matrix, determinant, invert, solve
from .path_algebra import PathBasis, cartan_matrix, enumerate_paths
from .quiver import BoundQuiver
from .resolutions import ExtTable, IncompleteExtTableError, ext_table


@dataclass(frozen=True)
class GrothClass:
    """An integer class in the basis of simple modules, one coefficient per vertex."""

    coeffs: tuple[int, ...]

    @classmethod
    def unit(cls, size: int, index: int) -> "GrothClass":
        return cls(tuple(1 if k == index else 0 for k in range(size)))

    @classmethod
    def ones(cls, size: int) -> "GrothClass":
        return cls((1,) * size)


def _chi_simples(ext: ExtTable) -> list[list[int]]:
    """chi(S_i, S_j) as a grid; needs the table complete for the sum to be finite."""
    if not ext.complete:
        raise IncompleteExtTableError(
            f"global dimension unresolved at bound {ext.bound}; "
            "the alternating Ext sum cannot be truncated")
    n = len(ext.vertices)
    return [[sum((-1) ** d * ext.entry(d, i, j) for d in range(ext.max_degree + 1))
             for j in range(n)] for i in range(n)]


def euler_form(x: GrothClass, y: GrothClass, ext: ExtTable) -> int:
    """Bilinear alternating Ext pairing of two classes in the simple basis."""
    chi = _chi_simples(ext)
    return sum(xi * yj * chi[i][j]
               for i, xi in enumerate(x.coeffs) if xi
               for j, yj in enumerate(y.coeffs) if yj)


def euler_matrix(ext: ExtTable) -> Matrix:
    """Matrix with (i, j) entry chi(S_j, S_i); inverse of the Cartan matrix."""
    chi = _chi_simples(ext)
    n = len(ext.vertices)
    return Matrix([[chi[j][i] for j in range(n)] for i in range(n)], n)


def class_of_projective(pb: PathBasis, vertex: str) -> GrothClass:
    """The projective at a vertex expanded in simples: a Cartan matrix column."""
    vertices = pb.bound_quiver.quiver.vertices
    if vertex not in vertices:
        raise ValueError(f"unknown vertex {vertex!r}")
    return GrothClass(tuple(pb.count(vertex, v) for v in vertices))


def simple_in_projective_basis(e: Matrix, vertex_index: int) -> tuple[Fraction, ...]:
    """Column of the Euler matrix: a simple expanded in projectives."""
    return e.col(vertex_index)


@dataclass(frozen=True)
class MagnitudeResult:
    """Magnitude value plus the evidence that defines it.

    status is "invertible" (value = sum of the inverse's entries),
    "weighted" (value = common sum of a weighting/coweighting pair), or
    "undefined" (reason recorded; any one-sided artifact attached).
    """

    status: str
    value: Fraction | None
    inverse: Matrix | None = None
    weighting: tuple[Fraction, ...] | None = None
    coweighting: tuple[Fraction, ...] | None = None
    reason: str | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status,
                     "value": None if self.value is None else str(self.value)}
        if self.inverse is not None:
            out["inverse"] = [[str(x) for x in row] for row in self.inverse.entries]
        if self.weighting is not None:
            out["weighting"] = [str(x) for x in self.weighting]
        if self.coweighting is not None:
            out["coweighting"] = [str(x) for x in self.coweighting]
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def magnitude(matrix: Matrix) -> MagnitudeResult:
    """Sum of the entries of the inverse, or the weighting-based fallback.

    A weighting w solves matrix.w = 1 and a coweighting v solves
    v^T.matrix = 1^T; when both exist their sums agree and define the value
    even for a singular matrix.
    """
    if not matrix.is_square():
        raise ValueError(f"magnitude of non-square {matrix.rows}x{matrix.cols} matrix")
    inverse = invert(matrix)
    if inverse is not None:
        return MagnitudeResult("invertible", inverse.entry_sum(), inverse=inverse)
    ones = Matrix([[1]] * matrix.rows, 1)
    w_sol = solve(matrix, ones)
    v_sol = solve(matrix.transpose(), ones)
    weighting = w_sol.col(0) if w_sol is not None else None
    coweighting = v_sol.col(0) if v_sol is not None else None
    if weighting is not None and coweighting is not None:
        w_sum = sum(weighting, Fraction(0))
        v_sum = sum(coweighting, Fraction(0))
        if w_sum == v_sum:
            return MagnitudeResult("weighted", w_sum, weighting=weighting, coweighting=coweighting)
        return MagnitudeResult("undefined", None, weighting=weighting, coweighting=coweighting,
                               reason=f"weighting sum {w_sum} differs from coweighting sum {v_sum}")
    missing = [name for name, vec in (("weighting", weighting), ("coweighting", coweighting))
               if vec is None]
    return MagnitudeResult("undefined", None, weighting=weighting, coweighting=coweighting,
                           reason="singular matrix with no " + " and no ".join(missing))


def weighted_euler_sum(e: Matrix, d: Sequence[int]) -> Fraction:
    """Sum of e[i][j] / (d[i] * d[j]) over all entries, for positive weights d."""
    if not e.is_square():
        raise ValueError("weighted sum of a non-square matrix")
    if len(d) != e.rows:
        raise ValueError(f"expected {e.rows} weights, got {len(d)}")
    weights = [Fraction(x) for x in d]
    if any(x <= 0 for x in weights):
        raise ValueError("weights must be positive")
    return sum((e.entries[i][j] / (weights[i] * weights[j])
                for i in range(e.rows) for j in range(e.cols)), Fraction(0))


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str

    def to_json_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    """Machine-checkable record of the Cartan/Euler/magnitude identities.

    Checks are skipped (never guessed) when the global dimension was not
    confirmed finite within the degree bound.
    """

    vertices: tuple[str, ...]
    dimension: int
    max_degree: int
    cartan: Matrix
    cartan_determinant: Fraction
    global_dimension: int | None
    euler: Matrix | None
    euler_form_ss: int | None
    magnitude: MagnitudeResult
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def overall(self) -> str:
        if any(c.status == "fail" for c in self.checks):
            return "fail"
        if any(c.status == "skipped" for c in self.checks):
            return "unresolved"
        return "pass"

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "dimension": self.dimension,
            "max_degree": self.max_degree,
            "cartan_matrix": [[int(x) for x in row] for row in self.cartan.entries],
            "cartan_determinant": str(self.cartan_determinant),
            "global_dimension": (self.global_dimension if self.global_dimension is not None
                                 else f">= {self.max_degree}"),
            "euler_matrix": (None if self.euler is None
                             else [[int(x) for x in row] for row in self.euler.entries]),
            "euler_form_ss": self.euler_form_ss,
            "magnitude": self.magnitude.to_json_dict(),
            "checks": [c.to_json_dict() for c in self.checks],
            "overall": self.overall,
        }


def assemble_checks(cartan: Matrix, det: Fraction, euler: Matrix | None,
                    chi_ss: int | None, mag: MagnitudeResult,
                    skip_reason: str | None) -> tuple[Check, ...]:
    """The three identity checks, given already-computed ingredients.

    With a skip_reason every check is skipped; otherwise each passes or fails
    on exact equality.  Split out from `verify` so adversarial inputs can be
    checked directly.
    """
    if skip_reason is not None:
        return tuple(Check(name, "skipped", skip_reason)
                     for name in ("euler_matrix_inverts_cartan",
                                  "magnitude_matches_euler_form",
                                  "cartan_unimodular"))
    assert euler is not None and chi_ss is not None
    identity = Matrix.identity(cartan.rows)
    inverse_ok = cartan * euler == identity and euler * cartan == identity
    checks = [Check("euler_matrix_inverts_cartan",
                    "pass" if inverse_ok else "fail",
                    "Cartan * Euler = Euler * Cartan = identity" if inverse_ok
                    else "the Euler matrix is not a two-sided inverse of the Cartan matrix")]
    if mag.value is None:
        checks.append(Check("magnitude_matches_euler_form", "fail",
                            f"magnitude undefined ({mag.reason}) but the Euler form gives {chi_ss}"))
    else:
        ok = mag.value == chi_ss
        checks.append(Check("magnitude_matches_euler_form",
                            "pass" if ok else "fail",
                            f"magnitude {mag.value} vs Euler form {chi_ss}"))
    unimodular = det in (1, -1)
    checks.append(Check("cartan_unimodular",
                        "pass" if unimodular else "fail",
                        f"det = {det}"))
    return tuple(checks)


def verify(bq: BoundQuiver, max_degree: int | None = None) -> VerificationReport:
    """Check the inverse, magnitude and unimodularity identities on one algebra.

    max_degree defaults to the algebra's dimension.  Failures land in the
    report, never in exceptions; only an infinite-dimensional algebra raises.
    """
    pb = enumerate_paths(bq)  # raises InfiniteDimensionalError when appropriate
    if max_degree is None:
        max_degree = pb.total_dim
    cartan = cartan_matrix(pb)
    det = determinant(cartan)
    table = ext_table(bq, max_degree, pb=pb)
    mag = magnitude(cartan)
    if table.complete:
        euler = euler_matrix(table)
        size = len(bq.quiver.vertices)
        chi_ss = euler_form(GrothClass.ones(size), GrothClass.ones(size), table)
        skip_reason = None
    else:
        euler = None
        chi_ss = None
        skip_reason = f"global dimension not confirmed finite within degree {max_degree}"
    checks = assemble_checks(cartan, det, euler, chi_ss, mag, skip_reason)
    return VerificationReport(bq.quiver.vertices, pb.total_dim, max_degree, cartan, det,
                              table.global_dimension, euler, chi_ss, mag, checks)
