"""End-to-end verification workflows over the exact kernels.

Every workflow returns a VerificationReport whose JSON form is byte-stable
for a fixed (input, seed) pair: checks are emitted in a fixed order, all
randomness flows through one seeded generator, and the wall-clock duration
is carried on the report object but kept out of the canonical JSON.

A failed check always embeds a witness (a serialized matrix or parameter
set) sufficient to replay the failure through the module that produced it.
The maximality probe is one-sided: exhausting its trial budget yields an
"inconclusive" check, never a refutation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from random import Random
from typing import Any, Iterable

from .degeneration import (
    border_profile,
    component_dims,
    corner_weights,
    grassmannian_limit,
    one_param_family,
    weight_decomposition,
)
from .errors import BadBudgetError
from .identities import (
    BorderedInstance,
    DiscriminantInstance,
    bordered_matrix,
    closed_form_char_poly,
    quartic_discriminant_check,
    two_zeros_resultant_check,
)
from .matrices import Matrix
from .polynomials import char_poly
from .sampling import (
    distinct_nonzero_rationals,
    distinct_rationals,
    nonzero_rational,
    random_invertible_upper,
    random_matrix,
    random_member,
    random_rational,
)
from .serialize import format_rational, matrix_to_obj
from .spaces import enumerate_configs, extremal_space, max_dimension
from .spectral import (
    count_distinct_by_sylvester_rank,
    count_distinct_eigenvalues,
    is_regular,
    minimal_polynomial_degree,
)
from .subspaces import MatrixSubspace, check_unit_implications, conjugate, is_borel_invariant

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
VACUOUS = "vacuous"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    witness: Any = None

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {"name": self.name, "status": self.status}
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


@dataclass
class VerificationReport:
    target: str
    seed: int
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, ok: bool, witness: Any = None) -> None:
        self.checks.append(CheckResult(name, PASS if ok else FAIL, None if ok else witness))

    def to_obj(self) -> dict[str, Any]:
        # elapsed stays off the wire so identical inputs give identical bytes
        return {
            "target": self.target,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.to_obj() for c in self.checks],
        }


def _extremal_cells(n_range: Iterable[int]):
    for n in n_range:
        for k in range(1, n):
            for p in range(0, n - k + 2):
                yield n, k, p


def verify_extremal(n: int, k: int, p: int, samples: int = 100, seed: int = 0) -> VerificationReport:
    """Full check battery for one extremal space.

    Dimension formula, sampled eigenvalue budget, Borel invariance, forced
    units, weight support under the corner weights, and (for k >= 3) the two
    border dimension bounds.
    """
    started = time.monotonic()
    rng = Random(seed)
    report = VerificationReport(target=f"extremal-space(n={n},k={k},p={p})", seed=seed)
    v = extremal_space(n, k, p)

    report.add("dimension-formula", v.dim == max_dimension(n, k), {"dim": v.dim})

    offender = None
    for _ in range(samples):
        m = random_member(v, rng)
        if count_distinct_eigenvalues(m) > k:
            offender = matrix_to_obj(m)
            break
    report.add("member-eigenvalue-budget", offender is None, offender)

    report.add("borel-invariant", is_borel_invariant(v))

    violations = check_unit_implications(v)
    report.add(
        "forced-units",
        not violations,
        [{"rule": x.rule, "i": x.i, "j": x.j} for x in violations] or None,
    )

    dims = component_dims(weight_decomposition(v, corner_weights(n)))
    support_ok = set(dims) <= {-n, 0, n}
    report.add("weight-support", support_ok, {"weights": sorted(dims)})

    if k >= 3:
        prof = border_profile(v, k)
        report.add(
            "primed-border-bound",
            prof.row_primed_dim + prof.col_primed_dim <= n - k + 1,
            {"row_primed": prof.row_primed_dim, "col_primed": prof.col_primed_dim},
        )
        report.add(
            "border-bound",
            prof.row_dim + prof.col_dim <= n + k - 3,
            {"row": prof.row_dim, "col": prof.col_dim},
        )
    else:
        report.checks.append(CheckResult("primed-border-bound", VACUOUS))
        report.checks.append(CheckResult("border-bound", VACUOUS))

    report.elapsed = time.monotonic() - started
    return report


def maximality_probe(n: int, k: int, p: int, trials: int = 1000, seed: int = 0) -> VerificationReport:
    """Randomized one-sided maximality evidence.

    For every matrix unit outside the space, sample members of the augmented
    space until one exceeds the eigenvalue budget; each witness is verified
    exactly.  A unit already inside the space is reported vacuous, an
    exhausted budget inconclusive.
    """
    started = time.monotonic()
    rng = Random(seed)
    report = VerificationReport(target=f"maximality-probe(n={n},k={k},p={p})", seed=seed)
    v = extremal_space(n, k, p)
    for i in range(n):
        for j in range(n):
            unit = Matrix.unit(n, i, j)
            name = f"unit-{i}-{j}"
            if v.contains(unit):
                report.checks.append(CheckResult(name, VACUOUS))
                continue
            found = None
            used = 0
            for t in range(trials):
                used = t + 1
                m = random_member(v, rng) + unit.scale(random_rational(rng))
                if count_distinct_eigenvalues(m) >= k + 1:
                    found = m
                    break
            if found is not None:
                report.checks.append(
                    CheckResult(name, PASS, {"trials": used, "witness": matrix_to_obj(found)})
                )
            else:
                report.checks.append(CheckResult(name, INCONCLUSIVE, {"trials": trials}))
    report.elapsed = time.monotonic() - started
    return report


# -- full suite ----------------------------------------------------------------


def _random_bordered_instance(rng: Random, n: int, k: int) -> BorderedInstance:
    return BorderedInstance(
        n,
        k,
        tuple(distinct_rationals(rng, k)),
        tuple(random_rational(rng) for _ in range(n - k + 1)),
        tuple(random_rational(rng) for _ in range(n - 1)),
    )


def _suite_dimension(report: VerificationReport, n_hi: int) -> None:
    for n in range(4, n_hi + 1):
        bad = None
        for nn, k, p in _extremal_cells([n]):
            if extremal_space(nn, k, p).dim != max_dimension(nn, k):
                bad = {"n": nn, "k": k, "p": p}
                break
        report.add(f"dimension-formula-n{n}", bad is None, bad)


def _suite_budget(report: VerificationReport, rng: Random, n_hi: int, samples: int) -> None:
    for n in range(4, n_hi + 1):
        bad = None
        for nn, k, p in _extremal_cells([n]):
            v = extremal_space(nn, k, p)
            for _ in range(samples):
                m = random_member(v, rng)
                if count_distinct_eigenvalues(m) > k:
                    bad = {"n": nn, "k": k, "p": p, "member": matrix_to_obj(m)}
                    break
            if bad:
                break
        report.add(f"eigenvalue-budget-n{n}", bad is None, bad)


def _suite_configs(report: VerificationReport, n_hi: int) -> None:
    for n in range(2, max(12, n_hi) + 1):
        bad = None
        for k in range(1, n):
            best, argmax = enumerate_configs(n, k)
            if best != max_dimension(n, k):
                bad = {"n": n, "k": k, "max": best}
                break
            shapes = [(c.l, c.parts) for c in argmax]
            if k >= 3 and shapes != [(1, (k - 1,))]:
                bad = {"n": n, "k": k, "argmax": [str(s) for s in shapes]}
                break
            if k == 2 and shapes != [(1, (1,)), (2, ())]:
                bad = {"n": n, "k": k, "argmax": [str(s) for s in shapes]}
                break
        report.add(f"config-bound-n{n}", bad is None, bad)


def _suite_char_poly_identity(
    report: VerificationReport, rng: Random, n_hi: int, draws: int
) -> None:
    for n in range(4, n_hi + 1):
        for k in range(3, n):
            bad = None
            for _ in range(draws):
                inst = _random_bordered_instance(rng, n, k)
                mu = random_rational(rng)
                closed = closed_form_char_poly(inst, mu)
                direct = char_poly(bordered_matrix(inst, mu)) * ((-1) ** n)
                if closed != direct:
                    bad = {"n": n, "k": k, "mu": format_rational(mu)}
                    break
            report.add(f"charpoly-closed-form-n{n}-k{k}", bad is None, bad)


def _suite_resultant_coeffs(report: VerificationReport, rng: Random, draws: int) -> None:
    for gap in (1, 2, 3, 4):
        bad = None
        for _ in range(draws):
            k = rng.choice((3, 4, 5))
            inst = _random_bordered_instance(rng, k + gap, k)
            rep = two_zeros_resultant_check(inst)
            if not rep.ok:
                bad = {
                    "gap": gap,
                    "k": k,
                    "mismatches": [c.name for c in rep.comparisons if not c.ok],
                }
                break
        report.add(f"resultant-coefficients-gap{gap}", bad is None, bad)


def _suite_discriminant_coeffs(report: VerificationReport, rng: Random, draws: int) -> None:
    for with_block in (True, False):
        bad = None
        for _ in range(draws):
            lams = distinct_nonzero_rationals(rng, 2)
            inst = DiscriminantInstance(
                lams[0], lams[1], random_rational(rng), random_rational(rng), with_block
            )
            rep = quartic_discriminant_check(inst)
            if not rep.ok:
                bad = {"instance": str(inst)}
                break
        label = "with-constant-block" if with_block else "adjacent-block"
        report.add(f"discriminant-coefficients-{label}", bad is None, bad)


def _suite_degeneration(
    report: VerificationReport, rng: Random, n_hi: int, conjugates: int, member_samples: int
) -> None:
    for n in range(4, n_hi + 1):
        bad = None
        for nn, k, p in _extremal_cells([n]):
            v = extremal_space(nn, k, p)
            w = corner_weights(nn)
            for _ in range(conjugates):
                u = random_invertible_upper(rng, nn)
                moved = conjugate(v, u)
                limit = grassmannian_limit(one_param_family(moved, w))
                if limit.dim != moved.dim:
                    bad = {"n": nn, "k": k, "p": p, "reason": "dimension"}
                    break
                if grassmannian_limit(one_param_family(limit, w)) != limit:
                    bad = {"n": nn, "k": k, "p": p, "reason": "stability"}
                    break
                dims = component_dims(weight_decomposition(limit, w))
                if not set(dims) <= {-nn, 0, nn}:
                    bad = {"n": nn, "k": k, "p": p, "reason": "support", "weights": sorted(dims)}
                    break
                if k >= 3:
                    prof = border_profile(limit, k)
                    if prof.row_primed_dim + prof.col_primed_dim > nn - k + 1:
                        bad = {"n": nn, "k": k, "p": p, "reason": "primed-border"}
                        break
                    if prof.row_dim + prof.col_dim > nn + k - 3:
                        bad = {"n": nn, "k": k, "p": p, "reason": "border"}
                        break
                for _ in range(member_samples):
                    m = random_member(limit, rng)
                    if count_distinct_eigenvalues(m) > k:
                        bad = {"n": nn, "k": k, "p": p, "reason": "budget", "member": matrix_to_obj(m)}
                        break
                if bad:
                    break
            if bad:
                break
        report.add(f"degeneration-n{n}", bad is None, bad)


def _suite_spectral_oracles(report: VerificationReport, rng: Random, n_hi: int, trials: int) -> None:
    bad = None
    for _ in range(trials):
        n = rng.randint(2, min(5, n_hi))
        m = random_matrix(rng, n, bound=10)
        if is_regular(m) != (minimal_polynomial_degree(m) == n):
            bad = matrix_to_obj(m)
            break
    report.add("regularity-vs-minimal-polynomial", bad is None, bad)
    bad = None
    for _ in range(trials):
        n = rng.randint(2, min(6, n_hi))
        m = random_matrix(rng, n, bound=10)
        if count_distinct_eigenvalues(m) != count_distinct_by_sylvester_rank(m):
            bad = matrix_to_obj(m)
            break
    report.add("distinct-count-routes-agree", bad is None, bad)


def _suite_maximality(report: VerificationReport, rng: Random, n_hi: int, trials: int) -> None:
    for n in range(4, n_hi + 1):
        inconclusive = None
        k = 3
        for p in range(0, n - k + 2):
            v = extremal_space(n, k, p)
            for i in range(n):
                for j in range(n):
                    unit = Matrix.unit(n, i, j)
                    if v.contains(unit):
                        continue
                    ok = False
                    for _ in range(trials):
                        m = random_member(v, rng) + unit.scale(random_rational(rng))
                        if count_distinct_eigenvalues(m) >= k + 1:
                            ok = True
                            break
                    if not ok:
                        inconclusive = {"n": n, "k": k, "p": p, "unit": [i, j], "trials": trials}
                        break
                if inconclusive:
                    break
            if inconclusive:
                break
        if inconclusive:
            report.checks.append(CheckResult(f"maximality-n{n}", INCONCLUSIVE, inconclusive))
        else:
            report.checks.append(CheckResult(f"maximality-n{n}", PASS))


def _suite_borel(report: VerificationReport, n_hi: int) -> None:
    for n in range(4, n_hi + 1):
        bad = None
        for nn, k, p in _extremal_cells([n]):
            v = extremal_space(nn, k, p)
            if not is_borel_invariant(v):
                bad = {"n": nn, "k": k, "p": p, "reason": "not-invariant"}
                break
            if check_unit_implications(v):
                bad = {"n": nn, "k": k, "p": p, "reason": "forced-unit-missing"}
                break
        report.add(f"borel-invariance-n{n}", bad is None, bad)


def run_full_suite(
    max_n: int,
    seed: int = 0,
    samples: int = 100,
    trials: int = 1000,
    conjugates: int = 10,
    identity_draws: int = 25,
    spectral_trials: int = 200,
    degeneration_members: int = 50,
) -> VerificationReport:
    """All verification sections, capped at max_n where a section scales.

    Sections run in a fixed order against one seeded generator, so a seed
    determines the report bytes completely.
    """
    if max_n < 4:
        raise BadBudgetError("the structure checks need max_n >= 4")
    started = time.monotonic()
    rng = Random(seed)
    report = VerificationReport(target=f"full-suite(max_n={max_n})", seed=seed)
    _suite_dimension(report, min(8, max_n))
    _suite_budget(report, rng, min(8, max_n), samples)
    _suite_configs(report, max_n)
    _suite_char_poly_identity(report, rng, min(7, max_n), identity_draws)
    _suite_resultant_coeffs(report, rng, identity_draws)
    _suite_discriminant_coeffs(report, rng, identity_draws)
    _suite_degeneration(report, rng, min(6, max_n), conjugates, degeneration_members)
    _suite_spectral_oracles(report, rng, max_n, spectral_trials)
    _suite_maximality(report, rng, min(6, max_n), trials)
    _suite_borel(report, min(8, max_n))
    report.elapsed = time.monotonic() - started
    return report
