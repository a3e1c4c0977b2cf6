"""Command-line front end: evaluation, pair checks, randomized sweeps,
adversarial tightness runs, and the worked demos.

Exit codes: 0 when everything checked is satisfied or not evaluated, 2 when
any applicable bound is violated, 1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, fields

import numpy as np

from . import bounds, sampling
from .classical import (
    JointDistribution,
    ProbVector,
    instability_example,
    max_partial_bounds,
    partial_distance,
    partial_sum,
)
from .quantum import (
    DensityOperator,
    PureEnsemble,
    RankOnePOVM,
    density_from_ensemble,
    eigenvalues_descending,
    ky_fan_distance,
    partial_fidelity,
    partial_trace,
    povm_joint_probs,
    product_monotonicity_preconditions,
    quantum_partial_sum,
    schmidt_pure_state,
)
from .serialize import fmt_cell, load_instance

CSV_HEADER = "experiment,alpha,k,dim,epsilon,lhs,rhs,applicable,satisfied,margin,seed"


@dataclass
class ReportRow:
    """One output row; the schema is fixed across all subcommands."""

    experiment: str
    alpha: float | None
    k: int | None
    dim: int | None
    epsilon: float | None
    lhs: float | None
    rhs: float | None
    applicable: bool | None
    satisfied: bool | None
    margin: float | None
    seed: int

    def to_csv(self) -> str:
        return ",".join(fmt_cell(getattr(self, f.name)) for f in fields(self))

    def to_json(self) -> str:
        payload = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, (np.floating, np.integer)):
                v = v.item()
            payload[f.name] = v
        return json.dumps(payload)


@dataclass
class RunConfig:
    """Configuration of one randomized sweep."""

    seed: int
    trials: int
    alpha_grid: list[float]
    k_policy: str | list[int] = "all"
    dims: list[int] = field(default_factory=lambda: [4])
    tolerance: float | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.alpha_grid or any(a <= 0 for a in self.alpha_grid):
            raise ValueError("every alpha in the grid must be positive")


def _k_range(policy, top: int) -> list[int]:
    if policy in (None, "all"):
        return list(range(1, top + 1))
    return [k for k in policy if 1 <= k <= top]


def _row_from_check(experiment: str, alpha: float, k: int, dim: int,
                    chk: bounds.InequalityCheck, seed: int) -> ReportRow:
    return ReportRow(experiment=experiment, alpha=alpha, k=k, dim=dim,
                     epsilon=chk.epsilon, lhs=chk.lhs, rhs=chk.bound.rhs,
                     applicable=chk.bound.applicable, satisfied=chk.satisfied,
                     margin=chk.margin, seed=seed)


def run_sweep(config: RunConfig) -> list[ReportRow]:
    """Randomized near-pair verification of the continuity bounds.

    Each trial draws, per dimension, one base instance and a perturbed partner
    at a log-uniform target distance, then checks every (alpha, k) cell.
    Draw order is fixed, so equal configs give identical output.
    """
    rng = np.random.default_rng(config.seed)
    rows: list[ReportRow] = []
    for _ in range(config.trials):
        for m in config.dims:
            p = sampling.sample_simplex(m, rng)
            q = sampling.sample_near(p, 10.0 ** rng.uniform(-3.0, 0.0), rng)
            for alpha in config.alpha_grid:
                for k in _k_range(config.k_policy, m):
                    chk = bounds.check_classical(p, q, k, alpha, tol=config.tolerance)
                    rows.append(_row_from_check("sweep_classical", alpha, k, m, chk, config.seed))
        for d in config.dims:
            rho = sampling.sample_density(d, rng)
            sigma = sampling.sample_near(rho, 10.0 ** rng.uniform(-3.0, 0.0), rng)
            for alpha in config.alpha_grid:
                for k in _k_range(config.k_policy, d):
                    chk = bounds.check_quantum(rho, sigma, k, alpha, tol=config.tolerance)
                    rows.append(_row_from_check("sweep_quantum", alpha, k, d, chk, config.seed))
    return rows


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------


def _cmd_eval(args) -> list[ReportRow]:
    if len(args.inputs) > 2:
        raise ValueError("eval takes one or two input files")
    objs = [load_instance(p) for p in args.inputs]
    alphas = args.alpha or [1.0]
    seed = args.seed
    rows: list[ReportRow] = []

    def sum_rows(experiment, dim, value_fn):
        for alpha in alphas:
            for k in _k_range(args.k, dim):
                rows.append(ReportRow(experiment, alpha, k, dim, None,
                                      value_fn(k, alpha), None, None, None, None, seed))

    if len(objs) == 1:
        obj = objs[0]
        if isinstance(obj, ProbVector):
            sum_rows("eval_classical_partial_sum", obj.dim,
                     lambda k, a: partial_sum(obj, k, a))
        elif isinstance(obj, DensityOperator):
            sum_rows("eval_quantum_partial_sum", obj.dim,
                     lambda k, a: quantum_partial_sum(obj, k, a))
        elif isinstance(obj, JointDistribution):
            flat = obj.flattened()
            sum_rows("eval_joint_partial_sum", flat.dim,
                     lambda k, a: partial_sum(flat, k, a))
        elif isinstance(obj, PureEnsemble):
            rho = density_from_ensemble(obj)
            sum_rows("eval_quantum_partial_sum", rho.dim,
                     lambda k, a: quantum_partial_sum(rho, k, a))
        else:
            raise ValueError("a POVM cannot be evaluated by itself; pair it with an ensemble")
        return rows

    first, second = objs
    if isinstance(first, ProbVector) and isinstance(second, ProbVector):
        if first.dim != second.dim:
            raise ValueError("the two distributions must have equal length")
        sum_rows("eval_classical_partial_sum_a", first.dim,
                 lambda k, a: partial_sum(first, k, a))
        sum_rows("eval_classical_partial_sum_b", second.dim,
                 lambda k, a: partial_sum(second, k, a))
        for k in _k_range(args.k, first.dim):
            rows.append(ReportRow("eval_partial_distance", None, k, first.dim,
                                  partial_distance(first, second, k),
                                  None, None, None, None, None, seed))
        return rows
    if isinstance(first, DensityOperator) and isinstance(second, DensityOperator):
        if first.dim != second.dim:
            raise ValueError("the two density operators must have equal dimension")
        sum_rows("eval_quantum_partial_sum_a", first.dim,
                 lambda k, a: quantum_partial_sum(first, k, a))
        sum_rows("eval_quantum_partial_sum_b", second.dim,
                 lambda k, a: quantum_partial_sum(second, k, a))
        for k in _k_range(args.k, first.dim):
            rows.append(ReportRow("eval_kyfan_distance", None, k, first.dim,
                                  ky_fan_distance(first, second, k),
                                  None, None, None, None, None, seed))
        for k in range(0, first.dim + 1):
            rows.append(ReportRow("eval_partial_fidelity", None, k, first.dim, None,
                                  partial_fidelity(first, second, k),
                                  None, None, None, None, seed))
        return rows
    ens_povm = {type(first), type(second)} == {PureEnsemble, RankOnePOVM}
    if ens_povm:
        ens = first if isinstance(first, PureEnsemble) else second
        povm = first if isinstance(first, RankOnePOVM) else second
        rho = density_from_ensemble(ens)
        joint = povm_joint_probs(ens, povm).flattened()
        n_out = povm.n_outcomes
        for alpha in alphas:
            for k in _k_range(args.k, rho.dim):
                lhs = quantum_partial_sum(rho, k, alpha)
                rhs = partial_sum(joint, min(k * n_out, joint.dim), alpha)
                rows.append(ReportRow("eval_povm_refinement", alpha, k, rho.dim, None,
                                      lhs, rhs, None, None, rhs - lhs, seed))
        return rows
    raise ValueError("eval supports a single instance, a pair of like instances, "
                     "or an ensemble together with a POVM")


def _cmd_check(args) -> list[ReportRow]:
    first, second = (load_instance(p) for p in args.inputs)
    alphas = args.alpha or [1.0]
    rows: list[ReportRow] = []
    if isinstance(first, ProbVector) and isinstance(second, ProbVector):
        for alpha in alphas:
            for k in _k_range(args.k, min(first.dim, second.dim)):
                chk = bounds.check_classical(first, second, k, alpha)
                rows.append(_row_from_check("check_classical", alpha, k, first.dim, chk, args.seed))
        return rows
    if isinstance(first, DensityOperator) and isinstance(second, DensityOperator):
        for alpha in alphas:
            for k in _k_range(args.k, min(first.dim, second.dim)):
                chk = bounds.check_quantum(first, second, k, alpha)
                rows.append(_row_from_check("check_quantum", alpha, k, first.dim, chk, args.seed))
                chk_f = bounds.check_fidelity_variant(first, second, k, alpha)
                rows.append(_row_from_check("check_fidelity", alpha, k, first.dim, chk_f, args.seed))
        return rows
    raise ValueError("check needs two distributions or two density operators")


def _cmd_sweep(args) -> list[ReportRow]:
    config = RunConfig(seed=args.seed, trials=args.trials, alpha_grid=args.alpha or [1.0],
                       k_policy=args.k if args.k is not None else "all",
                       dims=args.dims or [4])
    return run_sweep(config)


def _cmd_adversarial(args) -> list[ReportRow]:
    rows: list[ReportRow] = []
    ks = args.k if isinstance(args.k, list) else [1, 2]
    for alpha in args.alpha or [1.0]:
        for k in ks:
            for eps in args.eps or [0.1]:
                bound = bounds.fannes_bound(eps, k, alpha)
                if not bound.applicable:
                    rows.append(ReportRow("adversarial", alpha, k, k, eps, None, bound.rhs,
                                          False, None, None, args.seed))
                    continue
                try:
                    res = bounds.adversarial_search(k, alpha, eps, restarts=args.restarts,
                                                    seed=args.seed)
                    rows.append(ReportRow("adversarial", alpha, k, k, eps, res.achieved,
                                          res.bound_rhs, True, True,
                                          res.bound_rhs - res.achieved, args.seed))
                except bounds.BoundViolationError as exc:
                    res = exc.witness
                    print(f"bound violation: {exc}", file=sys.stderr)
                    rows.append(ReportRow("adversarial", alpha, k, k, eps, res.achieved,
                                          res.bound_rhs, True, False,
                                          res.bound_rhs - res.achieved, args.seed))
    return rows


def _cmd_demo_instability(args) -> list[ReportRow]:
    rows = []
    for eps in args.eps or [1e-4]:
        d1, d2, ratio = instability_example(eps)
        rows.append(ReportRow("demo_instability", 1.0, 1, 2, eps, d1, d2,
                              None, None, ratio * eps, args.seed))
    return rows


def _cmd_demo_bell(args) -> list[ReportRow]:
    rows = []
    tol = bounds.check_tolerance()
    for theta in args.theta or [np.pi / 6, np.pi / 4]:
        joint = schmidt_pure_state(theta)
        rho_a = partial_trace(joint, (2, 2), keep="A")
        commuting, distinct = product_monotonicity_preconditions(joint, (2, 2))
        eig = eigenvalues_descending(rho_a).values
        print(f"theta={theta:.6g}: reduced eigenvalues ({eig[0]:.6g}, {eig[1]:.6g}), "
              f"commuting={commuting}, products_distinct={distinct}", file=sys.stderr)
        applicable = commuting and distinct
        experiment = f"demo_bell:theta={theta:.6g}"
        for alpha in args.alpha or [1.0]:
            for k in _k_range(args.k, 2):
                lhs = quantum_partial_sum(rho_a, k, alpha)
                rhs = quantum_partial_sum(joint, 2 * k, alpha)
                satisfied = bool(lhs <= rhs + tol) if applicable else None
                rows.append(ReportRow(experiment, alpha, k, 4, None, lhs, rhs,
                                      applicable, satisfied, rhs - lhs, args.seed))
    return rows


def _cmd_demo_maxbounds(args) -> list[ReportRow]:
    rows = []
    tol = bounds.check_tolerance()
    for m in args.dims or [6]:
        for alpha in args.alpha or [1.0]:
            for k in _k_range(args.k, m):
                lower, upper, _cap = max_partial_bounds(k, alpha)
                found, _vec = sampling.maximize_partial_sum(m, k, alpha,
                                                            restarts=args.restarts,
                                                            seed=args.seed)
                satisfied = bool(lower - 1e-6 <= found <= upper + tol)
                rows.append(ReportRow("demo_maxbounds", alpha, k, m, lower, found, upper,
                                      True, satisfied, upper - found, args.seed))
    return rows


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok]


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok]


def _k_policy(text: str):
    if text == "all":
        return "all"
    return _int_list(text)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="entropic-sums",
                     description="Partial entropic sums, continuity bounds, and demos")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate sums/distances/fidelities from files")
    p_eval.add_argument("inputs", nargs="+", help="one or two JSON instance files")
    p_eval.add_argument("--alpha", type=_float_list, default=None)
    p_eval.add_argument("--k", type=_k_policy, default="all")
    p_eval.set_defaults(func=_cmd_eval)

    p_check = sub.add_parser("check", parents=[common], help="run bound checks on a pair of files")
    p_check.add_argument("inputs", nargs=2, help="two JSON instance files of the same kind")
    p_check.add_argument("--alpha", type=_float_list, default=None)
    p_check.add_argument("--k", type=_k_policy, default="all")
    p_check.set_defaults(func=_cmd_check)

    p_sweep = sub.add_parser("sweep", parents=[common], help="randomized bound verification")
    p_sweep.add_argument("--alpha", type=_float_list, default=None)
    p_sweep.add_argument("--k", type=_k_policy, default="all")
    p_sweep.add_argument("--dims", type=_int_list, default=None)
    p_sweep.add_argument("--trials", type=int, default=100)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_adv = sub.add_parser("adversarial", parents=[common], help="tightness search grid")
    p_adv.add_argument("--alpha", type=_float_list, default=None)
    p_adv.add_argument("--k", type=_int_list, default=None)
    p_adv.add_argument("--eps", type=_float_list, default=None)
    p_adv.add_argument("--restarts", type=int, default=100)
    p_adv.set_defaults(func=_cmd_adversarial)

    p_demo = sub.add_parser("demo", help="worked examples")
    demo_sub = p_demo.add_subparsers(dest="demo_command", parser_class=_Parser)

    p_inst = demo_sub.add_parser("instability", parents=[common])
    p_inst.add_argument("--eps", type=_float_list, default=None)
    p_inst.set_defaults(func=_cmd_demo_instability)

    p_bell = demo_sub.add_parser("bell", parents=[common])
    p_bell.add_argument("--theta", type=_float_list, default=None)
    p_bell.add_argument("--alpha", type=_float_list, default=None)
    p_bell.add_argument("--k", type=_k_policy, default="all")
    p_bell.set_defaults(func=_cmd_demo_bell)

    p_max = demo_sub.add_parser("maxbounds", parents=[common])
    p_max.add_argument("--alpha", type=_float_list, default=None)
    p_max.add_argument("--k", type=_k_policy, default="all")
    p_max.add_argument("--dims", type=_int_list, default=None)
    p_max.add_argument("--restarts", type=int, default=100)
    p_max.set_defaults(func=_cmd_demo_maxbounds)

    return parser


def _write_rows(rows: list[ReportRow], fmt: str, out: str | None) -> None:
    if fmt == "json":
        text = "".join(row.to_json() + "\n" for row in rows)
    else:
        text = CSV_HEADER + "\n" + "".join(row.to_csv() + "\n" for row in rows)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help lands here
        return 0 if exc.code in (0, None) else 1
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        rows = args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except bounds.BoundViolationError as exc:
        print(f"bound violation: {exc}", file=sys.stderr)
        return 2
    _write_rows(rows, args.format, args.out)
    violated = any(r.applicable is True and r.satisfied is False for r in rows)
    return 2 if violated else 0


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
