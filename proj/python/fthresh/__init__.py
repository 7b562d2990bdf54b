"""Frobenius invariants of standard graded rings over prime fields.

Thin wrapper over the pybind11 core. Reports mirror the ``fthresh`` CLI's
JSON schema; rationals come back as {num, den, approx} dicts.
"""

import json

try:
    from . import _fthresh as _core
except ImportError:  # running against a build tree via PYTHONPATH
    import _fthresh as _core

FthreshError = _core.FthreshError
FthreshParseError = _core.FthreshParseError
FthreshBudgetError = _core.FthreshBudgetError
FthreshInvariantViolation = _core.FthreshInvariantViolation

is_f_pure = _core.is_f_pure
b_invariant = _core.b_invariant
nu_invariant = _core.nu_invariant
gorenstein_fpt = _core.gorenstein_fpt
a_invariants = _core.a_invariants
groebner_basis = _core.groebner_basis


def run(cmd, p, vars, gens, emax=2, seed=0, budget=10_000_000, with_gens=()):
    """Run one command (check/fpt/nu/ainv/betti/splitting/compatible/
    sequence/verify) and return the report as a dict."""
    return json.loads(
        _core.run_json(cmd, p, list(vars), list(gens), emax, seed, budget,
                       list(with_gens)))


def run_file(cmd, path, emax=2, seed=0, budget=10_000_000, with_gens=()):
    """Run one command on a ring definition file."""
    return json.loads(
        _core.run_file_json(cmd, path, emax, seed, budget, list(with_gens)))


def fpt(p, vars, gens, emax=2):
    """F-pure threshold data: lower bounds per level, upper bound from the
    a-invariants, and the exact value when the Fedder colon is principal."""
    return run("fpt", p, vars, gens, emax=emax)["fpt"]


def verify(p, vars, gens, emax=2):
    """Machine-verify the inequality suite on one ring; returns the list of
    checks with pass/fail flags."""
    return run("verify", p, vars, gens, emax=emax)["verification"]
