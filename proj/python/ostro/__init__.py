"""Certified enclosures and rule audits for double integrals."""

import json

from ._ostro import (
    OstroError,
    abs_moment,
    canonical,
    differentiate,
    evaluate,
    main,
    signed_moment,
    version,
)

__all__ = [
    "OstroError",
    "abs_moment",
    "canonical",
    "compare",
    "differentiate",
    "enclose",
    "evaluate",
    "identity",
    "main",
    "run",
    "signed_moment",
    "verify",
    "version",
]


def _nums(values):
    return [repr(float(v)) for v in values]


def run(args):
    """Run a subcommand and return its JSON document as a dict.

    Raises OstroError for usage and numerical errors.
    """
    code, out, err = main(list(args) + ["--json", "--no-timestamp"])
    if not out:
        exc = OstroError(err.strip())
        exc.code = "UsageError"
        exc.position = None
        raise exc
    doc = json.loads(out)
    if "error" in doc:
        exc = OstroError(doc["error"]["message"])
        exc.code = doc["error"]["code"]
        exc.position = doc["error"]["position"]
        raise exc
    doc["exit_code"] = code
    return doc


def _geometry(f, rect, point):
    args = ["--f", f, "--rect", *_nums(rect)]
    if point is not None:
        args += ["--point", *_nums(point)]
    return args


def _bounds(bounds):
    return ["--bounds", "auto"] if bounds is None else ["--bounds", *_nums(bounds)]


def enclose(f, rect, bounds=None, point=None, subdivide=(1, 1)):
    """Enclosure of the double integral of f over rect = (a, b, c, d).

    bounds is (gamma, Gamma) for the mixed partial; None estimates them.
    """
    args = ["enclose", *_geometry(f, rect, point), *_bounds(bounds)]
    args += ["--subdivide", str(int(subdivide[0])), str(int(subdivide[1]))]
    return run(args)


def identity(f, rect, point=None, tol=None):
    args = ["identity", *_geometry(f, rect, point)]
    if tol is not None:
        args += ["--tol", repr(float(tol))]
    return run(args)


def compare(f, rect, bounds=None, point=None, lam=0.0):
    return run(["compare", *_geometry(f, rect, point), *_bounds(bounds), "--lambda", repr(float(lam))])


def verify(trials=1000, seed=42, rules=None, lambdas=None, degree=6, threads=0):
    args = ["verify", "--trials", str(int(trials)), "--seed", str(int(seed)), "--degree", str(int(degree))]
    args += ["--threads", str(int(threads))]
    if rules:
        args += ["--rules", ",".join(rules)]
    if lambdas:
        args += ["--lambda", ",".join(repr(float(v)) for v in lambdas)]
    return run(args)
