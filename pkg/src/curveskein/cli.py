"""Batch front end: JSON job descriptions in, exact results out.

A job names a task, a curve germ (branches as Newton pairs with optional
rational coefficients, plus an axis flag), labels, and truncation orders.
Results are JSON with exact integer or rational-string entries only; a
process exit of 0 means every job passed, 1 means some identity check
failed, 2 means an input could not be used."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .annulus import el_basis
from .checks import (blowup_term_match, skein_flop_check, theorem1_check,
                     theorem2_low_check, vertex_flop_check)
from .curves import (annulus_element, branch, classify_germ, colored_W,
                     germ, homfly_P)
from .errors import CurveSkeinError
from .hilbert import z_curve

TASKS = ("homfly", "colored", "zcurve", "check-flop", "check-skein-flop",
         "check-blowup", "check-theorem1", "check-theorem2-low")

DEFAULT_ORDERS = {"q": 24, "Q": 4, "lam": 4, "N": 12}

_CHECKS = frozenset(t for t in TASKS if t.startswith("check-"))


class BadField(Exception):
    """Validation failure carrying the path of the offending field."""

    def __init__(self, path, message):
        super().__init__("%s: %s" % (path, message))
        self.path = path
        self.message = message


def _canon(x):
    if isinstance(x, dict):
        return {str(k): _canon(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_canon(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


def _expect(cond, path, message):
    if not cond:
        raise BadField(path, message)


def _int_list(x, path):
    _expect(isinstance(x, (list, tuple)), path, "expected a list")
    _expect(all(isinstance(v, int) and not isinstance(v, bool)
                for v in x), path, "expected integers")
    return list(x)


def _parse_rational(x, path):
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise BadField(path, "not a rational 'a/b' string") from None
    raise BadField(path, "expected an integer or an 'a/b' string")


def _parse_curve(req):
    obj = req.get("curve")
    _expect(isinstance(obj, dict), "curve", "expected an object")
    branches = obj.get("branches", [])
    _expect(isinstance(branches, list), "curve.branches", "expected a list")
    parsed = []
    for i, bj in enumerate(branches):
        path = "curve.branches[%d]" % i
        _expect(isinstance(bj, dict), path, "expected an object")
        pairs = bj.get("pairs", [])
        _expect(isinstance(pairs, list), path + ".pairs", "expected a list")
        pp = []
        for k, pair in enumerate(pairs):
            ppath = "%s.pairs[%d]" % (path, k)
            got = _int_list(pair, ppath)
            _expect(len(got) == 2, ppath, "expected a [p, q] pair")
            pp.append(tuple(got))
        coeffs = bj.get("coeffs")
        if coeffs is not None:
            _expect(isinstance(coeffs, list), path + ".coeffs",
                    "expected a list")
            coeffs = [_parse_rational(c, "%s.coeffs[%d]" % (path, k))
                      for k, c in enumerate(coeffs)]
        parsed.append((pp, coeffs))
    axis = obj.get("axis", False)
    _expect(isinstance(axis, bool), "curve.axis", "expected true or false")
    labels = req.get("labels")
    if labels is not None:
        _expect(isinstance(labels, list), "labels", "expected a list")
        labels = [tuple(_int_list(l, "labels[%d]" % i))
                  for i, l in enumerate(labels)]
    try:
        return germ([branch(pp, cc) for pp, cc in parsed],
                    labels=labels, axis=axis)
    except CurveSkeinError as e:
        raise BadField("curve", str(e)) from None


def _parse_orders(req, override=None):
    orders = dict(DEFAULT_ORDERS)
    for source, where in ((req.get("orders"), "orders"),
                          (override, "--orders")):
        if source is None:
            continue
        _expect(isinstance(source, dict), where, "expected an object")
        for k, v in source.items():
            _expect(k in DEFAULT_ORDERS, "%s.%s" % (where, k),
                    "unknown order (use q, Q, lam, N)")
            _expect(isinstance(v, int) and not isinstance(v, bool)
                    and v > 0, "%s.%s" % (where, k),
                    "expected a positive integer")
            orders[k] = v
    return orders


def _poly_json(x):
    return {"terms": [{"v": a, "s": b, "coeff": str(c)}
                      for (a, b), c in sorted(x.num.items())],
            "denominator": sorted(x.den)}


def run(request, orders_override=None):
    """Execute one job description; raises BadField on bad input."""
    _expect(isinstance(request, dict), "", "job must be an object")
    task = request.get("task")
    _expect(task in TASKS, "task", "expected one of %s" % (", ".join(TASKS)))
    orders = _parse_orders(request, orders_override)
    started = time.perf_counter()
    if task == "homfly":
        result = _poly_json(homfly_P(_parse_curve(request)))
    elif task == "colored":
        result = _poly_json(colored_W(_parse_curve(request)))
    elif task == "zcurve":
        kind = request.get("kind")
        if kind is None:
            kind = classify_germ(_parse_curve(request))
            _expect(kind is not None, "curve",
                    "germ is outside the enumerable kinds; pass an "
                    "explicit kind")
        elif isinstance(kind, list):
            kind = tuple(_int_list(kind, "kind"))
        elif not isinstance(kind, str):
            raise BadField("kind", "expected 'smooth', 'node' or [p, q]")
        coeffs = z_curve(kind, orders["N"])
        result = {"coefficients": [dict(_poly_json(coeffs[n]), n=n)
                                   for n in sorted(coeffs)]}
    elif task == "check-flop":
        mu = tuple(_int_list(request.get("mu", []), "mu"))
        result = vertex_flop_check(mu, orders["q"], orders["Q"],
                                   orders["lam"]).to_json()
    elif task == "check-skein-flop":
        if "curve" in request:
            x = annulus_element(_parse_curve(request))
        else:
            x = el_basis(tuple(_int_list(request.get("mu", []), "mu")))
        result = skein_flop_check(x, orders["q"], orders["Q"],
                                  orders["lam"]).to_json()
    elif task == "check-blowup":
        result = blowup_term_match(_parse_curve(request),
                                   orders["lam"]).to_json()
    elif task == "check-theorem1":
        result = theorem1_check(_parse_curve(request),
                                orders["N"]).to_json()
    else:
        mode = request.get("mode", "auto")
        _expect(mode in ("auto", "oracle", "self"), "mode",
                "expected auto, oracle or self")
        result = theorem2_low_check(_parse_curve(request), orders["N"],
                                    mode).to_json()
    seconds = time.perf_counter() - started
    status = result.get("status", "ok") if task in _CHECKS else "ok"
    return _canon({"task": task, "status": status, "result": result,
                   "seconds": round(seconds, 6)})


def _guarded(request, orders_override=None):
    try:
        return run(request, orders_override)
    except BadField as e:
        task = request.get("task") if isinstance(request, dict) else None
        return {"task": task, "status": "error",
                "error": {"field": e.path, "message": e.message}}
    except CurveSkeinError as e:
        task = request.get("task") if isinstance(request, dict) else None
        return {"task": task, "status": "error",
                "error": {"field": None, "message": str(e)}}


def batch(requests):
    """Run jobs in order, isolating failures; returns the summary."""
    results = [_guarded(r) for r in requests]
    tally = {"pass": 0, "ok": 0, "fail": 0, "error": 0}
    for r in results:
        tally[r["status"]] += 1
    return {"passed": tally["pass"] + tally["ok"], "failed": tally["fail"],
            "errors": tally["error"], "results": results}


def _exit_code(summary):
    if summary["errors"]:
        return 2
    return 1 if summary["failed"] else 0


def _load_json(path, what):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise BadField(what, str(e)) from None
    except ValueError as e:
        raise BadField(what, "not valid JSON: %s" % e) from None


def _orders_flag(text):
    out = {}
    for piece in filter(None, text.split(",")):
        key, _, value = piece.partition("=")
        if not value or not value.isdigit():
            raise BadField("--orders", "expected q=..,Q=..,lam=..,N=..")
        out[key] = int(value)
    return out


def _emit(payload, path):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="curveskein",
        description="Exact link invariants and ideal counts for plane "
                    "curve germs, with built-in identity checks.")
    parser.add_argument("--task", choices=TASKS,
                        help="overrides the task named in the input file")
    parser.add_argument("--input", metavar="FILE",
                        help="JSON file with a single job description")
    parser.add_argument("--orders", metavar="SPEC",
                        help="truncation orders, e.g. q=24,Q=4,lam=4,N=12")
    parser.add_argument("--output", metavar="FILE",
                        help="write the JSON result here instead of stdout")
    parser.add_argument("--suite", metavar="FILE",
                        help="JSON file with a list of jobs; prints the "
                             "summary and exits nonzero if any fail")
    args = parser.parse_args(argv)
    try:
        override = _orders_flag(args.orders) if args.orders else None
        if args.suite:
            jobs = _load_json(args.suite, "--suite")
            _expect(isinstance(jobs, list), "--suite",
                    "expected a list of jobs")
            if override:
                jobs = [dict(j, orders=dict(j.get("orders") or {},
                                            **override))
                        if isinstance(j, dict) else j for j in jobs]
            summary = batch(jobs)
            _emit(summary, args.output)
            return _exit_code(summary)
        if not args.input:
            parser.error("one of --input or --suite is required")
        job = _load_json(args.input, "--input")
        _expect(isinstance(job, dict), "--input", "expected a job object")
        if args.task:
            job = dict(job, task=args.task)
        result = _guarded(job, override)
        _emit(result, args.output)
        return {"error": 2, "fail": 1}.get(result["status"], 0)
    except BadField as e:
        _emit({"status": "error", "error": {"field": e.path,
                                            "message": e.message}},
              args.output)
        return 2


if __name__ == "__main__":
    sys.exit(main())
