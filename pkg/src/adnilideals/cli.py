"""Command-line driver.

Subcommands: enumerate, minimal, classes, orbit, green, closure, verify.
All output is deterministic for a fixed invocation: randomness flows from
--seed only, and every collection is emitted in canonical order.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import affine, verify
from .equiv import (
    VerificationError,
    classes_refine_orbit_fibers,
    left_equivalence_classes,
    pl_closure,
)
from .ideals import (
    Ideal,
    enumerate_ideals,
    generators,
    ideal_from_generators,
    ideal_json,
    normalizer_simple_roots,
)
from .orbits import generic_jordan_type
from .rootsys import RootSystem, build_root_system
from .typea import format_partition, from_element, green_partition, window_json

# labels for the six positive roots of G2: a1 short simple, a6 long simple,
# a2..a5 the non-simple ones by height
_G2_LABELS = {
    (1, 0): "a1",
    (0, 1): "a6",
    (1, 1): "a2",
    (2, 1): "a3",
    (3, 1): "a4",
    (3, 2): "a5",
}


def _root_text(rs: RootSystem, root) -> str:
    if rs.family == "G":
        return _G2_LABELS[tuple(root)]
    return "(" + ",".join(str(c) for c in root) + ")"


def _root_set_text(rs: RootSystem, roots) -> str:
    if rs.family == "G":
        ordered = sorted(roots, key=lambda r: _G2_LABELS[tuple(r)])
    else:
        ordered = sorted(roots, key=rs.order_key)
    return "{" + ",".join(_root_text(rs, r) for r in ordered) + "}"


def _print(lines) -> None:
    for line in lines:
        print(line)


def _dump_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _ideal_entry(I: Ideal) -> dict:
    entry = ideal_json(I)
    entry["generators"] = [list(r) for r in generators(I)]
    entry["normalizer"] = [
        list(r) for r in sorted(normalizer_simple_roots(I), key=I.rs.order_key)
    ]
    return entry


def _cmd_enumerate(args) -> int:
    rs = build_root_system(args.system)
    ideals = enumerate_ideals(rs)
    if args.format == "json":
        _dump_json({"system": rs.code, "ideals": [_ideal_entry(I) for I in ideals]})
        return 0
    print(f"system {rs.code}: {len(ideals)} ideals")
    for k, I in enumerate(ideals):
        gens = _root_set_text(rs, generators(I))
        norm = _root_set_text(rs, normalizer_simple_roots(I))
        print(
            f"ideal {k:02d}: roots={_root_set_text(rs, I.roots)} "
            f"generators={gens} normalizer={norm}"
        )
    return 0


def _cmd_minimal(args) -> int:
    rs = build_root_system(args.system)
    ideals = enumerate_ideals(rs)
    if args.format == "json":
        out = []
        for I in ideals:
            w = affine.minimal_element(I)
            entry = ideal_json(I)
            entry["element"] = affine.element_json(w)
            entry["length"] = affine.length(w)
            entry["inversions"] = len(affine.inversion_set(w))
            out.append(entry)
        _dump_json({"system": rs.code, "minimal_elements": out})
        return 0
    print(f"system {rs.code}: {len(ideals)} ideals")
    for k, I in enumerate(ideals):
        w = affine.minimal_element(I)
        word = ",".join(str(i) for i in affine.word_of(w))
        print(
            f"ideal {k:02d}: roots={_root_set_text(rs, I.roots)} "
            f"word=[{word}] length={affine.length(w)} "
            f"inversions={len(affine.inversion_set(w))}"
        )
    return 0


def _cmd_classes(args) -> int:
    rs = build_root_system(args.system)
    if rs.family == "G":
        classes = left_equivalence_classes(rs)
        labels = None
    else:
        report = classes_refine_orbit_fibers(rs, seed=args.seed, trials=args.trials)
        classes = report.classes
        labels = report.class_types
    if args.format == "json":
        payload = {
            "system": rs.code,
            "classes": [[ideal_json(I) for I in block] for block in classes.blocks],
        }
        if labels is not None:
            payload["orbits"] = [format_partition(p) for p in labels]
        _dump_json(payload)
        return 0
    total = sum(len(b) for b in classes.blocks)
    print(f"system {rs.code}: {total} ideals, {len(classes.blocks)} classes")
    for k, block in enumerate(classes.blocks):
        members = " | ".join(_root_set_text(rs, I.roots) for I in block)
        label = f" orbit={format_partition(labels[k])}" if labels is not None else ""
        print(f"class {k + 1} (size {len(block)}):{label} {members}")
    return 0


def _parse_generators(rs: RootSystem, text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"--generators must be JSON: {exc}") from exc
    if not isinstance(data, list):
        raise ValueError("--generators must be a vector or list of vectors")
    if data and all(isinstance(c, int) for c in data):
        data = [data]
    return ideal_from_generators(rs, [tuple(v) for v in data])


def _cmd_orbit(args) -> int:
    rs = build_root_system(args.system)
    I = _parse_generators(rs, args.generators)
    part = generic_jordan_type(I, seed=args.seed, trials=args.trials)
    if args.format == "json":
        payload = ideal_json(I)
        payload["partition"] = list(part)
        _dump_json(payload)
        return 0
    print(format_partition(part))
    return 0


def _cmd_green(args) -> int:
    rs = build_root_system(args.system)
    if rs.family != "A":
        raise ValueError("green requires a type A system")
    word = json.loads(args.word)
    if not isinstance(word, list) or not all(isinstance(i, int) for i in word):
        raise ValueError("--word must be a JSON list of generator indices")
    w = affine.from_word(rs, word)
    p = from_element(w)
    part = green_partition(p)
    if args.format == "json":
        payload = window_json(p)
        payload["partition"] = list(part)
        _dump_json(payload)
        return 0
    print(format_partition(part))
    return 0


def _cmd_closure(args) -> int:
    rs = build_root_system(args.system)
    word = json.loads(args.word)
    w = affine.from_word(rs, word)
    members = sorted(pl_closure(w, length_budget=args.budget), key=affine.word_of)
    if args.format == "json":
        _dump_json(
            {
                "system": rs.code,
                "budget": args.budget,
                "elements": [affine.element_json(x) for x in members],
            }
        )
        return 0
    print(f"system {rs.code}: {len(members)} elements within length {args.budget}")
    for x in members:
        print("[" + ",".join(str(i) for i in affine.word_of(x)) + "]")
    return 0


_VERIFY_RUNNERS = {
    "5.2": (verify.star_witness_suite, verify.STAR_WITNESS_SYSTEMS),
    "5.6": (verify.star_class_suite, verify.STAR_CLASS_SYSTEMS),
    "diagram-1.4.1": (verify.signtype_suite, None),
    "diagram-1.5.1": (verify.green_jordan_suite, verify.GREEN_JORDAN_SYSTEMS),
    "surjectivity": (verify.surjectivity_suite, None),
    "bijection": (verify.bijection_suite, verify.BIJECTION_SYSTEMS),
}


def _cmd_verify(args) -> int:
    runner, default_codes = _VERIFY_RUNNERS[args.check]
    try:
        if args.check == "surjectivity":
            lines = runner(seed=args.seed, trials=args.trials)
        elif args.check == "diagram-1.5.1":
            codes = tuple(args.systems) or default_codes
            lines = runner(codes, seed=args.seed, trials=args.trials)
        elif args.check == "diagram-1.4.1":
            if args.systems:
                lines = runner(
                    element_codes=tuple(args.systems), ideal_codes=tuple(args.systems)
                )
            else:
                lines = runner()
        else:
            codes = tuple(args.systems) or default_codes
            lines = runner(codes)
    except VerificationError as exc:
        print(f"FAIL {args.check}")
        print(str(exc))
        return 1
    print(f"check {args.check}")
    _print(lines)
    print("PASS")
    return 0


def _add_common(p, seed=False, fmt=True):
    if fmt:
        p.add_argument("--format", choices=("text", "json"), default="text")
    if seed:
        p.add_argument("--seed", type=int, default=0, help="oracle seed")
        p.add_argument("--trials", type=int, default=5, help="oracle trials")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adnilideals",
        description=(
            "Ideals of positive root systems, their affine Weyl group "
            "elements, equivalence classes, sign types and orbit labels."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list ideals with generators and normalizers")
    p.add_argument("system")
    _add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("minimal", help="minimal affine element per ideal")
    p.add_argument("system")
    _add_common(p)
    p.set_defaults(func=_cmd_minimal)

    p = sub.add_parser("classes", help="left-equivalence classes of ideals")
    p.add_argument("system")
    _add_common(p, seed=True)
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("orbit", help="generic Jordan type of an ideal")
    p.add_argument("system")
    p.add_argument("--generators", required=True, help="JSON list of root vectors")
    _add_common(p, seed=True)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("green", help="chain-order partition of a type A element")
    p.add_argument("system")
    p.add_argument("--word", required=True, help="JSON list of generator indices")
    _add_common(p)
    p.set_defaults(func=_cmd_green)

    p = sub.add_parser("closure", help="star-operation closure of an element")
    p.add_argument("system")
    p.add_argument("--word", required=True, help="JSON list of generator indices")
    p.add_argument("--budget", type=int, default=12, help="length budget")
    _add_common(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("verify", help="run a named exhaustive check suite")
    p.add_argument("check", choices=sorted(_VERIFY_RUNNERS))
    p.add_argument("systems", nargs="*", help="optional system codes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print("FAIL")
        print(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
