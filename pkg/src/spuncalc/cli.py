"""Command-line front end.

Subcommands: lens, embed, certify-s4, surgery, pi1, corpus. Every command
prints a human-readable report (lens-space targets in W_{i,j} notation,
pages as Sigma_{0,n+1}) or, with --json, a schema-versioned report whose
serialization is byte-stable given --no-timestamp. Exit codes: 0 ok,
1 check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__, corpus, lens, pi1, spun, surgery
from .errors import SpuncalcError
from .fourman import FourManifoldForm
from .planar import PlanarPage, TwistWord, load_word, word_to_json, word_to_text

REPORT_SCHEMA = "spuncalc-report/1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def _report(command: str, inputs: dict, outputs: dict, checks: list[dict],
            timestamp: bool) -> dict:
    report = {
        "schema": REPORT_SCHEMA,
        "version": __version__,
        "command": command,
        "conventions": surgery.SIGN_CONVENTIONS,
        "inputs": inputs,
        "outputs": outputs,
        "checks": checks,
    }
    if timestamp:
        report["generated_at"] = datetime.now(timezone.utc).isoformat()
    return report


def _emit(report: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _form_name(form: FourManifoldForm) -> str:
    if form.s1_cross_sphere == 0:
        base = f"W_{{{form.trivial_bundle},{form.twisted_bundle}}}"
        return f"{base} = {form.describe()}"
    return form.describe()


def _page_name(page: PlanarPage) -> str:
    return f"Sigma_{{0,{page.inner_count + 1}}} (disk with {page.inner_count} holes)"


def _read_word(path: str, page: PlanarPage) -> TwistWord:
    return load_word(Path(path).read_text(), page)


def cmd_lens(args: argparse.Namespace) -> int:
    c = lens.cf_expand(args.p, args.q)
    sd = lens.slid_diagram(c)
    page, word = lens.lens_open_book(c)
    rec = lens.reconcile(c)
    target = lens.lens_embedding_target(args.p, args.q)
    plumb_det = lens.plumbing_matrix(c).det()
    slid_det = sd.linking_det()
    value = lens.cf_eval(c)
    checks = [
        {"name": "cf_eval equals -p/q",
         "passed": (value.numerator, value.denominator) == (-args.p, args.q)},
        {"name": "plumbing |det| equals p", "passed": abs(plumb_det) == args.p},
        {"name": "slid |det| equals p", "passed": abs(slid_det) == args.p},
        {"name": "word parity matches reduced parity", "passed": rec.agree,
         "detail": "reported, not asserted"},
    ]
    outputs = {
        "cf": list(c.coefficients),
        "plumbing_det": plumb_det,
        "slid_diagram": sd.to_json(),
        "slid_det": slid_det,
        "open_book_word": word_to_json(word),
        "reconciliation": rec.to_json(),
        "psi_parity": list(lens.psi_parity(c)),
        "target": target.to_json(),
        "spin": target.is_spin(),
    }
    lines = [
        f"L({args.p},{args.q}): expansion {list(c.coefficients)}",
        f"plumbing det = {plumb_det} (|det| = {abs(plumb_det)})",
        f"slid diagram: framings {list(sd.framings)}, links {list(sd.links)}, "
        f"twist regions {list(sd.twist_regions)}, det = {slid_det}",
        f"open book on {_page_name(page)}: {word_to_text(word) or '(empty)'}",
        f"word parity {list(rec.word_parity)} vs reduced parity {list(rec.psi)}"
        + ("" if rec.agree else "  [disagreement flagged]"),
        f"embedding target: {_form_name(target)}" + ("  [spin]" if target.is_spin() else ""),
    ]
    hard_checks = [c_ for c_ in checks if "detail" not in c_]
    failed = [c_ for c_ in hard_checks if not c_["passed"]]
    _emit(_report("lens", {"p": args.p, "q": args.q}, outputs, checks, not args.no_timestamp),
          lines, args.json)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    page = PlanarPage(args.page)
    word = _read_word(args.word, page)
    report = spun.embedding_target(page, word)
    checks = [{
        "name": "raw summand counts add up to the hole count",
        "passed": report.raw.summand_count() == page.inner_count,
    }]
    outputs = report.to_json()
    lines = [
        f"page: {_page_name(page)}",
        f"word: {word_to_text(word) or '(empty)'}",
        f"parity: {list(report.parity)}",
        f"raw target: {_form_name(report.raw)}",
    ]
    if not args.raw:
        lines.append(f"normalized: {_form_name(report.normalized)}")
    lines.append(f"spin: {'yes' if report.spin else 'no'}")
    failed = [c for c in checks if not c["passed"]]
    _emit(_report("embed", {"page": args.page, "word_file": args.word}, outputs, checks,
                  not args.no_timestamp), lines, args.json)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_certify_s4(args: argparse.Namespace) -> int:
    page = PlanarPage(args.page)
    word = _read_word(args.word, page)
    parities = spun.s4_parities(page, word)
    certified = all(b == 1 for b in parities)
    outputs = {
        "a_parities": list(parities),
        "certified": certified,
    }
    lines = [
        f"page: {_page_name(page)} with {page.inner_count // 2} boundary pairs",
        f"word: {word_to_text(word)}",
        f"a-boundary twist parities: {list(parities)}",
    ]
    if certified:
        outputs["target"] = spun.s4_target_name(page)
        lines.append(f"certified: yes -> {spun.s4_target_name(page)}")
    else:
        lines.append("certified: no (every a-boundary needs odd twist parity)")
    checks = [{"name": "sphere certificate", "passed": certified}]
    _emit(_report("certify-s4", {"page": args.page, "word_file": args.word}, outputs,
                  checks, not args.no_timestamp), lines, args.json)
    return EXIT_OK if certified else EXIT_CHECK_FAILED


def _apply_moves(d: surgery.FramedBraidDiagram, moves: list[dict]):
    log = []
    for move in moves:
        kind = move["move"]
        if kind == "blow_up":
            d, rec = surgery.blow_up(d, move["region"], move["sign"])
        elif kind == "blow_down":
            d, rec = surgery.blow_down(d, move["component"])
        elif kind == "rolfsen_twist":
            d, rec = surgery.rolfsen_twist(d, move["component"], move["twists"])
        else:
            raise SpuncalcError(f"unknown move kind: {kind!r}")
        log.append(rec)
    return d, log


def cmd_surgery(args: argparse.Namespace) -> int:
    d = surgery.parse_diagram(Path(args.diagram).read_text())
    moves = json.loads(Path(args.moves).read_text()) if args.moves else []
    final, log = _apply_moves(d, moves)
    page, word = surgery.to_planar_open_book(final)
    h1_start = surgery.h1_invariants(d)
    h1_final = surgery.h1_invariants(final)
    checks = [{"name": f"{rec.move} preserves H1", "passed": rec.h1_preserved}
              for rec in log]
    checks.append({"name": "H1 preserved end to end", "passed": h1_start == h1_final})
    outputs = {
        "initial": d.to_json(),
        "final": final.to_json(),
        "moves": [rec.to_json() for rec in log],
        "h1": h1_final.to_json(),
        "open_book": {
            "page": {"inner_count": page.inner_count},
            "word": word_to_json(word),
            "parity": list(word.parity_vector()),
        },
    }
    lines = [
        f"diagram: {d.strands} strands, framings {list(d.framings)}",
        f"H1 = {h1_start.describe()}",
    ]
    for rec in log:
        status = "ok" if rec.h1_preserved else "H1 CHANGED"
        lines.append(f"move {rec.move} [{rec.detail}]: "
                     f"{rec.h1_before.describe()} -> {rec.h1_after.describe()} ({status})")
    lines.append(f"final: {final.strands} strands, framings {list(final.framings)}")
    lines.append(f"open book on {_page_name(page)}: {word_to_text(word) or '(empty)'}")
    failed = [c for c in checks if not c["passed"]]
    _emit(_report("surgery", {"diagram_file": args.diagram, "moves_file": args.moves},
                  outputs, checks, not args.no_timestamp), lines, args.json)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_pi1(args: argparse.Namespace) -> int:
    g = pi1.parse_presentation(Path(args.presentation).read_text())
    page = pi1.page_for_presentation(g)
    recovered = pi1.pi1_of_open_book(page)
    ab = pi1.abelianization(recovered)
    roundtrip_ok = recovered.relators == tuple(pi1.free_reduce(r) for r in g.relators)
    checks = [{"name": "round trip returns the presentation", "passed": roundtrip_ok}]
    if args.fuzz:
        rng = random.Random(20240 + args.fuzz)
        fuzz_ok = all(_fuzz_roundtrip_once(rng) for _ in range(args.fuzz))
        checks.append({"name": f"round trip holds for {args.fuzz} random presentations",
                       "passed": fuzz_ok})
    outputs = {
        "presentation": g.to_json(),
        "page": page.to_json(),
        "recovered": recovered.to_json(),
        "abelianization": ab.to_json(),
    }
    lines = [
        f"presentation: {g.describe()}",
        f"page: {page.handle_count} circle handles, {page.sphere_count} pushed spheres",
        f"recovered fundamental group: {recovered.describe('a')}",
        f"abelianization: {ab.describe()}",
    ]
    for check in checks[1:]:
        lines.append(f"{check['name']}: {'pass' if check['passed'] else 'FAIL'}")
    failed = [c for c in checks if not c["passed"]]
    _emit(_report("pi1", {"presentation_file": args.presentation}, outputs, checks,
                  not args.no_timestamp), lines, args.json)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _fuzz_roundtrip_once(rng: random.Random) -> bool:
    g = rng.randint(0, 5)
    k = rng.randint(0, 5) if g else 0
    relators = []
    for _ in range(k):
        length = rng.randint(1, 12)
        word: list[int] = []
        while len(word) < length:
            x = rng.choice([s * i for i in range(1, g + 1) for s in (1, -1)])
            if word and word[-1] == -x:
                continue
            word.append(x)
        relators.append(tuple(word))
    pres = pi1.GroupPresentation(g, tuple(relators))
    return pi1.pi1_of_open_book(pi1.page_for_presentation(pres)) == pres


def cmd_corpus(args: argparse.Namespace) -> int:
    results = corpus.run_corpus()
    checks = [{"name": f"{r.file}: {r.name}", "passed": r.passed} for r in results]
    outputs = {
        "total": len(results),
        "passed": sum(r.passed for r in results),
        "results": [r.to_json() for r in results],
    }
    lines = [r.line() for r in results]
    lines.append(f"{outputs['passed']}/{outputs['total']} corpus cases passed")
    failed = [r for r in results if not r.passed]
    _emit(_report("corpus", {"action": "run"}, outputs, checks, not args.no_timestamp),
          lines, args.json)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spuncalc",
        description="Planar open books, surgery diagrams, and their embedding targets",
    )
    parser.add_argument("--version", action="version", version=f"spuncalc {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit the timestamp for byte-stable output")

    p = sub.add_parser("lens", help="lens space pipeline for L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    common(p)
    p.set_defaults(func=cmd_lens)

    p = sub.add_parser("embed", help="embedding target of a planar open book")
    p.add_argument("--page", type=int, required=True, help="number of inner boundaries")
    p.add_argument("--word", required=True, help="word file (text or JSON)")
    p.add_argument("--raw", action="store_true", help="report the raw form only")
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("certify-s4", help="sphere certificate for paired pages")
    p.add_argument("--page", type=int, required=True)
    p.add_argument("--word", required=True)
    common(p)
    p.set_defaults(func=cmd_certify_s4)

    p = sub.add_parser("surgery", help="diagram moves with a homology audit")
    p.add_argument("diagram", help="diagram file (text or JSON)")
    p.add_argument("--moves", help="JSON move list")
    common(p)
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("pi1", help="fundamental group of the push-page open book")
    p.add_argument("presentation", help="presentation file")
    p.add_argument("--fuzz", type=int, default=0,
                   help="also round-trip N random presentations")
    common(p)
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("corpus", help="replay the regression corpus")
    p.add_argument("action", choices=["run"])
    common(p)
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpuncalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
