"""Command-line interface.

Exit status is 0 on success, 1 when input data cannot be processed and 2
for usage errors (bad flags, missing files, out-of-range options).
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import sys
from importlib import resources
from pathlib import Path

from . import analysis
from .errors import PhonovecError
from .features import FeatureInventory
from .mapper import MappingTable
from .model import SoundVectors
from .sounds import SoundCatalog, name_of
from .wordlist import load_wordlist

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _data(name):
    return resources.files("phonovec") / "data" / name


def _existing(path):
    p = Path(path)
    if not p.is_file():
        raise argparse.ArgumentTypeError(f"no such file: {path}")
    return p


def _input_path(path):
    return path if path == "-" else _existing(path)


def _width(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("width must be >= 0")
    return value


def _config_parser():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("data files (default: bundled)")
    g.add_argument("--catalog", type=_existing, help="base sounds TSV (Grapheme, Class, Features)")
    g.add_argument("--diacritics", type=_existing, help="diacritics TSV (Mark, Value, Domain, Side)")
    g.add_argument("--values", type=_existing, help="feature value lexicon TSV (Class, Domain, Value)")
    g.add_argument("--rules", type=_existing, help="mapping rules TSV (Domain, Value, Assignments)")
    g.add_argument("--joint-rules", type=_existing, help="joint rules TSV (Values, Assignments)")
    g.add_argument("--hierarchy", type=_existing, help="domain hierarchy TSV (Domain, Kind)")
    g.add_argument("--inventory", type=_existing, help="feature inventory, one name per line")
    p.add_argument("-o", "--output", help="write results here instead of stdout")
    return p


def _sounds_parser(sample=True):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("sounds", nargs="*", help="IPA sound tokens")
    p.add_argument("--input", type=_input_path, help="file with one token per line ('-' for stdin)")
    if sample:
        p.add_argument("--sample", choices=("consonants", "vowels", "all"),
                       help="use the bundled 25-consonant / 20-vowel sample")
    return p


def build_parser():
    config = _config_parser()
    parser = argparse.ArgumentParser(
        prog="phonovec",
        description="Generate ternary phonological feature vectors from IPA transcriptions.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    sub.add_parser("features", parents=[config, _sounds_parser(sample=False)],
                   help="print the descriptive feature bundle of each sound")
    sub.add_parser("vectorize", parents=[config, _sounds_parser()],
                   help="write ternary feature vectors as CSV")
    sub.add_parser("similarity", parents=[config, _sounds_parser()],
                   help="write the pairwise cosine similarity matrix as CSV")
    sub.add_parser("eqclasses", parents=[config, _sounds_parser()],
                   help="group sounds that share one feature vector")

    p = sub.add_parser("distinctiveness", parents=[config],
                       help="confused sounds per language in a wordlist")
    p.add_argument("--wordlist", type=_existing, required=True)
    p.add_argument("--max-n", type=int, default=4, help="rows of the cumulative table (default 4)")

    p = sub.add_parser("concordance", parents=[config], help="keyword-in-context lines")
    p.add_argument("--wordlist", type=_existing, required=True)
    p.add_argument("--language", required=True)
    p.add_argument("--targets", required=True, help="comma-separated target tokens")
    p.add_argument("--width", type=_width, default=3, help="context tokens on each side")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("pca", parents=[config, _sounds_parser()],
                       help="project sounds onto principal components")
    p.add_argument("--k", type=int, default=2, help="number of components (default 2)")
    return parser


def load_model(args) -> SoundVectors:
    if not any((args.catalog, args.diacritics, args.values, args.rules, args.joint_rules,
                args.hierarchy, args.inventory)):
        return SoundVectors.default()
    catalog = SoundCatalog.from_files(
        args.catalog or _data("sounds.tsv"),
        args.diacritics or _data("diacritics.tsv"),
        args.values or _data("values.tsv"),
    )
    inventory = FeatureInventory.from_file(args.inventory) if args.inventory else None
    table = MappingTable.from_files(
        args.rules or _data("rules.tsv"),
        args.joint_rules or _data("joint_rules.tsv"),
        args.hierarchy or _data("hierarchy.tsv"),
        inventory=inventory,
    )
    return SoundVectors(catalog, table)


def sample_sounds(which="all"):
    with _data("sample_sounds.tsv").open(encoding="utf-8") as f:
        rows = list(csv.DictReader(f, delimiter="\t"))
    keep = {"all": ("consonant", "vowel"), "consonants": ("consonant",), "vowels": ("vowel",)}[which]
    return [r["Grapheme"] for r in rows if r["Class"] in keep]


def _collect_sounds(args):
    sounds = list(args.sounds)
    if args.input is not None:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
        sounds.extend(line.strip() for line in text.splitlines() if line.strip())
    if getattr(args, "sample", None):
        sounds.extend(sample_sounds(args.sample))
    if not sounds:
        raise UsageError("no sounds given (pass tokens, --input FILE or --sample)")
    return sounds


@contextlib.contextmanager
def _output(args):
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            yield fh
    else:
        yield sys.stdout


def _report_failures(failures):
    for token, message in failures.items():
        print(f"error: {token}: {message}", file=sys.stderr)


def _vectors_or_fail(sounds, model):
    failures = {}
    for tok in sounds:
        try:
            model.vector(tok)
        except PhonovecError as exc:
            failures[tok] = str(exc)
    return failures


def cmd_features(args, model):
    sounds = _collect_sounds(args)
    failures = {}
    with _output(args) as out:
        for tok in sounds:
            try:
                d = model.parse(tok)
            except PhonovecError as exc:
                failures[tok] = str(exc)
                continue
            bundle = " ".join(f"{f.domain}={f.value}" for f in d.features)
            out.write(f"{tok}\t{name_of(d)}\t{bundle}\n")
    _report_failures(failures)
    return EXIT_DATA if failures else EXIT_OK


def cmd_vectorize(args, model):
    sounds = _collect_sounds(args)
    tokens, vectors, failures = analysis.vectorize_tokens(sounds, model)
    with _output(args) as out:
        if vectors:
            analysis.write_vectors_csv(tokens, vectors, out)
    _report_failures(failures)
    return EXIT_DATA if failures else EXIT_OK


def cmd_similarity(args, model):
    sounds = _collect_sounds(args)
    failures = _vectors_or_fail(sounds, model)
    if failures:
        _report_failures(failures)
        return EXIT_DATA
    matrix = analysis.similarity_matrix(sounds, model)
    with _output(args) as out:
        matrix.write_csv(out)
    return EXIT_OK


def cmd_eqclasses(args, model):
    sounds = _collect_sounds(args)
    classes = analysis.equivalence_classes(sounds, model)
    with _output(args) as out:
        classes.write_csv(out)
    _report_failures(classes.failures)
    return EXIT_DATA if classes.failures else EXIT_OK


def cmd_distinctiveness(args, model):
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    wl = load_wordlist(args.wordlist)
    report = analysis.distinctiveness(wl, model)
    with _output(args) as out:
        report.write_csv(out, max_n=args.max_n)
    return EXIT_OK


def cmd_concordance(args, model):
    wl = load_wordlist(args.wordlist)
    targets = [t.strip() for t in args.targets.split(",") if t.strip()]
    if not targets:
        raise UsageError("--targets needs at least one token")
    lines = analysis.concordance(wl, args.language, targets, args.width)
    with _output(args) as out:
        if args.format == "csv":
            analysis.write_concordance_csv(lines, out)
        else:
            out.write(analysis.format_concordance(lines))
    return EXIT_OK


def cmd_pca(args, model):
    sounds = _collect_sounds(args)
    limit = min(len(sounds) - 1, len(model.inventory))
    if not 1 <= args.k <= limit:
        raise UsageError(f"--k must lie between 1 and {limit} for {len(sounds)} sounds, got {args.k}")
    failures = _vectors_or_fail(sounds, model)
    if failures:
        _report_failures(failures)
        return EXIT_DATA
    result = analysis.pca_project(sounds, args.k, model)
    with _output(args) as out:
        result.write_csv(out)
    ratios = ", ".join(f"PC{i}={r:.4f}" for i, r in enumerate(result.explained_variance_ratio(), 1))
    print(f"explained variance: {ratios}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "features": cmd_features,
    "vectorize": cmd_vectorize,
    "similarity": cmd_similarity,
    "eqclasses": cmd_eqclasses,
    "distinctiveness": cmd_distinctiveness,
    "concordance": cmd_concordance,
    "pca": cmd_pca,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    try:
        model = load_model(args)
        return COMMANDS[args.command](args, model)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"phonovec {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PhonovecError as exc:
        print(f"phonovec {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
