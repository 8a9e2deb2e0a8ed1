"""File formats and the command-line driver.

Polyhedron files follow the cdd text layout: a kind line
("V-representation" or "H-representation"), "begin", a size line
"n m+1 rational|integer", n rows of m+1 exact numbers, "end".  V rows
start with a homogenization marker (1 = point, 0 = ray); H rows are
"b a1 .. ad" for the inequality b + a.x >= 0.  Lines starting with "#"
or "*" are comments; every rendered file begins with the version line
"# symcone-format 1".  After "end" a document may carry two optional
sections, each closed by its own "end": "group" (one permutation per
line, disjoint cycles over 1..n) and "options" (one "key value" pair
per line, consulted as flag defaults).

Group files hold one permutation per line in the same notation; an
empty file is the trivial group.  Perturbation spec files hold the
subgroup generators plus optional "signs push pull .." (one word per
orbit) and "order 2 1 .." (1-based orbit labels, largest epsilon
first) lines.

The driver converts V to H (facet enumeration) and H to V (extreme
rays and vertices, by polarity) up to symmetry.  Output rows are orbit
representatives; orbit sizes, stabilizer orders and the total count
are written to a plain-text sidecar report so the main file stays
tool-compatible.  Totals come from the orbit-stabilizer theorem, never
from expansion.
"""

import argparse
import os
import pickle
import sys
from dataclasses import dataclass
from fractions import Fraction

from .conemodel import (
    DegenerateConeError,
    dual_description_dd,
    facet_from_support,
    is_pointed,
    lift_normal,
    make_cone,
    reduce_to_pointed_fulldim,
)
from .decomp import (
    Bank,
    ConversionTask,
    RecursionPolicy,
    convert,
    verify_group_action,
)
from .exactlin import dot, integer_primitive, rank
from .orbits import fuse, split
from .permgrp import PermGroup, format_cycles, parse_permutation
from .pivotsym import explore_basis_graph, make_perturbation_spec
from .symdetect import restricted_automorphism_group

FORMAT_HEADER = "# symcone-format 1"
FORMAT_VERSION = 1

METHODS = ("incidence", "adjacency", "cascade", "pivot", "direct")


class ParseError(ValueError):
    """A file failed to parse; the message names the offending line."""


class CliError(Exception):
    """A driver-level failure with a user-facing diagnostic."""


# ---------------------------------------------------------------------------
# Documents.


@dataclass(frozen=True)
class InputDocument:
    """One polyhedron file: rows in file layout plus optional sections.

    ``rows`` keep the file's column order (marker or b first), ``group``
    is a tuple of permutations or None, ``options`` a tuple of
    (key, value) string pairs or None.
    """

    kind: str       # "V" or "H"
    numtype: str    # "rational" or "integer"
    rows: tuple
    group: object = None
    options: object = None


class _Cursor:
    """Comment-skipping line reader that tracks 1-based line numbers."""

    def __init__(self, text):
        self.lines = text.splitlines()
        self.at = 0

    def take(self):
        while self.at < len(self.lines):
            self.at += 1
            raw = self.lines[self.at - 1].strip()
            if not raw:
                continue
            if raw.startswith("#") or raw.startswith("*"):
                _check_version(raw, self.at)
                continue
            return self.at, raw
        return None

    def need(self, what):
        got = self.take()
        if got is None:
            raise ParseError("line %d: malformed header: missing %s"
                             % (len(self.lines) + 1, what))
        return got

    def until_end(self, section):
        while True:
            got = self.take()
            if got is None:
                raise ParseError("line %d: unterminated %s section"
                                 % (len(self.lines) + 1, section))
            if got[1] == "end":
                return
            yield got


def _check_version(comment, lineno):
    body = comment.lstrip("#*").strip()
    if body.startswith("symcone-format"):
        tail = body[len("symcone-format"):].strip()
        if tail != str(FORMAT_VERSION):
            raise ParseError("line %d: unsupported format version %r"
                             % (lineno, tail))


def _number(tok, numtype, lineno):
    try:
        v = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError("line %d: not a number: %r" % (lineno, tok)) from None
    if numtype == "integer" and v.denominator != 1:
        raise ParseError("line %d: fractional value %r in an integer file"
                         % (lineno, tok))
    return v


def _perm(line, degree, lineno):
    try:
        return parse_permutation(line, degree)
    except ValueError as e:
        raise ParseError("line %d: %s" % (lineno, e)) from None


def parse_document(text):
    """InputDocument from file text; inverse of render_document."""
    cur = _Cursor(text)
    lineno, line = cur.need("the representation kind")
    if line not in ("V-representation", "H-representation"):
        raise ParseError("line %d: malformed header: expected "
                         "V-representation or H-representation, found %r"
                         % (lineno, line))
    kind = line[0]
    lineno, line = cur.need("'begin'")
    if line != "begin":
        raise ParseError("line %d: malformed header: expected 'begin', "
                         "found %r" % (lineno, line))
    lineno, line = cur.need("the size line")
    parts = line.split()
    try:
        n, width = int(parts[0]), int(parts[1])
        numtype = parts[2]
        ok = len(parts) == 3 and n >= 1 and width >= 2
    except (ValueError, IndexError):
        ok = False
    if not ok:
        raise ParseError("line %d: malformed header: expected "
                         "'rows columns numbertype', found %r"
                         % (lineno, line))
    if numtype not in ("rational", "integer"):
        raise ParseError("line %d: malformed header: number type must be "
                         "rational or integer, not %r" % (lineno, numtype))
    rows = []
    for r in range(n):
        lineno, line = cur.need("row %d of %d" % (r + 1, n))
        if line == "end":
            raise ParseError("line %d: expected %d rows before 'end', "
                             "found %d" % (lineno, n, r))
        toks = line.split()
        if len(toks) != width:
            raise ParseError("line %d: expected %d fields, found %d"
                             % (lineno, width, len(toks)))
        vals = tuple(_number(t, numtype, lineno) for t in toks)
        if not any(vals):
            raise ParseError("line %d: zero row" % lineno)
        if kind == "V" and vals[0] not in (0, 1):
            raise ParseError("line %d: leading marker must be 0 or 1, "
                             "not %s" % (lineno, vals[0]))
        rows.append(vals)
    lineno, line = cur.need("'end'")
    if line != "end":
        raise ParseError("line %d: expected 'end', found %r" % (lineno, line))
    group = None
    options = None
    while True:
        got = cur.take()
        if got is None:
            break
        lineno, line = got
        if line == "group":
            group = tuple(_perm(l2, n, no2)
                          for no2, l2 in cur.until_end("group"))
        elif line == "options":
            opts = []
            for _, l2 in cur.until_end("options"):
                key, _, val = l2.partition(" ")
                opts.append((key, val.strip()))
            options = tuple(opts)
        else:
            raise ParseError("line %d: unexpected content after 'end': %r"
                             % (lineno, line))
    return InputDocument(kind, numtype, tuple(rows), group, options)


def render_document(doc):
    """File text for a document; inverse of parse_document."""
    out = [FORMAT_HEADER,
           "%s-representation" % doc.kind,
           "begin",
           "%d %d %s" % (len(doc.rows), len(doc.rows[0]), doc.numtype)]
    out += [" ".join(str(x) for x in row) for row in doc.rows]
    out.append("end")
    if doc.group is not None:
        out.append("group")
        out += [format_cycles(p) for p in doc.group]
        out.append("end")
    if doc.options is not None:
        out.append("options")
        out += [("%s %s" % kv).rstrip() for kv in doc.options]
        out.append("end")
    return "\n".join(out) + "\n"


def parse_polyhedron_file(text):
    """(points, rays) of a V file, or [(b, coefficients)] of an H file."""
    doc = parse_document(text)
    if doc.kind == "V":
        points = [r[1:] for r in doc.rows if r[0] == 1]
        rays = [r[1:] for r in doc.rows if r[0] == 0]
        return points, rays
    return [(r[0], r[1:]) for r in doc.rows]


def parse_group_file(text, degree):
    """PermGroup from one permutation per line; empty file is trivial."""
    gens = [_perm(line, degree, lineno)
            for lineno, line in _content_lines(text)]
    return PermGroup(degree, gens)


def parse_perturbation_file(text, degree):
    """PerturbationSpec from generator lines plus signs/order directives."""
    gens = []
    signs = None
    order = None
    for lineno, line in _content_lines(text):
        if line.startswith("(") or line in ("id", "()"):
            gens.append(_perm(line, degree, lineno))
            continue
        head, _, rest = line.partition(" ")
        if head == "signs":
            words = rest.split()
            if not words or any(w not in ("push", "pull") for w in words):
                raise ParseError("line %d: signs must be a list of "
                                 "push/pull words" % lineno)
            signs = tuple(1 if w == "push" else -1 for w in words)
        elif head == "order":
            try:
                order = tuple(int(w) - 1 for w in rest.split())
            except ValueError:
                raise ParseError("line %d: order must list 1-based orbit "
                                 "labels" % lineno) from None
        else:
            raise ParseError("line %d: expected a permutation, 'signs', or "
                             "'order', found %r" % (lineno, line))
    try:
        return make_perturbation_spec(PermGroup(degree, gens),
                                      signs=signs, order=order)
    except ValueError as e:
        raise CliError("bad perturbation spec: %s" % e) from None


def _content_lines(text):
    cur = _Cursor(text)
    while True:
        got = cur.take()
        if got is None:
            return
        yield got


# ---------------------------------------------------------------------------
# Geometry plumbing shared by the subcommands.


def _document_cone(doc):
    """Internal cone for a document, marker/offset column moved last.

    A V file with no point rows, or an H file with all offsets zero,
    already describes a cone; the dead column is dropped instead of
    being carried into the reduction step.
    """
    if all(r[0] == 0 for r in doc.rows):
        return make_cone([r[1:] for r in doc.rows])
    return make_cone([r[1:] + (r[0],) for r in doc.rows], homogenized=True)


def _prepare(cone0):
    """(pointed full-dimensional cone, reduction or None) for the input."""
    if rank(cone0.rays) == cone0.dim and is_pointed(cone0):
        return cone0, None
    reduced = reduce_to_pointed_fulldim(cone0)
    return reduced, reduced.reduction


def _restrict_group(group, kept):
    pos = {k: i for i, k in enumerate(kept)}
    gens = []
    for g in group.generators:
        try:
            gens.append(tuple(pos[g[k]] for k in kept))
        except KeyError:
            raise CliError("the group does not act on the reduced "
                           "generator family") from None
    return PermGroup(len(kept), gens)


def _acting_group(args, doc, cone0, cone, reduction):
    """Group on the (possibly reduced) cone's rays, by flag precedence."""
    if getattr(args, "group", None):
        g = parse_group_file(_read_text(args.group), cone0.nrays)
    elif getattr(args, "detect_group", False):
        return restricted_automorphism_group(cone.rays).group
    elif doc.group is not None:
        g = PermGroup(cone0.nrays, doc.group)
    else:
        return PermGroup(cone.nrays)
    if reduction is not None:
        g = _restrict_group(g, reduction.kept_rays)
    return g


def _output_row(kind_in, homogenized, normal):
    """File-layout output row for one facet of the internal cone."""
    z = integer_primitive(normal)
    if kind_in == "V":
        if homogenized:
            return (Fraction(z[-1]),) + tuple(Fraction(x) for x in z[:-1])
        return (Fraction(0),) + tuple(Fraction(x) for x in z)
    if homogenized:
        lam = z[-1]
        if lam > 0:
            return (Fraction(1),) + tuple(Fraction(x, lam) for x in z[:-1])
        return (Fraction(0),) + tuple(Fraction(x) for x in z[:-1])
    return (Fraction(0),) + tuple(Fraction(x) for x in z)


def _result_document(kind_in, rows):
    kind_out = "H" if kind_in == "V" else "V"
    numtype = ("integer"
               if all(x.denominator == 1 for row in rows for x in row)
               else "rational")
    return InputDocument(kind_out, numtype, tuple(rows))


def _orbit_records(cone, group, reps, reduction, kind_in):
    """Sorted (output row, orbit size, stabilizer order, support size)."""
    db = fuse([f.support for f in reps], group, rays=cone.rays)
    out = []
    for entry in db.entries():
        sup = entry.representative
        f = facet_from_support(cone, sup)
        normal = (f.normal if reduction is None
                  else lift_normal(reduction, f.normal))
        stab = group.set_stabilizer(sup).order()
        size = group.order() // stab
        out.append((_output_row(kind_in, cone.homogenized, normal),
                    size, stab, len(sup)))
    out.sort()
    return out


def _report(pairs, records):
    lines = [FORMAT_HEADER, "# orbit report"]
    lines += ["%s: %s" % kv for kv in pairs]
    for i, (_, size, stab, sup) in enumerate(records, 1):
        lines.append("orbit %d: size %d  stabilizer %d  support %d"
                     % (i, size, stab, sup))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Small I/O helpers.


def _read_text(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliError("cannot read %s: %s" % (path, e.strerror)) from None


def _read_document(path):
    return parse_document(_read_text(path))


def _write_text(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise CliError("cannot write %s: %s" % (path, e.strerror)) from None


def _emit(out_path, body, report):
    if out_path:
        _write_text(out_path, body)
        if report is not None:
            _write_text(out_path + ".orbits", report)
    else:
        sys.stdout.write(body)
        if report is not None:
            sys.stderr.write(report)


def _load_bank(path):
    bank = Bank()
    if path and os.path.exists(path):
        with open(path, "rb") as fh:
            bank.buckets = pickle.load(fh)
    return bank


def _save_bank(path, bank):
    if path:
        with open(path, "wb") as fh:
            pickle.dump(bank.buckets, fh)


# ---------------------------------------------------------------------------
# Subcommands.


def _facet_options(args, doc):
    opts = dict(doc.options or ())
    unknown = set(opts) - {"method", "recursion-base", "max-depth",
                           "threads", "balinski", "pruning"}
    if unknown:
        raise CliError("unknown option key(s) in the input file: %s"
                       % " ".join(sorted(unknown)))
    method = args.method or opts.get("method", "adjacency")
    if method not in METHODS:
        raise CliError("unknown method %r" % method)

    def num(flag, key, default):
        if flag is not None:
            return flag
        try:
            return int(opts.get(key, default))
        except ValueError:
            raise CliError("option %s needs an integer, not %r"
                           % (key, opts[key])) from None

    def onoff(flag_off, key):
        if flag_off:
            return False
        val = opts.get(key, "on")
        if val not in ("on", "off"):
            raise CliError("option %s must be on or off, not %r" % (key, val))
        return val == "on"

    return (method,
            num(args.recursion_base, "recursion-base", 8),
            num(args.max_depth, "max-depth", 16),
            num(args.threads, "threads", 1),
            onoff(args.no_balinski, "balinski"),
            onoff(args.no_pruning, "pruning"))


def cmd_facets(args):
    doc = _read_document(args.infile)
    method, base, depth, threads, balinski, pruning = _facet_options(args, doc)
    cone0 = _document_cone(doc)
    cone, reduction = _prepare(cone0)
    spec = None
    if args.perturb:
        if args.group or args.detect_group:
            raise CliError("a perturbed walk is symmetric only under the "
                           "spec file's subgroup; drop --group/--detect-group")
        if method != "pivot":
            raise CliError("only the pivot method walks a perturbed basis "
                           "graph")
        spec = parse_perturbation_file(_read_text(args.perturb), cone.nrays)
        group = spec.subgroup
    else:
        group = _acting_group(args, doc, cone0, cone, reduction)
    bank = _load_bank(args.bank)
    task = ConversionTask(
        cone, group, method=method,
        policy=RecursionPolicy(max_depth=depth, base_threshold=base),
        bank=bank, balinski=balinski, threads=threads)
    stats = {}
    if method == "pivot":
        verify_group_action(cone, group)
        reps, nbasis = explore_basis_graph(task, spec=spec, prune=pruning,
                                           stats=stats)
    else:
        reps, nbasis = convert(task), None
    records = _orbit_records(cone, group, reps, reduction, doc.kind)
    pairs = [("generators", cone0.nrays), ("dimension", cone.dim)]
    if reduction is not None:
        pairs.append(("reduced", "kept %d of %d generators, dimension %d "
                      "of %d" % (cone.nrays, cone0.nrays, cone.dim,
                                 cone0.dim)))
    pairs += [("group order", group.order()), ("method", method)]
    if spec is not None:
        pairs.append(("perturbation steps", len(spec.orbits)))
    pairs += [("facet orbits", len(records)),
              ("total facets", sum(r[1] for r in records))]
    if nbasis is not None:
        pairs += [("basis orbits", nbasis),
                  ("bases visited", stats["bases_visited"])]
    _emit(args.out, render_document(_result_document(doc.kind,
                                                     [r[0] for r in records])),
          _report(pairs, records))
    _save_bank(args.bank, bank)
    return 0


def cmd_automorphisms(args):
    doc = _read_document(args.infile)
    cone0 = _document_cone(doc)
    kept = None
    try:
        result = restricted_automorphism_group(cone0.rays)
    except ValueError:
        reduced, reduction = _prepare(cone0)
        result = restricted_automorphism_group(reduced.rays)
        kept = reduction.kept_rays
    g = result.group
    lines = [FORMAT_HEADER,
             "# restricted automorphism group: order %d, degree %d"
             % (g.order(), g.degree)]
    if kept is not None:
        lines.append("# acting on the reduced generator family: rows %s"
                     % " ".join(str(k + 1) for k in kept))
    lines += [format_cycles(p) for p in g.generators]
    _emit(args.out, "\n".join(lines) + "\n", None)
    return 0


def cmd_check(args):
    doc = _read_document(args.infile)
    claims_doc = _read_document(args.facets)
    if claims_doc.kind == doc.kind:
        raise CliError("the claimed list must be the opposite "
                       "representation of the input (%s vs %s)"
                       % (claims_doc.kind, doc.kind))
    cone0 = _document_cone(doc)
    cone, reduction = _prepare(cone0)
    group = _acting_group(args, doc, cone0, cone, reduction)
    homog = cone0.homogenized
    claims = []
    for ci, row in enumerate(claims_doc.rows):
        if not homog and claims_doc.kind == "H" and row[0] != 0:
            raise CliError("claimed row %d has a nonzero offset but the "
                           "input is a cone" % (ci + 1))
        claims.append(row[1:] + (row[0],) if homog else row[1:])
    kept = (tuple(range(cone0.nrays)) if reduction is None
            else reduction.kept_rays)
    pos = {k: i for i, k in enumerate(kept)}
    claim_sups = []
    for ci, z in enumerate(claims):
        if len(z) != cone0.dim:
            raise CliError("claimed row %d has %d coordinates, the input "
                           "has %d" % (ci + 1, len(z), cone0.dim))
        sup = []
        for j, w in enumerate(cone0.rays):
            t = dot(z, w)
            if t < 0:
                print("check failed: claimed row %d is violated by "
                      "generator %d" % (ci + 1, j + 1), file=sys.stderr)
                return 1
            if t == 0 and j in pos:
                sup.append(pos[j])
        claim_sups.append(tuple(sup))
    true_sups = {f.support for f in dual_description_dd(cone)}
    for ci, s in enumerate(claim_sups):
        if s not in true_sups:
            print("check failed: claimed row %d supports no facet"
                  % (ci + 1), file=sys.stderr)
            return 1
    covered = set()
    for s in claim_sups:
        covered.update(group.orbit_of_set(s))
    missing = sorted(true_sups - covered)
    if missing:
        f = facet_from_support(cone, missing[0])
        normal = (f.normal if reduction is None
                  else lift_normal(reduction, f.normal))
        row = _output_row(doc.kind, homog, normal)
        print("check failed: missing facet: %s"
              % " ".join(str(x) for x in row), file=sys.stderr)
        return 1
    print("check passed: %d claimed rows cover all %d facets"
          % (len(claims), len(true_sups)))
    return 0


def cmd_orbits(args):
    doc = _read_document(args.infile)
    faces_doc = _read_document(args.faces)
    if faces_doc.kind == doc.kind:
        raise CliError("the face list must be the opposite representation "
                       "of the input (%s vs %s)"
                       % (faces_doc.kind, doc.kind))
    cone0 = _document_cone(doc)
    if rank(cone0.rays) != cone0.dim or not is_pointed(cone0):
        raise CliError("orbit bookkeeping needs a pointed full-dimensional "
                       "input; reduce it first")
    n = cone0.nrays
    g_from = (parse_group_file(_read_text(args.from_group), n)
              if args.from_group else PermGroup(n))
    g_to = (parse_group_file(_read_text(args.to_group), n)
            if args.to_group else PermGroup(n))
    homog = cone0.homogenized
    sups = []
    for fi, row in enumerate(faces_doc.rows):
        if not homog and faces_doc.kind == "H" and row[0] != 0:
            raise CliError("face row %d has a nonzero offset but the input "
                           "is a cone" % (fi + 1))
        z = row[1:] + (row[0],) if homog else row[1:]
        if len(z) != cone0.dim:
            raise CliError("face row %d has %d coordinates, the input has "
                           "%d" % (fi + 1, len(z), cone0.dim))
        sup = []
        for j, w in enumerate(cone0.rays):
            t = dot(z, w)
            if t < 0:
                raise CliError("face row %d is violated by generator %d"
                               % (fi + 1, j + 1))
            if t == 0:
                sup.append(j)
        try:
            facet_from_support(cone0, sup)
        except ValueError:
            raise CliError("face row %d is not a facet of the input"
                           % (fi + 1)) from None
        sups.append(tuple(sup))
    if g_to.contains_group(g_from):
        mode = "fuse"
        reps = fuse(sups, g_to, subgroup=g_from,
                    rays=cone0.rays).representatives()
    elif g_from.contains_group(g_to):
        mode = "split"
        db = fuse(sups, g_from, rays=cone0.rays)
        reps = [g_to.canonical_representative(s) for s in split(db, g_to)]
    else:
        raise CliError("the two groups are not nested; neither contains "
                       "the other")
    records = []
    for sup in reps:
        f = facet_from_support(cone0, sup)
        stab = g_to.set_stabilizer(sup).order()
        records.append((_output_row(doc.kind, homog, f.normal),
                        g_to.order() // stab, stab, len(sup)))
    records.sort()
    pairs = [("faces in", len(sups)), ("mode", mode),
             ("group order", g_to.order()), ("orbits out", len(records)),
             ("total faces", sum(r[1] for r in records))]
    _emit(args.out, render_document(_result_document(doc.kind,
                                                     [r[0] for r in records])),
          _report(pairs, records))
    return 0


# ---------------------------------------------------------------------------
# Argument parsing and entry point.


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="symcone",
        description="Exact representation conversion for polyhedral cones "
                    "and polytopes, up to symmetry.")
    sub = ap.add_subparsers(dest="command", required=True)

    f = sub.add_parser("facets",
                       help="convert V to H (or H to V) up to symmetry")
    f.add_argument("--in", dest="infile", required=True,
                   help="input polyhedron file")
    f.add_argument("--out", help="output file (sidecar report goes to "
                                 "OUT.orbits; default stdout/stderr)")
    grp = f.add_mutually_exclusive_group()
    grp.add_argument("--group", help="group file acting on the input rows")
    grp.add_argument("--detect-group", action="store_true",
                     help="compute the restricted automorphism group")
    f.add_argument("--method", choices=METHODS)
    f.add_argument("--recursion-base", type=int, metavar="N",
                   help="solve directly below N generators (default 8)")
    f.add_argument("--max-depth", type=int, metavar="K",
                   help="recursion depth limit (default 16)")
    f.add_argument("--perturb", metavar="SPECFILE",
                   help="pivot under an orbitwise perturbation spec")
    f.add_argument("--no-balinski", action="store_true",
                   help="disable the connectivity skip in adjacency "
                        "decomposition")
    f.add_argument("--no-pruning", action="store_true",
                   help="disable basis-graph pruning in the pivot walk")
    f.add_argument("--bank", metavar="FILE",
                   help="persistent cache of solved subcones")
    f.add_argument("--threads", type=int, metavar="T")

    a = sub.add_parser("automorphisms",
                       help="emit the restricted automorphism group")
    a.add_argument("--in", dest="infile", required=True)
    a.add_argument("--out")

    c = sub.add_parser("check",
                       help="verify a claimed facet list against the input")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--facets", required=True,
                   help="claimed facet list (opposite representation)")
    cg = c.add_mutually_exclusive_group()
    cg.add_argument("--group", help="expand claimed orbits under this group")
    cg.add_argument("--detect-group", action="store_true")

    o = sub.add_parser("orbits",
                       help="fuse or split a face list between two groups")
    o.add_argument("--in", dest="infile", required=True)
    o.add_argument("--faces", required=True,
                   help="face list (opposite representation)")
    o.add_argument("--from", dest="from_group", metavar="GROUPFILE",
                   help="group the faces are currently listed under "
                        "(default trivial)")
    o.add_argument("--to", dest="to_group", metavar="GROUPFILE",
                   help="target group (default trivial)")
    o.add_argument("--out")
    return ap


_COMMANDS = {
    "facets": cmd_facets,
    "automorphisms": cmd_automorphisms,
    "check": cmd_check,
    "orbits": cmd_orbits,
}


def run(argv=None):
    """Parse arguments, dispatch, and return the process exit code."""
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, CliError, DegenerateConeError, ValueError) as e:
        print("symcone: %s" % e, file=sys.stderr)
        return 1


def main():
    sys.exit(run())
