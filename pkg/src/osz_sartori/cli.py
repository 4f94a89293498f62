"""Command-line front end: bases, products, Ξ, verification suites and tables.

States are 0-based comma lists ("0,3"); sequences are u/d words ("uddu",
u = ∧, d = ∨).  Either form is accepted wherever a state or sequence is
expected.  JSON output follows one schema for every object:

    {"n", "k", "side", "object", "items": [{"key", "monomial", "coeff", "degree"}]}
"""
import argparse
import json
import sys

from . import __version__
from . import combinat as cb
from . import osz, rep, sartori
from .combinat import IState, UpDownSeq
from .qcoeff import LaurentQ, RatQ, UPolynomial, mono_sort_key

SEQ_CHARS = set("ud∧∨^v")
DEFAULT_MAX_N = 6


class UsageError(Exception):
    pass


# -- parsing -----------------------------------------------------------------------

def parse_state(text, n):
    """'0,3' or 'uddu' (or '' / '-' for the empty state) -> IState."""
    text = text.strip()
    if text in ("", "-"):
        return IState(n, ())
    if set(text) <= SEQ_CHARS:
        return parse_seq(text, n).to_state()
    try:
        els = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError("malformed state %r (want e.g. 0,3 or uddu)" % text) from None
    try:
        return IState(n, els)
    except ValueError as err:
        raise UsageError(str(err)) from None


def parse_seq(text, n):
    """'uddu' (or ∧∨ / 0-1 words) -> UpDownSeq; comma lists are read as states."""
    text = text.strip()
    if "," in text or (text.isdigit() and len(text) != n):
        return parse_state(text, n).to_seq()
    try:
        mu = UpDownSeq.parse(text)
    except ValueError as err:
        raise UsageError(str(err)) from None
    if mu.n != n:
        raise UsageError("sequence %r has length %d, expected n = %d" % (text, mu.n, n))
    return mu


def parse_monomial(text, n):
    try:
        m = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError("malformed monomial %r (want exponents like 1,0,2)" % text) from None
    if len(m) != n or min(m, default=0) < 0:
        raise UsageError("monomial needs %d nonnegative exponents" % n)
    return m


def _need_n(args):
    if args.n is None:
        raise UsageError("--n is required")
    return args.n


def _check_k(args, k):
    if args.k is not None and args.k != k:
        raise UsageError("--k %d does not match the given states (k = %d)" % (args.k, k))
    return k


# -- serialization -----------------------------------------------------------------

def state_key(x):
    return ",".join(map(str, x.elements))


def _parse_state_key(text, n):
    return IState(n, tuple(int(t) for t in text.split(",")) if text else ())


def pair_key(x, y):
    return "%s|%s" % (state_key(x), state_key(y))


def hom_key(lam, mu):
    return "%s->%s" % (lam.ascii(), mu.ascii())


def valuation(c):
    """Lowest q-degree of a coefficient (None for zero)."""
    c = RatQ.coerce(c)
    if c.is_zero():
        return None
    return c.num.min_degree() - c.den.min_degree()


def coeff_json(c):
    if isinstance(c, int):
        return c
    return RatQ.coerce(c).to_json()


def document(n, k, side, obj, items, **extra):
    doc = {"n": n, "k": k, "side": side, "object": obj}
    doc.update(extra)
    doc["items"] = items
    return doc


def osz_element_json(a):
    items = []
    for (x, y) in sorted(a.terms):
        p = a.terms[(x, y)]
        d = cb.distance(x, y)
        for m in sorted(p.terms, key=mono_sort_key):
            items.append({"key": pair_key(x, y), "monomial": list(m), "coeff": p.terms[m],
                          "degree": d + 2 * sum(m)})
    return document(a.n, a.k, "osz", "element", items)


def osz_element_from_json(doc):
    n, k = doc["n"], doc["k"]
    terms = {}
    for it in doc["items"]:
        xs, ys = it["key"].split("|")
        key = (_parse_state_key(xs, n), _parse_state_key(ys, n))
        terms.setdefault(key, {})
        m = tuple(it["monomial"])
        terms[key][m] = terms[key].get(m, 0) + it["coeff"]
    return osz.OszElement(n, k, {key: UPolynomial(n, t) for key, t in terms.items()})


def sartori_element_json(e, k=None):
    """Each Hom component is written as its canonical fork-basis representative."""
    items = []
    n = e.n
    for (mu, lam) in sorted(e.terms):
        h = e.terms[(mu, lam)]
        k = mu.symbols.count(cb.UP)
        p = h.canonical()
        for m in sorted(p.terms, key=mono_sort_key):
            items.append({"key": hom_key(lam, mu), "monomial": list(m), "coeff": p.terms[m],
                          "degree": h.space.qdegree(sum(m))})
    return document(n, k, "sartori", "element", items)


def sartori_element_from_json(doc):
    n = doc["n"]
    polys = {}
    for it in doc["items"]:
        src, tgt = it["key"].split("->")
        key = (UpDownSeq.parse(src), UpDownSeq.parse(tgt))
        polys.setdefault(key, {})
        m = tuple(it["monomial"])
        polys[key][m] = polys[key].get(m, 0) + it["coeff"]
    return sartori.SarElement(n, [sartori.SarHom(lam, mu, UPolynomial(n, t))
                                  for (lam, mu), t in polys.items()])


def element_from_json(doc):
    if doc.get("object") != "element":
        raise UsageError("JSON document is not an element (object = %r)" % doc.get("object"))
    if doc["side"] == "osz":
        return osz_element_from_json(doc)
    if doc["side"] == "sartori":
        return sartori_element_from_json(doc)
    raise UsageError("unknown side %r" % doc["side"])


def element_json(a, k=None):
    if isinstance(a, osz.OszElement):
        return osz_element_json(a)
    return sartori_element_json(a, k)


def dump_json(doc):
    """Stable JSON text: header fields first, one item per line."""
    head = {key: v for key, v in doc.items() if key != "items"}
    lines = ["{"]
    for key, v in head.items():
        lines.append(" %s: %s," % (json.dumps(key), json.dumps(v, ensure_ascii=False)))
    items = [json.dumps(it, ensure_ascii=False) for it in doc["items"]]
    if items:
        lines.append(' "items": [\n  %s\n ]' % ",\n  ".join(items))
    else:
        lines.append(' "items": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def osz_basis_json(n, k, pairs, D):
    items = []
    for x, y in pairs:
        d = cb.distance(x, y)
        for m in osz.basis_piece(x, y, D):
            items.append({"key": pair_key(x, y), "monomial": list(m), "coeff": 1,
                          "degree": d + 2 * sum(m)})
    return document(n, k, "osz", "basis", items, max_degree=D)


def fork_key(lam, mu, f):
    return "%s|eta=%s|sigma=%s" % (hom_key(lam, mu), f.eta.ascii(), ",".join(map(str, f.sigma)))


def sartori_basis_json(n, k, pairs):
    items = []
    for lam, mu in pairs:
        for f in sartori.fork_basis(lam, mu):
            (m,) = f.monomial.terms
            items.append({"key": fork_key(lam, mu, f), "monomial": list(m), "coeff": 1,
                          "degree": f.qdegree})
    return document(n, k, "sartori", "basis", items)


def basis_from_json(doc):
    """Inverse of the basis listings: (x, y, monomial) triples on the osz side,
    (λ, μ, ForkBasisElt) triples on the Sartori side."""
    n = doc["n"]
    out = []
    for it in doc["items"]:
        m = tuple(it["monomial"])
        if doc["side"] == "osz":
            xs, ys = it["key"].split("|")
            out.append((_parse_state_key(xs, n), _parse_state_key(ys, n), m))
        else:
            hom, eta, sigma = it["key"].split("|")
            src, tgt = hom.split("->")
            lam, mu = UpDownSeq.parse(src), UpDownSeq.parse(tgt)
            eta = UpDownSeq.parse(eta[len("eta="):])
            sigma = tuple(int(t) for t in sigma[len("sigma="):].split(",") if t)
            mono = UPolynomial(n, {m: 1})
            out.append((lam, mu, sartori.ForkBasisElt(
                eta, sigma, mono, sartori.reduce_mod_Ib(mono, mu.bseq()), it["degree"])))
    return out


# -- text and LaTeX rendering ------------------------------------------------------

def laurent_latex(f):
    f = LaurentQ.coerce(f)
    if not f.terms:
        return "0"
    out = ""
    for e in sorted(f.terms):
        c = f.terms[e]
        mono = "" if e == 0 else ("q" if e == 1 else "q^{%d}" % e)
        body = str(abs(c)) if (abs(c) != 1 or not mono) else ""
        sign = "-" if c < 0 else "+"
        if not out:
            out = ("-" if c < 0 else "") + body + mono
        else:
            out += " %s %s%s" % (sign, body, mono)
    return out


def ratq_latex(c):
    c = RatQ.coerce(c)
    if c.is_laurent():
        return laurent_latex(c.as_laurent())
    num, den = c.num, c.den
    if den.coeff(den.min_degree()) < 0:
        num, den = -num, -den
    return "\\frac{%s}{%s}" % (laurent_latex(num), laurent_latex(den))


def pmatrix(rows):
    body = " \\\\\n".join(" & ".join(r) for r in rows)
    return "\\begin{pmatrix}\n%s\n\\end{pmatrix}" % body


def seq_latex(w):
    return "".join("\\wedge" if s == cb.UP else "\\vee" for s in w)


def text_items(doc):
    lines = ["# n=%s k=%s side=%s object=%s (%d items)"
             % (doc["n"], doc["k"], doc["side"], doc["object"], len(doc["items"]))]
    for it in doc["items"]:
        c = it["coeff"]
        cstr = str(RatQ.from_json(c)) if not isinstance(c, int) else str(c)
        lines.append("%s  monomial=%s  coeff=%s  degree=%s"
                     % (it["key"], ",".join(map(str, it["monomial"])), cstr, it["degree"]))
    return "\n".join(lines) + "\n"


# -- tables ------------------------------------------------------------------------

def _ks(n, k):
    if k is None:
        return list(range(n, -1, -1))
    if not 0 <= k <= n:
        raise UsageError("need 0 <= k <= n")
    return [k]


def table_forms(n, k, fmt):
    """Gram matrices of both forms on the canonical basis, per weight space."""
    items = []
    latex = []
    for kk in _ks(n, k):
        words = rep.weight_basis(n, kk)
        S = rep.gram_matrix("S", n, kk)
        O = rep.gram_matrix("OSz", n, kk)
        for name, G in (("S", S), ("OSz", O)):
            for i, a in enumerate(words):
                for j, b in enumerate(words):
                    items.append({"key": "%s|k=%d|%s|%s" % (name, kk, rep.word_str(a), rep.word_str(b)),
                                  "monomial": [], "coeff": coeff_json(G[i][j]),
                                  "degree": valuation(G[i][j])})
        M = rep.mat_scale(S, rep.form_scalar("S", kk).inverse())
        cols = ", ".join("v^\\diamond_{%s}" % seq_latex(w) for w in words)
        latex.append("%% k = %d, columns %s\nS_%d = (%d)!_{q^2}\\, %s"
                     "\\qquad \\mathrm{OSz}_%d = \\frac{1}{(1-q^2)^{%d}}\\, %s"
                     % (kk, cols, kk, kk,
                        pmatrix([[ratq_latex(e) for e in r] for r in M]), kk, kk,
                        pmatrix([[ratq_latex(e) for e in r] for r in M])))
    doc = document(n, k, "rep", "forms", items)
    if fmt == "latex":
        return "\n\n".join(latex) + "\n"
    return doc


def table_canonical(n, k, fmt):
    items = []
    latex = []
    for kk in _ks(n, k):
        for w, v in rep.canonical_basis(n, kk).items():
            terms = []
            for u in sorted(v.coeffs, reverse=True):
                c = v.coeffs[u]
                items.append({"key": "v%s" % rep.word_str(w), "monomial": list(u),
                              "coeff": coeff_json(c), "degree": valuation(c)})
                cl = ratq_latex(c)
                terms.append(("" if cl == "1" else cl + " ") + "v_{%s}" % rep.word_str(u))
            latex.append("v^\\diamond_{%s} &= %s" % (rep.word_str(w), " + ".join(terms)))
    if fmt == "latex":
        return "\\begin{align*}\n%s\n\\end{align*}\n" % " \\\\\n".join(latex)
    return document(n, k, "rep", "canonical", items)


def table_dmatrix(n, k, fmt):
    items = []
    latex = []
    for kk in _ks(n, k):
        words = rep.weight_basis(n, kk)
        D = rep.d_matrix(n, kk)
        for i, a in enumerate(words):
            for j, b in enumerate(words):
                items.append({"key": "k=%d|%s|%s" % (kk, rep.word_str(a), rep.word_str(b)),
                              "monomial": [], "coeff": coeff_json(D[i][j]),
                              "degree": valuation(D[i][j])})
        latex.append("%% k = %d, order %s\n%s" % (kk, ", ".join(map(rep.word_str, words)),
                                                   pmatrix([[laurent_latex(e) for e in r] for r in D])))
    if fmt == "latex":
        return "\n\n".join(latex) + "\n"
    return document(n, k, "rep", "dmatrix", items)


def table_gradeddim(n, k, side, fmt):
    items = []
    latex = []
    for kk in _ks(n, k):
        states = cb.all_states(n, kk)
        rows = []
        for x in states:
            row = []
            for y in states:
                if side == "osz":
                    c = osz.graded_dim(x, y)
                    key = pair_key(x, y)
                else:
                    # Hom(μ^y, μ^x), matching Ξ
                    c = RatQ(cb.graded_rank_Z(x.to_seq(), y.to_seq()))
                    key = hom_key(y.to_seq(), x.to_seq())
                items.append({"key": "k=%d|%s" % (kk, key), "monomial": [],
                              "coeff": coeff_json(c), "degree": valuation(c)})
                row.append(ratq_latex(c))
            rows.append(row)
        latex.append("%% k = %d, states %s\n%s" % (kk, ", ".join("{%s}" % state_key(x) for x in states),
                                                    pmatrix(rows)))
    if fmt == "latex":
        return "\n\n".join(latex) + "\n"
    return document(n, k, side, "gradeddim", items)


# -- commands ----------------------------------------------------------------------

def cmd_basis(args):
    n = args.n
    D = 10 if args.max_degree is None else args.max_degree
    if args.side == "osz":
        if (args.x is None) != (args.y is None):
            raise UsageError("give both --x and --y, or neither")
        if args.x is not None:
            x, y = parse_state(args.x, n), parse_state(args.y, n)
            if x.k != y.k:
                raise UsageError("states have different sizes")
            k = _check_k(args, x.k)
            pairs = [(x, y)]
        else:
            if args.k is None:
                raise UsageError("--k is required when no states are given")
            k = args.k
            states = cb.all_states(n, k)
            pairs = [(x, y) for x in states for y in states]
        return osz_basis_json(n, k, pairs, D)
    if (args.mu is None) != (args.lam is None):
        raise UsageError("give both --mu and --lambda, or neither")
    if args.mu is not None:
        mu, lam = parse_seq(args.mu, n), parse_seq(args.lam, n)
        k = _check_k(args, mu.symbols.count(cb.UP))
        if lam.symbols.count(cb.UP) != k:
            raise UsageError("sequences have different numbers of ∧")
        pairs = [(lam, mu)]
    else:
        if args.k is None:
            raise UsageError("--k is required when no sequences are given")
        k = args.k
        seqs = cb.all_seqs(n, k)
        pairs = [(lam, mu) for mu in seqs for lam in seqs]
    return sartori_basis_json(n, k, pairs)


def _load(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise UsageError("cannot read element from %s: %s" % (path, err)) from None


def cmd_multiply(args):
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise UsageError("give both --a and --b")
        a, b = element_from_json(_load(args.a)), element_from_json(_load(args.b))
        if type(a) is not type(b):
            raise UsageError("cannot multiply elements of different algebras")
        if a.n != b.n:
            raise UsageError("elements have different n")
        return element_json(a * b, _load(args.a)["k"])
    if None in (args.x, args.y, args.z):
        raise UsageError("give --x --y --z (f_{x,y} f_{y,z}) or --a --b JSON files")
    n = _need_n(args)
    x, y, z = (parse_state(s, n) for s in (args.x, args.y, args.z))
    if len({x.k, y.k, z.k}) != 1:
        raise UsageError("states have different sizes")
    _check_k(args, x.k)
    prod = osz.element(x, y) * osz.element(y, z)
    if args.side == "sartori":
        from .xi import xi_map
        return element_json(xi_map(prod), x.k)
    return element_json(prod)


def cmd_xi(args):
    from .xi import xi_map
    if args.a is not None:
        a = element_from_json(_load(args.a))
        if not isinstance(a, osz.OszElement):
            raise UsageError("Ξ takes an element of the bordered algebra")
    else:
        if args.x is None or args.y is None:
            raise UsageError("give --x and --y (and optionally --monomial), or --a")
        n = _need_n(args)
        x, y = parse_state(args.x, n), parse_state(args.y, n)
        if x.k != y.k:
            raise UsageError("states have different sizes")
        _check_k(args, x.k)
        m = parse_monomial(args.monomial, n) if args.monomial else (0,) * n
        a = osz.element(x, y, UPolynomial(n, {m: 1}))
    return element_json(xi_map(a), a.k)


def _default_degree(n, suite):
    if suite == "relations":
        return 8
    return 10 if n <= 5 else 8


def run_suite(suite, n, k, D):
    """Run one verification suite; returns its JSON report."""
    from . import functors, xi
    if suite == "rep":
        return rep.verify_rep(n)
    if suite == "relations":
        return xi.verify_relations(n, k, D)
    if suite == "square":
        ks = range(1, n + 1) if k is None else [k]
        runs = [functors.verify_commuting_square(n, kk, D) for kk in ks]
    else:
        fn = xi.verify_iso if suite == "iso" else xi.verify_flatness
        ks = range(n + 1) if k is None else [k]
        runs = [fn(n, kk, D) for kk in ks]
    return {"suite": suite, "n": n, "k": k, "D": D,
            "pass": all(r["pass"] for r in runs), "runs": runs}


def _summary(report):
    if "checks" in report:
        bad = [name for name, c in report["checks"].items() if not c["pass"]]
        total = sum(c["checked"] for c in report["checks"].values())
        return "%d checks, %d groups failing%s" % (total, len(bad), (": " + ", ".join(bad)) if bad else "")
    npairs = sum(len(r["pairs"]) for r in report["runs"])
    bad = [(r["k"], p["x"], p["y"]) for r in report["runs"] for p in r["pairs"] if not p["pass"]]
    return "%d pairs over %d weights, %d failing" % (npairs, len(report["runs"]), len(bad))


def cmd_verify(args):
    n = args.n
    if n > args.max_n:
        raise UsageError("n = %d exceeds --max-n %d" % (n, args.max_n))
    if args.k is not None and not 0 <= args.k <= n:
        raise UsageError("need 0 <= k <= n")
    if args.suite == "square" and args.k == 0:
        raise UsageError("the square suite needs k >= 1")
    D = _default_degree(n, args.suite) if args.max_degree is None else args.max_degree
    report = run_suite(args.suite, n, args.k, D)
    out = args.out or "verify-%s-n%d.json" % (args.suite, n)
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=1, ensure_ascii=False, default=str)
        fh.write("\n")
    status = "PASS" if report["pass"] else "FAIL"
    print("%s %s n=%d: %s (report: %s)" % (status, args.suite, n, _summary(report), out))
    return 0 if report["pass"] else 1


def cmd_tables(args):
    n, k, fmt = args.n, args.k, args.format
    if args.table == "forms":
        return table_forms(n, k, fmt)
    if args.table == "canonical":
        return table_canonical(n, k, fmt)
    if args.table == "dmatrix":
        return table_dmatrix(n, k, fmt)
    return table_gradeddim(n, k, args.side, fmt)


def render(result, fmt):
    if isinstance(result, str):
        return result
    if fmt == "json":
        return dump_json(result)
    if fmt == "latex":
        raise UsageError("LaTeX output is available for tables only")
    return text_items(result)


def emit(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# -- argument parser ---------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="osz-sartori",
                                description="Bordered algebras B_l(n,k), Sartori algebras A_{n,k} and the map between them.")
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, states=True, seqs=False, fmt=True, need_n=True):
        sp.set_defaults(parser=sp)
        sp.add_argument("--n", type=int, required=need_n, help="number of strands")
        sp.add_argument("--k", type=int, help="weight (size of the I-states, number of ∧)")
        if states:
            sp.add_argument("--x", help="I-state, e.g. 0,3 or uddu")
            sp.add_argument("--y", help="I-state, e.g. 1,2 or duud")
        if seqs:
            sp.add_argument("--mu", help="target sequence, e.g. uddu")
            sp.add_argument("--lambda", dest="lam", help="source sequence, e.g. duud")
        sp.add_argument("--max-degree", type=int, help="truncation degree D (q-degree)")
        if fmt:
            sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
        sp.add_argument("--out", help="output path (default: stdout)")

    sp = sub.add_parser("basis", help="Z-basis of one or all components")
    sp.add_argument("--side", choices=("osz", "sartori"), default="osz")
    common(sp, states=True, seqs=True)
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("multiply", help="f_{x,y} f_{y,z}, or the product of two JSON elements")
    sp.add_argument("--side", choices=("osz", "sartori"), default="osz",
                    help="with --x --y --z, sartori applies Ξ to the product")
    common(sp, need_n=False)
    sp.add_argument("--z", help="third I-state")
    sp.add_argument("--a", help="left factor, JSON element file ('-' for stdin)")
    sp.add_argument("--b", help="right factor, JSON element file")
    sp.set_defaults(func=cmd_multiply)

    sp = sub.add_parser("xi", help="image of m f_{x,y} (or a JSON element) in the Sartori algebra")
    common(sp, need_n=False)
    sp.add_argument("--monomial", help="U-exponents, e.g. 1,0,0,0 (default 1)")
    sp.add_argument("--a", help="JSON element file")
    sp.set_defaults(func=cmd_xi)

    sp = sub.add_parser("verify", help="run a verification suite and write a JSON report")
    sp.add_argument("suite", choices=("iso", "flat", "square", "rep", "relations"))
    common(sp, states=False, fmt=False)
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="refuse larger n (default 6)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("tables", help="forms, canonical basis, d-matrix or graded dimensions")
    sp.add_argument("table", choices=("forms", "canonical", "dmatrix", "gradeddim"))
    sp.add_argument("--side", choices=("osz", "sartori"), default="osz", help="for gradeddim")
    common(sp, states=False)
    sp.set_defaults(func=cmd_tables)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n is not None and args.n < 0:
        args.parser.error("--n must be nonnegative")
    try:
        if args.command == "verify":
            return args.func(args)
        result = args.func(args)
        emit(render(result, args.format), args.out)
    except UsageError as err:
        args.parser.error(str(err))
    except OSError as err:
        print("osz-sartori: %s" % err, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
