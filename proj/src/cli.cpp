#include "virmtc/cli.hpp"

#include "virmtc/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace virmtc {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

using Rows = std::vector<std::vector<std::string>>;

void emit_table(std::ostream& out, const std::string& format, const std::vector<std::string>& head, const Rows& rows) {
    if (format == "csv") {
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
            out << '\n';
        };
        line(head);
        for (const auto& r : rows) line(r);
        return;
    }
    auto line = [&](const std::vector<std::string>& r) {
        out << '|';
        for (const auto& c : r) out << ' ' << c << " |";
        out << '\n';
    };
    line(head);
    out << '|';
    for (std::size_t i = 0; i < head.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& r : rows) line(r);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string pair_name(int p, int q) { return "C_{" + std::to_string(p) + "," + std::to_string(q) + "}"; }

std::string yes(bool b) { return b ? "yes" : "no"; }

struct Options {
    std::string format = "json";
    bool use_float = false;
    double tol = 1e-9;
    bool no_cache = false;

    Cache cache() const { return no_cache ? Cache::disabled() : Cache::from_env(); }
};

void cmd_info(const Options& o, int p, int q, std::ostream& out) {
    auto C = o.cache().category(p, q);
    const MinimalModel& M = C->model;
    Rows rows;
    json simples = json::array();
    for (int a = 0; a < M.rank(); ++a) {
        const KacLabel x = M.simples()[a];
        simples.push_back({{"m", x.m},
                           {"n", x.n},
                           {"h", to_string(C->data.weight(a))},
                           {"theta", to_string(C->data.theta_exponent(a))},
                           {"qdim", round12(C->dims[a])}});
        rows.push_back({x.str(), to_string(C->data.weight(a)), to_string(C->data.theta_exponent(a)), fmt12(C->dims[a])});
    }
    const double fp = fpdim_category(C->ring);
    if (o.format == "json") {
        json j = {{"p", M.p()},
                  {"q", M.q()},
                  {"c", to_string(central_charge(M))},
                  {"rank", M.rank()},
                  {"simple_current", M.simple_current().str()},
                  {"simples", simples},
                  {"fpdim", round12(fp)},
                  {"fpdim_closed_form", round12(fpdim_closed_form(M.p(), M.q()))},
                  {"fsexp", C->data.fsexp(C->all())}};
        out << j.dump(2) << '\n';
        return;
    }
    if (o.format == "md")
        out << "# " << pair_name(M.p(), M.q()) << "\n\nc = " << to_string(central_charge(M)) << ", rank "
            << M.rank() << ", FPdim " << fmt12(fp) << ", FSexp " << C->data.fsexp(C->all()) << "\n\n";
    emit_table(out, o.format, {"label", "h", "theta", "qdim"}, rows);
}

void cmd_smatrix(const Options& o, int p, int q, std::ostream& out) {
    auto C = o.cache().category(p, q);
    const MinimalModel& M = C->model;
    const std::size_t rank = o.use_float ? float_rank(C->data.s_kernel(), o.tol) : exact_rank(C->data.s_kernel());
    std::vector<std::string> labels;
    for (const auto& x : M.simples()) labels.push_back(x.str());
    if (o.format == "json") {
        json S = json::array();
        for (int a = 0; a < M.rank(); ++a) {
            json row = json::array();
            for (int b = 0; b < M.rank(); ++b) row.push_back(round12(C->data.s_float()(a, b)));
            S.push_back(row);
        }
        json j = {{"p", M.p()}, {"q", M.q()}, {"labels", labels}, {"S", S},
                  {"rank", rank}, {"rank_backend", o.use_float ? "float" : "exact"}};
        if (!o.use_float) {
            json K = json::array();
            for (int a = 0; a < M.rank(); ++a) {
                json row = json::array();
                for (int b = 0; b < M.rank(); ++b) row.push_back(cyclo_json(C->data.s_entry(a, b)));
                K.push_back(row);
            }
            j["kernel"] = K;
            j["kernel_scale"] = "sqrt(8/pq)";
        }
        out << j.dump(2) << '\n';
        return;
    }
    Rows rows;
    for (int a = 0; a < M.rank(); ++a) {
        std::vector<std::string> r{labels[a]};
        for (int b = 0; b < M.rank(); ++b) r.push_back(fmt12(C->data.s_float()(a, b)));
        rows.push_back(r);
    }
    std::vector<std::string> head{"S"};
    head.insert(head.end(), labels.begin(), labels.end());
    if (o.format == "md")
        out << "# S matrix of " << pair_name(M.p(), M.q()) << "\n\nrank " << rank << " ("
            << (o.use_float ? "float" : "exact") << ")\n\n";
    emit_table(out, o.format, head, rows);
}

void cmd_fusion(const Options& o, int p, int q, std::ostream& out) {
    auto C = o.cache().category(p, q);
    const FusionRing& r = C->ring;
    if (o.format == "json") {
        json j;
        to_json(j, r);
        out << j.dump(2) << '\n';
        return;
    }
    Rows rows;
    for (int a = 0; a < r.size(); ++a)
        for (int b = a; b < r.size(); ++b) {
            if (o.format == "csv") {
                for (const auto& [c, k] : r.product(a, b))
                    rows.push_back({r.name(a), r.name(b), r.name(c), std::to_string(k)});
            } else {
                std::vector<std::string> terms;
                for (const auto& [c, k] : r.product(a, b))
                    terms.push_back((k > 1 ? std::to_string(k) + " " : "") + "(" + r.name(c) + ")");
                rows.push_back({"(" + r.name(a) + ")", "(" + r.name(b) + ")", join(terms, " + ")});
            }
        }
    if (o.format == "csv") {
        emit_table(out, o.format, {"a", "b", "c", "N"}, rows);
    } else {
        out << "# Fusion rules of " << pair_name(C->model.p(), C->model.q()) << "\n\n";
        emit_table(out, o.format, {"a", "b", "a x b"}, rows);
    }
}

void cmd_subcats(const Options& o, int p, int q, std::ostream& out) {
    auto C = o.cache().category(p, q);
    if (o.format == "md") {
        out << report_section(*C, o.tol);
        return;
    }
    const auto subs = nontrivial(enumerate_subcats(*C), C->model.rank());
    json arr = json::array();
    Rows rows;
    for (const auto& s : subs) {
        json rec = subcat_record(*C, s);
        ModularityReport m = is_modular(*C, s.members, o.tol);
        rec["rank"] = o.use_float ? m.rank_float : m.rank_exact;
        rows.push_back({s.name, std::to_string(s.members.size()), yes(m.modular),
                        std::to_string(rec["fsexp"].get<int>()), join(labels_of(*C, s.members), " ")});
        arr.push_back(rec);
    }
    if (o.format == "json") out << arr.dump(2) << '\n';
    else emit_table(out, o.format, {"name", "size", "modular", "fsexp", "members"}, rows);
}

int cmd_extension(const Options& o, int p, bool verify, const std::string& dump, std::ostream& out) {
    ExtensionCategory E(p);
    if (!dump.empty()) {
        std::ofstream f(dump);
        if (!f) throw ValidationError("cannot write " + dump);
        f << extension_ring_json(E).dump(2) << '\n';
    }
    const FusionRing& r = E.ring();
    if (verify) {
        const auto lines = ext_verify(E);
        bool all = true;
        json arr = json::array();
        Rows rows;
        for (const auto& l : lines) {
            all = all && l.pass;
            arr.push_back({{"check", l.name}, {"pass", l.pass}});
            rows.push_back({l.pass ? "PASS" : "FAIL", l.name});
        }
        if (o.format == "json") out << arr.dump(2) << '\n';
        else emit_table(out, o.format, {"result", "check"}, rows);
        return all ? 0 : 3;
    }
    const auto subs = ext_enumerate_subcats(E);
    json objs = json::array(), sj = json::array(), dual = json::array();
    Rows orows, srows;
    for (int a = 0; a < r.size(); ++a) {
        const ExtObject& x = E.simples()[a];
        const std::string kind = x.kind == ExtObject::Kind::Induced ? "induced" : "split";
        objs.push_back({{"id", x.id()}, {"kind", kind}, {"h_mod1", to_string(x.h_mod1)}, {"qdim", round12(x.qdim)}});
        orows.push_back({x.id(), kind, to_string(x.h_mod1), fmt12(x.qdim), r.name(r.dual(a))});
        if (x.kind == ExtObject::Kind::Split) dual.push_back({x.id(), r.name(r.dual(a))});
    }
    for (const auto& s : subs) {
        if (s.members.size() <= 1 || static_cast<int>(s.members.size()) == r.size()) continue;
        TwistVerdict v = ext_modularity_via_twist(E, s.members);
        std::vector<std::string> mem;
        for (int a : s.members) mem.push_back(r.name(a));
        json rec = {{"name", s.name}, {"members", mem}, {"verdict", to_string(v.verdict)}};
        rec["witness"] = v.witness >= 0 ? json(r.name(v.witness)) : json(nullptr);
        sj.push_back(rec);
        srows.push_back({s.name, std::to_string(s.members.size()), to_string(v.verdict), join(mem, " ")});
    }
    double dim = 0;
    for (const auto& x : E.simples()) dim += x.qdim * x.qdim;
    if (o.format == "json") {
        json j = {{"p", p},
                  {"objects", objs},
                  {"resolved", E.resolved()},
                  {"sign_solutions", E.sign_solutions()},
                  {"duality_solutions", E.duality_solutions()},
                  {"split_duals", dual},
                  {"fpdim", round12(dim)},
                  {"subcategories", sj},
                  {"ambiguity_log", E.ambiguity_log()}};
        out << j.dump(2) << '\n';
        return 0;
    }
    if (o.format == "md")
        out << "# Extension of C_{" << p << "," << p + 1 << "} by (1,1)+(1," << p << ")\n\n"
            << r.size() << " simple objects, FPdim " << fmt12(dim) << ", resolved: " << yes(E.resolved()) << "\n\n";
    emit_table(out, o.format, {"object", "kind", "h mod 1", "qdim", "dual"}, orows);
    if (o.format == "md") {
        out << "\n## Nontrivial premodular subcategories\n\n";
        emit_table(out, o.format, {"name", "size", "verdict", "members"}, srows);
    }
    return 0;
}

void cmd_glue(const Options& o, int p1, int q1, const std::string& n1, int p2, int q2, const std::string& n2,
              std::ostream& out) {
    const Cache cache = o.cache();
    auto A = cache.category(p1, q1);
    auto B = cache.category(p2, q2);
    const auto cands = gluing_candidates(*A, named_subcategory(*A, n1), *B, named_subcategory(*B, n2));
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& g : cands) arr.push_back(candidate_json(g));
        out << arr.dump(2) << '\n';
        return;
    }
    if (o.format == "csv") {
        Rows rows;
        for (std::size_t i = 0; i < cands.size(); ++i)
            for (std::size_t k = 0; k < cands[i].labels.size(); ++k)
                rows.push_back({std::to_string(i), cands[i].labels[k].first.str(), cands[i].labels[k].second.str(),
                                to_string(cands[i].weight_sums[k]), cands[i].integral ? "true" : "false"});
        emit_table(out, o.format, {"candidate", "X", "F(X)", "h_X + h_F(X)", "integral"}, rows);
        return;
    }
    const std::string l = "(" + std::to_string(A->model.p()) + "," + std::to_string(A->model.q()) + ")." + n1;
    const std::string rr = "(" + std::to_string(B->model.p()) + "," + std::to_string(B->model.q()) + ")." + n2;
    out << "# Gluing " << l << " with " << rr << "\n\n";
    if (cands.empty()) out << "No fusion ring isomorphism.\n";
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const auto& g = cands[i];
        out << "## Isomorphism " << i + 1 << "\n\n";
        Rows rows;
        for (std::size_t k = 0; k < g.labels.size(); ++k)
            rows.push_back({"(" + g.labels[k].first.str() + ")", "(" + g.labels[k].second.str() + ")",
                            to_string(g.weight_sums[k])});
        emit_table(out, o.format, {"X", "F(X)", "h_X + h_F(X)"}, rows);
        out << '\n'
            << (g.integral ? "All sums are integers: candidate gluing.\n"
                           : "Some sums are not integers: no gluing along this isomorphism.\n");
        if (i + 1 < cands.size()) out << '\n';
    }
}

void cmd_glue_scan(const Options& o, int nmax, std::ostream& out) {
    const auto rows = scan_unitary_chain(nmax);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json w = json::array();
            for (const auto& s : r.weight_sums) w.push_back(to_string(s));
            arr.push_back({{"n", r.n},
                           {"left", r.left},
                           {"right", r.right},
                           {"isos", r.isos},
                           {"integral", r.integral},
                           {"weights", w},
                           {"left_modular", r.left_modular},
                           {"right_modular", r.right_modular}});
        }
        out << arr.dump(2) << '\n';
        return;
    }
    Rows t;
    for (const auto& r : rows) {
        std::vector<std::string> w;
        for (const auto& s : r.weight_sums) w.push_back(to_string(s));
        t.push_back({std::to_string(r.n), r.left, r.right, std::to_string(r.isos), yes(r.integral), join(w, " "),
                     yes(r.left_modular), yes(r.right_modular)});
    }
    emit_table(out, o.format, {"n", "left", "right", "isos", "integral", "weights", "left modular", "right modular"}, t);
}

void cmd_export(const Options& o, int p, int q, const std::string& out_file, const std::string& import_file,
                std::ostream& out) {
    json j;
    if (!import_file.empty()) {
        std::ifstream in(import_file);
        if (!in) throw ValidationError("cannot read " + import_file);
        json src;
        try {
            src = json::parse(in);
        } catch (const json::exception& e) {
            throw ValidationError(std::string("not JSON: ") + e.what());
        }
        j = export_modular_data(import_modular_data(src));
    } else {
        if (p == 0) throw ValidationError("export needs p q or --import FILE");
        j = export_modular_data(*o.cache().category(p, q));
    }
    if (out_file.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw ValidationError("cannot write " + out_file);
    f << j.dump(2) << '\n';
}

}  // namespace

std::string report_section(const MinimalCategory& C, double tol) {
    std::ostringstream out;
    const int p = C.model.p(), q = C.model.q();
    const auto subs = nontrivial(enumerate_subcats(C), C.model.rank());
    std::vector<std::string> names, modular;
    for (const auto& s : subs) {
        names.push_back(s.name);
        if (is_modular(C, s.members, tol).modular) modular.push_back(s.name);
    }
    out << "## " << pair_name(p, q) << "\n\n";
    out << "Nontrivial premodular subcategories: " << subs.size();
    if (!subs.empty()) out << " (" << join(names, ", ") << ")";
    out << ".\nModular: " << (modular.empty() ? std::string("none") : join(modular, ", ")) << ".\n\n";
    if (p <= 4) {
        out << "No join table for p = " << p << ": the row and column patterns degenerate.\n\n";
        return out.str();
    }
    const auto pat = named_patterns(C);
    Rows rows;
    for (const char* a : {"C3", "C4", "C5"}) {
        std::vector<std::string> r{std::string(a)};
        for (const char* b : {"C1", "C2", "C5"})
            r.push_back(classify_named(C, ring_closure(C.ring, set_union(pat.at(a), pat.at(b)))));
        rows.push_back(r);
    }
    emit_table(out, "md", {"join", "C1", "C2", "C5"}, rows);
    out << '\n';
    Rows sizes;
    for (const auto& s : subs)
        sizes.push_back({s.name, std::to_string(s.members.size()), std::to_string(C.data.fsexp(s.members))});
    emit_table(out, "md", {"subcategory", "size", "FSexp"}, sizes);
    out << '\n';
    return out.str();
}

std::string report(int pmin, int pmax, int qmax, const Cache& cache, double tol) {
    std::string doc;
    for (int p = std::max(pmin, 2); p <= pmax; ++p)
        for (int q = p + 1; q <= qmax; ++q)
            if (std::gcd(p, q) == 1) doc += report_section(*cache.category(p, q), tol);
    return doc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Modular data and subcategories of Virasoro minimal models", "virmtc"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    auto* fe = app.add_flag("--exact", "display exact ranks (default)");
    auto* ff = app.add_flag("--float", o.use_float, "display float ranks");
    fe->excludes(ff);
    app.add_option("--tol", o.tol, "float threshold for cross-checks")->check(CLI::PositiveNumber);
    app.add_flag("--no-cache", o.no_cache, "ignore the on-disk cache");

    int p = 0, q = 0, p2 = 0, q2 = 0, nmax = 10, pmin = 2, pmax = 2, qmax = 13;
    std::string n1, n2, dump, out_file, import_file;
    bool verify = false;

    auto pq = [&](CLI::App* s) {
        s->add_option("p", p)->required();
        s->add_option("q", q)->required();
    };
    auto* info = app.add_subcommand("info", "central charge, weights, twists, dimensions");
    pq(info);
    auto* sm = app.add_subcommand("smatrix", "S matrix and its rank");
    pq(sm);
    auto* fu = app.add_subcommand("fusion", "fusion rules");
    pq(fu);
    auto* sc = app.add_subcommand("subcats", "premodular subcategories and modularity");
    pq(sc);
    auto* ex = app.add_subcommand("extension", "simple current extension of C_{p,p+1}");
    ex->add_option("p", p)->required();
    ex->add_option("--dump-ring", dump, "write the resolved fusion ring as JSON");
    ex->add_flag("--verify", verify, "replay the anchored rules");
    auto* gl = app.add_subcommand("glue", "fusion isomorphisms and weight integrality");
    gl->add_option("p1", p)->required();
    gl->add_option("q1", q)->required();
    gl->add_option("name1", n1)->required();
    gl->add_option("p2", p2)->required();
    gl->add_option("q2", q2)->required();
    gl->add_option("name2", n2)->required();
    auto* gs = app.add_subcommand("glue-scan", "C2/C4 gluings along the unitary series");
    gs->add_option("--nmax", nmax, "last n")->check(CLI::Range(3, 40));
    auto* rp = app.add_subcommand("report", "markdown tables for a range of p");
    rp->add_option("pmin", pmin)->required();
    rp->add_option("pmax", pmax)->required();
    rp->add_option("--qmax", qmax, "largest q");
    auto* xp = app.add_subcommand("export", "self-contained modular data file");
    xp->add_option("p", p);
    xp->add_option("q", q);
    xp->add_option("-o,--out", out_file, "output file");
    xp->add_option("--import", import_file, "validate a file and re-export it");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*info) cmd_info(o, p, q, out);
        else if (*sm) cmd_smatrix(o, p, q, out);
        else if (*fu) cmd_fusion(o, p, q, out);
        else if (*sc) cmd_subcats(o, p, q, out);
        else if (*ex) return cmd_extension(o, p, verify, dump, out);
        else if (*gl) cmd_glue(o, p, q, n1, p2, q2, n2, out);
        else if (*gs) cmd_glue_scan(o, nmax, out);
        else if (*rp) out << report(pmin, pmax, qmax, o.cache(), o.tol);
        else if (*xp) cmd_export(o, p, q, out_file, import_file, out);
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace virmtc
