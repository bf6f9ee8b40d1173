// Command-line front end: towers, class numbers, q-series checks, 5-adic
// orbits, the p_d/t_d family, and the aggregated verification run.
#include <rr5/family.hpp>
#include <rr5/identities.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace rr5;
using nlohmann::json;

namespace {

// exit codes: 0 pass, 1 check failure, 2 usage, 3 resource/precision
constexpr int EXIT_CHECK = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_RESOURCE = 3;

struct Report {
    std::string command;
    json inputs = json::object();
    json checks = json::array();
    json timings = json::object();
    json hashes = json::object();
    bool all_pass = true;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
        if (!pass) all_pass = false;
    }
    json dump() const {
        return {{"command", command}, {"inputs", inputs},   {"checks", checks},
                {"timings_ms", timings}, {"artifact_hashes", hashes},
                {"pass", all_pass}};
    }
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void write_output(const std::string& path, const json& j, Report& rep) {
    std::string text = j.dump(1) + "\n";
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw resource_error("cannot write " + path);
    out << text;
    char buf[20];
    snprintf(buf, sizeof buf, "%016llx",
             static_cast<unsigned long long>(fnv1a(text)));
    rep.hashes[path] = buf;
}

class Timer {
  public:
    explicit Timer(Report& r, std::string key) : rep_(r), key_(std::move(key)) {
        t0_ = std::chrono::steady_clock::now();
    }
    ~Timer() {
        auto dt = std::chrono::steady_clock::now() - t0_;
        rep_.timings[key_] =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

  private:
    Report& rep_;
    std::string key_;
    std::chrono::steady_clock::time_point t0_;
};

// "(re+imi)/den", e.g. "(-7+1i)/5"
Complex parse_tau(const std::string& s, mpfr_prec_t prec) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    size_t p = 0;
    auto read_int = [&]() -> long {
        size_t start = p;
        if (p < t.size() && (t[p] == '+' || t[p] == '-')) ++p;
        while (p < t.size() && isdigit(static_cast<unsigned char>(t[p]))) ++p;
        if (p == start) throw std::domain_error("bad tau syntax: " + s);
        return std::stol(t.substr(start, p - start));
    };
    bool paren = p < t.size() && t[p] == '(';
    if (paren) ++p;
    long re = read_int();
    long im = read_int();
    if (p >= t.size() || t[p] != 'i') throw std::domain_error("bad tau syntax: " + s);
    ++p;
    if (paren) {
        if (p >= t.size() || t[p] != ')') throw std::domain_error("bad tau syntax: " + s);
        ++p;
    }
    long den = 1;
    if (p < t.size() && t[p] == '/') {
        ++p;
        den = read_int();
    }
    if (p != t.size()) throw std::domain_error("bad tau syntax: " + s);
    Rat rr(re, den), ri(im, den);
    rr.canonicalize();
    ri.canonicalize();
    return {Real::of_rat(rr, prec), Real::of_rat(ri, prec)};
}

json orbit_to_json(const UnramCtx& cx, const Orbit& o) {
    json j;
    j["n"] = cx.n;
    j["period"] = o.period;
    j["ramified"] = o.ramified;
    json res = json::array();
    for (const FpVec& r : o.residues) {
        std::string s;
        bool first = true;
        for (size_t i = 0; i < r.size(); ++i) {
            if (!r[i]) continue;
            if (!first) s += "+";
            s += std::to_string(r[i]);
            if (i) s += "*w^" + std::to_string(i);
            first = false;
        }
        res.push_back(first ? "0" : s);
    }
    j["residues"] = std::move(res);
    auto digits = [&](const PadicU& u) {
        json all = json::array();
        for (const Int& coeff : u.c) {
            json dig = json::array();
            Int v = coeff;
            for (int k = 0; k < cx.m; ++k) {
                dig.push_back(static_cast<int>(mod_u64(v, 5)));
                v /= 5;
            }
            all.push_back(std::move(dig));
        }
        return all;
    };
    json pts = json::array();
    for (const PadicR& p : o.points) pts.push_back({digits(p.a), digits(p.b)});
    j["points"] = std::move(pts);
    return j;
}

int finish(const Report& rep, bool as_json) {
    if (as_json) std::cout << rep.dump().dump(1) << "\n";
    return rep.all_pass ? 0 : EXIT_CHECK;
}

void run_verify_all(Report& rep, Store& store, bool quick) {
    FamilyConfig cfg;
    cfg.prec = quick ? 20 : 40;
    {
        Timer t(rep, "identities");
        IdentityReport ir = verify_identity_suite();
        for (auto& [name, ok] : ir.checks) rep.check("identity: " + name, ok);
    }
    {
        Timer t(rep, "towers");
        int nmax = quick ? 2 : 3;
        for (int n = 1; n <= nmax; ++n) {
            TowerPoly r = tower_cached(TowerKind::R, n, cfg.caps, &store);
            TowerPoly s = tower_cached(TowerKind::S, n, cfg.caps, &store);
            long expect = 2 * static_cast<long>(pow_ui(5, n).get_ui()) - 1;
            rep.check("deg R_" + std::to_string(n), r.degree() == expect);
            rep.check("deg S_" + std::to_string(n), s.degree() == expect);
            rep.check("congruence R_" + std::to_string(n), congruence_check(r));
            rep.check("congruence S_" + std::to_string(n), congruence_check(s));
        }
        rep.check("deg P_2 = 40", tower_cached(TowerKind::P, 2, cfg.caps, &store).degree() == 40);
        rep.check("deg Q_2 = 40", tower_cached(TowerKind::Q, 2, cfg.caps, &store).degree() == 40);
        if (!quick)
            rep.check("deg tildeR_3 = 250",
                      tower_cached(TowerKind::Rtilde, 3, cfg.caps, &store).degree() == 250);
    }
    {
        Timer t(rep, "resultant_examples");
        PdRecord p4 = seed_record(4);
        PdRecord p36 = gen_pd(GenRel::p3, p4, cfg, &store);
        rep.check("p36 via Res(P3, p4)", p36.d == 36 && p36.poly.degree() == 8);
        if (!quick) {
            PdRecord p144 = gen_pd(GenRel::p2, p36, cfg, &store);
            rep.check("p144 via Res(P2, p36)", p144.poly.degree() == 16);
            PdRecord p196 = gen_pd(GenRel::p7, p4, cfg, &store);
            rep.check("p196 via Res(P7, p4)", p196.poly.degree() == 16);
        }
    }
    {
        Timer t(rep, "qseries");
        long ord = quick ? 50 : 100;
        for (auto [rel, name] : {std::pair{Relation::g5, "g5"}, {Relation::p2, "p2"},
                                 {Relation::p3, "p3"}, {Relation::frakr, "frakr"}}) {
            RelationResult r = verify_relation(rel, ord);
            rep.check(std::string("relation ") + name, r.ok);
        }
        RelationResult p7 = verify_relation(Relation::p7, quick ? 50 : 250);
        rep.check("relation p7", p7.ok);
        long w = 5 * (quick ? 50 : 200);
        rep.check("product = continued fraction",
                  rr_product(w).c == rr_cfrac(w).c);
    }
    {
        Timer t(rep, "padic");
        UnramCtx c2(2, 20);
        auto orbits = periodic_points(c2);
        long per2 = 0;
        for (auto& o : orbits)
            if (o.period == 2) ++per2;
        rep.check("census n=2: 10 orbits", per2 == 10);
        if (!quick) {
            UnramCtx c3(3, 20);
            long per3 = 0;
            for (auto& o : periodic_points(c3))
                if (o.period == 3) ++per3;
            rep.check("census n=3: 40 orbits", per3 == 40);
        }
        UnramCtx c1(1, 20);
        PadicR i5 = periodic_point_at(c1, 3);
        rep.check("t5 fixes the 5-adic i", t5(i5) == i5);
        rep.check("j(i) = 1728", j_eta(i5) == PadicR::of_u(PadicU::of_int(c1, 1728)));
    }
    {
        Timer t(rep, "family");
        ReconstructionResult r1 = reconstruct_pd(1, cfg, &store);
        rep.check("n=1 reconstruction -> p4, p19",
                  r1.records.size() == 2 && r1.records[0].d == 4 &&
                      r1.records[1].d == 19);
        if (!quick) {
            ClassSum p2 = class_sum_check(2, 'P', cfg, &store);
            rep.check("class sum (2,P) = 10", p2.ok && p2.sum == 10);
            ClassSum q2 = class_sum_check(2, 'Q', cfg, &store);
            rep.check("class sum (2,Q) = 20", q2.ok && q2.sum == 20);
        }
    }
    {
        Timer t(rep, "cm_numeric");
        long bits = 128;
        Complex tau = parse_tau("(-7+1i)/5", bits + 64);
        Complex v = r_numeric(tau, bits);
        rep.check("|p4(r((-7+i)/5))| < 2^-64",
                  poly_abs_at(seeds::p4(), v).log2_abs() < -64);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the degree-5 modular equation family"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::string store_path = "store";
    app.add_flag("--json", as_json, "emit a machine-readable report");
    app.add_option("--store", store_path, "store directory (env RR5_STORE overrides)");

    // tower build
    auto* tower = app.add_subcommand("tower", "iterated-resultant towers");
    auto* tbuild = tower->add_subcommand("build", "build a tower polynomial");
    std::string tkind = "R";
    int tn = 1;
    std::string tout;
    tbuild->add_option("--kind", tkind, "R | S | Rtilde | P | Q")->required();
    tbuild->add_option("--n", tn, "tower index")->required();
    tbuild->add_option("--out", tout, "output JSON file");

    // class
    auto* cls = app.add_subcommand("class", "imaginary quadratic class data");
    auto* ch = cls->add_subcommand("h", "class number");
    long cd = 0;
    ch->add_option("--d", cd, "positive d with discriminant -d")->required();
    auto* chil = cls->add_subcommand("hilbert", "Hilbert class polynomial");
    long hd = 0;
    std::string hout;
    chil->add_option("--d", hd)->required();
    chil->add_option("--out", hout);
    auto* cwd = cls->add_subcommand("wd", "smallest valid w_d argument");
    long wd = 0;
    cwd->add_option("--d", wd)->required();

    // q
    auto* qc = app.add_subcommand("q", "q-series checks");
    auto* qverify = qc->add_subcommand("verify", "verify a modular relation");
    std::string qrel = "g5";
    long qorder = 100;
    qverify->add_option("--rel", qrel, "g5 | p2 | p3 | p7 | frakr")->required();
    qverify->add_option("--order", qorder, "q-order to verify through");
    auto* qrr = qc->add_subcommand("rr", "Rogers-Ramanujan expansion");
    long rrorder = 100;
    std::string rrout;
    qrr->add_option("--order", rrorder, "order in fifths of a q-power");
    qrr->add_option("--out", rrout);
    auto* qeval = qc->add_subcommand("eval", "numeric r(tau)");
    std::string qtau;
    long qbits = 128;
    qeval->add_option("--tau", qtau, "(a+bi)/c in the upper half plane")->required();
    qeval->add_option("--bits", qbits);

    // padic
    auto* pad = app.add_subcommand("padic", "5-adic dynamics");
    auto* porb = pad->add_subcommand("orbits", "periodic orbits");
    int pn = 2, pprec = 40;
    porb->add_option("--n", pn, "unramified degree")->required();
    porb->add_option("--prec", pprec, "precision in base-5 digits");

    // family
    auto* fam = app.add_subcommand("family", "class-invariant polynomials");
    auto* frec = fam->add_subcommand("reconstruct", "factor P_n 5-adically");
    int fn = 2, fprec = 40;
    frec->add_option("--n", fn)->required();
    frec->add_option("--prec", fprec);
    auto* fgen = fam->add_subcommand("gen", "generate p_{kd} from p_d");
    std::string frel = "p3";
    long ffrom = 4;
    fgen->add_option("--rel", frel, "p2 | p3 | p7")->required();
    fgen->add_option("--from", ffrom, "source discriminant d")->required();
    auto* fdisc = fam->add_subcommand("disc", "q-adic valuation of disc(p_d)");
    long fd = 0, fq = 0;
    fdisc->add_option("--d", fd)->required();
    fdisc->add_option("--q", fq)->required();
    auto* fsum = fam->add_subcommand("classsum", "class-number sum check");
    int sn = 2;
    std::string sside = "P";
    fsum->add_option("--n", sn)->required();
    fsum->add_option("--side", sside, "P | Q")->required();

    // verify-all
    auto* vall = app.add_subcommand("verify-all", "run the aggregated checks");
    bool quick = false;
    vall->add_flag("--quick", quick, "identity suite, n <= 2 towers, order-50 series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_USAGE;
    }

    Report rep;
    Store store = Store::from_env_or(store_path);
    FamilyConfig cfg;

    try {
        if (tbuild->parsed()) {
            rep.command = "tower build";
            rep.inputs = {{"kind", tkind}, {"n", tn}};
            Timer t(rep, "build");
            TowerKind k;
            if (tkind == "R") k = TowerKind::R;
            else if (tkind == "S") k = TowerKind::S;
            else if (tkind == "Rtilde") k = TowerKind::Rtilde;
            else if (tkind == "P") k = TowerKind::P;
            else if (tkind == "Q") k = TowerKind::Q;
            else throw CLI::ValidationError("--kind", "unknown tower kind");
            TowerPoly tp = tower_cached(k, tn, cfg.caps, &store);
            json out = poly_to_json(tp.poly);
            out["provenance"] = tp.provenance;
            out["kind"] = tower_kind_name(k);
            out["n"] = tn;
            if (!tout.empty())
                write_output(tout, out, rep);
            else if (!as_json)
                std::cout << out.dump(1) << "\n";
            rep.check("degree", tp.degree() >= 0,
                      "deg = " + std::to_string(tp.degree()));
        } else if (ch->parsed()) {
            rep.command = "class h";
            rep.inputs = {{"d", cd}};
            ClassData c = class_number(cd);
            json forms = json::array();
            for (const QForm& f : c.forms)
                forms.push_back({f.a.get_str(), f.b.get_str(), f.c.get_str()});
            json out = {{"d", cd}, {"h", c.h}, {"d_K", c.d_K.get_str()},
                        {"f", c.f.get_str()}, {"kronecker_5", c.kronecker5},
                        {"forms", forms}};
            std::cout << (as_json ? out.dump(1) : "h(-" + std::to_string(cd) +
                                                      ") = " + std::to_string(c.h))
                      << "\n";
            return 0;
        } else if (chil->parsed()) {
            rep.command = "class hilbert";
            rep.inputs = {{"d", hd}};
            Timer t(rep, "hilbert");
            UniPoly<Int> H = hilbert_cached(hd, &store);
            json out = poly_to_json(H, "X");
            out["d"] = hd;
            out["h"] = H.degree();
            if (!hout.empty())
                write_output(hout, out, rep);
            else
                std::cout << out.dump(1) << "\n";
        } else if (cwd->parsed()) {
            rep.command = "class wd";
            ImagQuadElem w = find_wd(wd);
            json out = {{"d", wd}, {"w", w.str()}, {"norm", w.norm().get_str()}};
            std::cout << out.dump(1) << "\n";
            return 0;
        } else if (qverify->parsed()) {
            rep.command = "q verify";
            rep.inputs = {{"rel", qrel}, {"order", qorder}};
            Timer t(rep, "verify");
            Relation rel;
            if (qrel == "g5") rel = Relation::g5;
            else if (qrel == "p2") rel = Relation::p2;
            else if (qrel == "p3") rel = Relation::p3;
            else if (qrel == "p7") rel = Relation::p7;
            else if (qrel == "frakr") rel = Relation::frakr;
            else throw CLI::ValidationError("--rel", "unknown relation");
            RelationResult r = verify_relation(rel, qorder);
            std::string detail =
                r.ok ? "vanishes through q^" + std::to_string(qorder)
                     : "first nonzero exponent " +
                           std::to_string(*r.first_nonzero_fifths) + "/5";
            rep.check("relation " + qrel, r.ok, detail);
            if (!as_json) std::cout << detail << "\n";
        } else if (qrr->parsed()) {
            rep.command = "q rr";
            PuiseuxSeries s = rr_product(rrorder);
            PuiseuxSeries f = rr_cfrac(rrorder);
            rep.check("product = continued fraction", s.c == f.c);
            json out = series_to_json(s);
            if (!rrout.empty())
                write_output(rrout, out, rep);
            else if (!as_json)
                std::cout << out.dump(1) << "\n";
        } else if (qeval->parsed()) {
            rep.command = "q eval";
            rep.inputs = {{"tau", qtau}, {"bits", qbits}};
            Complex tau = parse_tau(qtau, qbits + 64);
            Complex v = r_numeric(tau, qbits);
            std::cout << "r(tau) ~ " << v.re.to_double() << " + "
                      << v.im.to_double() << " i\n";
            return 0;
        } else if (porb->parsed()) {
            rep.command = "padic orbits";
            rep.inputs = {{"n", pn}, {"prec", pprec}};
            Timer t(rep, "orbits");
            UnramCtx cx(pn, pprec);
            json out = json::array();
            for (const Orbit& o : periodic_points(cx)) out.push_back(orbit_to_json(cx, o));
            std::cout << out.dump(1) << "\n";
            return 0;
        } else if (frec->parsed()) {
            rep.command = "family reconstruct";
            rep.inputs = {{"n", fn}, {"prec", fprec}};
            Timer t(rep, "reconstruct");
            cfg.prec = fprec;
            ReconstructionResult r = reconstruct_pd(fn, cfg, &store);
            json out = json::array();
            Int hsum = 0;
            for (const PdRecord& rec : r.records) {
                out.push_back(pd_to_json(rec));
                hsum += rec.h;
            }
            rep.check("reconstruction complete", true,
                      "records = " + std::to_string(r.records.size()) +
                          ", sum h = " + hsum.get_str());
            if (!as_json) std::cout << out.dump(1) << "\n";
        } else if (fgen->parsed()) {
            rep.command = "family gen";
            rep.inputs = {{"rel", frel}, {"from", ffrom}};
            Timer t(rep, "gen");
            GenRel rel;
            if (frel == "p2") rel = GenRel::p2;
            else if (frel == "p3") rel = GenRel::p3;
            else if (frel == "p7") rel = GenRel::p7;
            else throw CLI::ValidationError("--rel", "unknown relation");
            PdRecord src = obtain_pd(ffrom, cfg, &store);
            PdRecord out = gen_pd(rel, src, cfg, &store);
            rep.check("generated p_" + out.d.get_str(), true,
                      "degree " + std::to_string(out.poly.degree()));
            if (!as_json) std::cout << pd_to_json(out).dump(1) << "\n";
        } else if (fdisc->parsed()) {
            rep.command = "family disc";
            rep.inputs = {{"d", fd}, {"q", fq}};
            Timer t(rep, "disc");
            PdRecord p = obtain_pd(fd, cfg, &store);
            long v = disc_power_check(p, fq);
            std::cout << v << "\n";
            rep.check("valuation computed", true,
                      "v_" + std::to_string(fq) + "(disc p_" + std::to_string(fd) +
                          ") = " + std::to_string(v));
        } else if (fsum->parsed()) {
            rep.command = "family classsum";
            rep.inputs = {{"n", sn}, {"side", sside}};
            Timer t(rep, "classsum");
            ClassSum c = class_sum_check(sn, sside.at(0), cfg, &store);
            rep.check("class sum", c.ok,
                      "sum = " + c.sum.get_str() + ", target = " + c.target.get_str());
            if (!as_json)
                std::cout << "sum = " << c.sum.get_str()
                          << ", target = " << c.target.get_str()
                          << (c.ok ? " [ok]" : " [FAIL]") << "\n";
        } else if (vall->parsed()) {
            rep.command = "verify-all";
            rep.inputs = {{"quick", quick}};
            run_verify_all(rep, store, quick);
            if (!as_json)
                for (const auto& c : rep.checks)
                    std::cout << (c["pass"].get<bool>() ? "[pass] " : "[FAIL] ")
                              << c["name"].get<std::string>() << "\n";
        }
    } catch (const CLI::ValidationError&) {
        return EXIT_USAGE;
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return EXIT_RESOURCE;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return EXIT_RESOURCE;
    } catch (const std::exception& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return EXIT_CHECK;
    }
    return finish(rep, as_json);
}
