#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgalois/actions.hpp"
#include "qgalois/claims.hpp"
#include "qgalois/errors.hpp"
#include "qgalois/gwa.hpp"
#include "qgalois/lattice.hpp"
#include "qgalois/parser.hpp"
#include "qgalois/qalgebra.hpp"
#include "qgalois/reflgroup.hpp"
#include "qgalois/skewring.hpp"
#include "qgalois/word.hpp"

using namespace qg;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertFailure = 1;
constexpr int kExitUsage = 2;

std::map<std::string, QAlgebraElement> algebra_images(const QAlgebraKind& k) {
    std::map<std::string, QAlgebraElement> im;
    for (int i = 1; i <= k.rank; ++i) {
        im.emplace("x" + std::to_string(i), QAlgebraElement::gen_x(k, i));
        im.emplace("y" + std::to_string(i), QAlgebraElement::gen_y(k, i));
        if (k.rank == 1) {
            im.emplace("x", QAlgebraElement::gen_x(k, 1));
            im.emplace("y", QAlgebraElement::gen_y(k, 1));
        }
        if (k.family == QFamily::Torus) {
            im.emplace("x" + std::to_string(i) + "^-1",
                       QAlgebraElement::gen_x(k, i).invert_monomial());
            im.emplace("y" + std::to_string(i) + "^-1",
                       QAlgebraElement::gen_y(k, i).invert_monomial());
            if (k.rank == 1) {
                im.emplace("x^-1", QAlgebraElement::gen_x(k, 1).invert_monomial());
                im.emplace("y^-1", QAlgebraElement::gen_y(k, 1).invert_monomial());
            }
        }
    }
    return im;
}

QFamily parse_family(const std::string& s) {
    if (s == "affine") return QFamily::AffineSpace;
    if (s == "torus") return QFamily::Torus;
    if (s == "weyl") return QFamily::Weyl;
    throw CLI::ValidationError("--family", "expected affine, torus, or weyl");
}

IntVec parse_vector(const std::string& s) {
    IntVec v;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            v.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) v.push_back(std::stol(cur));
    if (v.empty()) throw ParseError("empty vector");
    return v;
}

ordered_json vec_json(const IntVec& v) {
    ordered_json a = ordered_json::array();
    for (long x : v) a.push_back(x);
    return a;
}

int cmd_verify(const std::vector<std::string>& ids, bool json) {
    std::vector<ClaimOutcome> outcomes;
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
        outcomes = run_all_claims();
    } else {
        for (const auto& id : ids) outcomes.push_back(run_claim(id));
    }
    if (json)
        std::cout << outcomes_to_json(outcomes);
    else
        std::cout << outcomes_to_text(outcomes);
    for (const auto& o : outcomes)
        if (!o.ok) return kExitCertFailure;
    return kExitOk;
}

int cmd_compute(const std::string& family, int rank, bool multiparam,
                const std::string& expr, bool json) {
    QFamily fam = parse_family(family);
    QAlgebraKind k = multiparam ? QAlgebraKind::multiparam(fam, rank)
                                : QAlgebraKind::uniform(fam, rank);
    auto u = eval_word(parse_element(expr), algebra_images(k), QAlgebraElement::one(k));
    if (json) {
        ordered_json out;
        out["family"] = family;
        out["rank"] = rank;
        out["input"] = expr;
        out["normal_form"] = u.str();
        out["is_zero"] = u.is_zero();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << u.str() << "\n";
    }
    return kExitOk;
}

int cmd_invariants(int m, int p, int n, const std::string& family, long degree,
                   long max_group_order, bool json) {
    auto group = close_group(gmpn_generators(m, p, n),
                             static_cast<std::size_t>(max_group_order));
    QAlgebraKind k = QAlgebraKind::uniform(parse_family(family), n);
    auto basis = invariant_basis(group, k, degree);
    if (json) {
        ordered_json out;
        out["group"] = "G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                       std::to_string(n) + ")";
        out["group_order"] = group.size();
        out["degree"] = degree;
        out["dimension"] = basis.size();
        out["basis"] = ordered_json::array();
        for (const auto& v : basis) out["basis"].push_back(v.str());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "group order " << group.size() << ", degree " << degree
                  << ", dimension " << basis.size() << "\n";
        for (const auto& v : basis) std::cout << "  " << v.str() << "\n";
    }
    return kExitOk;
}

int cmd_supp(const std::string& model, int n, const std::string& expr, bool json) {
    ActionPtr a;
    std::map<std::string, SkewElement> im;
    if (model == "affine") {
        a = qscale_action(n, Ambient::Nn);
        for (int i = 1; i <= n; ++i) {
            im.emplace("x" + std::to_string(i),
                       SkewElement::scalar(a, RatFunc::variable("x" + std::to_string(i))));
            im.emplace("y" + std::to_string(i), SkewElement::eps(a, i));
        }
    } else if (model == "weyl") {
        a = qweyl_shift_action(n);
        for (int i = 1; i <= n; ++i) {
            IntVec e(n, 0);
            e[i - 1] = -1;
            im.emplace("x" + std::to_string(i), SkewElement::eps(a, i));
            im.emplace("y" + std::to_string(i),
                       SkewElement::term(a, e, RatFunc::variable("h" + std::to_string(i))));
        }
    } else {
        throw CLI::ValidationError("--model", "expected affine or weyl");
    }
    auto u = eval_word(parse_element(expr), im, SkewElement::one(a));
    auto supp_set = u.supp();
    std::vector<IntVec> supp(supp_set.begin(), supp_set.end());
    bool zn = false, full_rank = false;
    if (!supp.empty()) {
        auto gen = generates_group(supp, n);
        zn = gen.generates;
        full_rank = gen.certificate.full_rank_identity;
    }
    if (json) {
        ordered_json out;
        out["model"] = model;
        out["input"] = expr;
        out["image"] = u.str();
        out["supp"] = ordered_json::array();
        for (const auto& v : supp) out["supp"].push_back(vec_json(v));
        out["generates_Zn"] = zn;
        out["hnf_identity"] = full_rank;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << u.str() << "\n";
        std::cout << "supp:";
        for (const auto& v : supp) {
            std::cout << " (";
            for (size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? "," : "") << v[i];
            std::cout << ")";
        }
        std::cout << "\n";
        std::cout << "generates Z^" << n << ": " << (zn ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_hnf(int n, const std::vector<std::string>& rows, bool monoid, bool json) {
    std::vector<IntVec> vecs;
    for (const auto& r : rows) {
        IntVec v = parse_vector(r);
        if (static_cast<int>(v.size()) != n)
            throw ParseError("vector " + r + " does not have " + std::to_string(n) +
                             " entries");
        vecs.push_back(v);
    }
    auto cert = hermite_normal_form(vecs, n);
    auto group = generates_group(vecs, n);
    bool mono = monoid && generates_monoid(vecs, n);
    if (json) {
        ordered_json out;
        out["hnf"] = ordered_json::array();
        for (const auto& r : cert.hnf) out["hnf"].push_back(vec_json(r));
        out["transform"] = ordered_json::array();
        for (const auto& r : cert.transform) out["transform"].push_back(vec_json(r));
        out["generates_group"] = group.generates;
        if (monoid) out["generates_monoid"] = mono;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "hnf:\n";
        for (const auto& r : cert.hnf) {
            std::cout << " ";
            for (long x : r) std::cout << " " << x;
            std::cout << "\n";
        }
        std::cout << "generates Z^" << n << ": " << (group.generates ? "yes" : "no")
                  << "\n";
        if (monoid)
            std::cout << "generates N^" << n << ": " << (mono ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_catalog(bool json) {
    if (json) {
        ordered_json out;
        out["gwa_instances"] = ordered_json::array();
        for (const char* name : {"quantum-weyl-a1", "quantum-sphere", "qso3", "usl2"}) {
            GwaInstance inst = gwa_instance(name);
            ordered_json j;
            j["name"] = name;
            j["rank"] = inst.data->rank();
            j["base_vars"] = inst.data->base_vars();
            j["generators"] = inst.generators;
            j["relations"] = inst.relations;
            out["gwa_instances"].push_back(j);
        }
        out["claims"] = ordered_json::array();
        for (const auto& c : claim_registry()) {
            ordered_json j;
            j["id"] = c.id;
            j["expect"] = c.expect_pass ? "pass" : "fail";
            j["description"] = c.description;
            out["claims"].push_back(j);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "generalized Weyl algebra instances:\n";
        for (const char* name : {"quantum-weyl-a1", "quantum-sphere", "qso3", "usl2"}) {
            GwaInstance inst = gwa_instance(name);
            std::cout << "  " << name << " (rank " << inst.data->rank() << ", base";
            for (const auto& v : inst.data->base_vars()) std::cout << " " << v;
            std::cout << ")\n";
            for (const auto& r : inst.relations) std::cout << "      " << r << "\n";
        }
        std::cout << "claims:\n";
        for (const auto& c : claim_registry())
            std::cout << "  " << c.id << " [" << (c.expect_pass ? "pass" : "fail")
                      << "]\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for quantum algebras, skew monoid rings, and "
                 "their invariant theory"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    auto* verify = app.add_subcommand("verify", "run claim certificates");
    std::vector<std::string> ids;
    verify->add_option("ids", ids, "claim ids, or 'all' (default)");

    auto* compute = app.add_subcommand("compute", "normal form of an expression");
    std::string family = "affine", expr;
    int rank = 1;
    bool multiparam = false;
    compute->add_option("--family", family, "affine, torus, or weyl")
        ->capture_default_str();
    compute->add_option("--rank", rank, "number of generator pairs")
        ->capture_default_str();
    compute->add_flag("--multiparam", multiparam, "independent parameters q1..qn");
    compute->add_option("expr", expr, "expression in x<i>, y<i>")->required();

    auto* invariants = app.add_subcommand("invariants",
                                          "basis of degree-d reflection group invariants");
    int gm = 2, gp = 1, gn = 1;
    long degree = 2, max_group_order = 100000;
    std::string inv_family = "affine";
    invariants->add_option("--m", gm, "root of unity order")->capture_default_str();
    invariants->add_option("--p", gp, "divisor of m")->capture_default_str();
    invariants->add_option("--n", gn, "rank")->capture_default_str();
    invariants->add_option("--family", inv_family, "affine or torus")
        ->capture_default_str();
    invariants->add_option("--degree", degree, "total degree")->capture_default_str();
    invariants->add_option("--max-group-order", max_group_order,
                           "abort if the group closure exceeds this size")
        ->capture_default_str();

    auto* supp = app.add_subcommand("supp", "support of an element in the skew ring");
    std::string model = "weyl", supp_expr;
    int supp_n = 1;
    supp->add_option("--model", model, "affine (x->scalar, y->eps) or weyl (embedding)")
        ->capture_default_str();
    supp->add_option("--n", supp_n, "rank")->capture_default_str();
    supp->add_option("expr", supp_expr, "expression in x<i>, y<i>")->required();

    auto* hnf = app.add_subcommand("hnf", "Hermite normal form of integer vectors");
    int hnf_n = 1;
    bool monoid = false;
    std::vector<std::string> rows;
    hnf->add_option("--n", hnf_n, "dimension")->required();
    hnf->add_flag("--monoid", monoid, "also decide generation of N^n");
    hnf->add_option("rows", rows, "vectors like 1,0 0,1")->required();

    app.add_subcommand("catalog", "list algebra instances and claims");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(ids, json);
        if (compute->parsed()) return cmd_compute(family, rank, multiparam, expr, json);
        if (invariants->parsed())
            return cmd_invariants(gm, gp, gn, inv_family, degree, max_group_order, json);
        if (supp->parsed()) return cmd_supp(model, supp_n, supp_expr, json);
        if (hnf->parsed()) return cmd_hnf(hnf_n, rows, monoid, json);
        return cmd_catalog(json);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownClaim& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertFailure;
    }
}
