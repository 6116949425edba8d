// Command-line surface: computes discriminants through every formulation,
// cross-checks them, and emits / re-verifies sum-of-squares certificates.
// One JSON document per invocation on stdout. Exit codes: 0 success or
// verified, 1 verification failure or route disagreement, 2 usage/input
// error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "discsos/invariants.hpp"
#include "discsos/resultant.hpp"
#include "discsos/sos.hpp"
#include "discsos/sympair.hpp"

using namespace discsos;
using nlohmann::json;

namespace {

json parse_json_arg(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return j;
}

json upoly_to_json(const UPolyQ& p) {
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).str());
    return coeffs;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_disc(const std::string& pair_spec, const std::string& x_text, const std::string& route) {
    PairData pd = build_pair(PairId::parse(pair_spec));
    std::vector<Rational> x = coords_from_json(parse_json_arg(x_text, "--x"));
    if (static_cast<int>(x.size()) != pd.r)
        throw std::invalid_argument("--x: expected " + std::to_string(pd.r) + " coordinates for " + pd.id.str());

    std::map<std::string, DiscRoute> route_names = {
        {"coefff", DiscRoute::CoeffF},
        {"coeffg", DiscRoute::CoeffG},
        {"detg", DiscRoute::DetG},
        {"rootproduct", DiscRoute::RootProduct},
    };
    json routes = json::object();
    bool agree = true;
    if (route == "all") {
        routes["CoeffF"] = discriminant(pd, x, DiscRoute::CoeffF).str();
        routes["CoeffG"] = discriminant(pd, x, DiscRoute::CoeffG).str();
        if (pd.rank_maximal) routes["DetG"] = discriminant(pd, x, DiscRoute::DetG).str();
        if (on_cartan(pd, x)) routes["RootProduct"] = discriminant(pd, x, DiscRoute::RootProduct).str();
        std::string first;
        for (const auto& [name, value] : routes.items()) {
            if (first.empty()) first = value.get<std::string>();
            else if (value.get<std::string>() != first) agree = false;
        }
    } else {
        auto it = route_names.find(route);
        if (it == route_names.end())
            throw std::invalid_argument("--route: expected all|coefff|coeffg|detg|rootproduct");
        const char* label[] = {"CoeffF", "CoeffG", "DetG", "RootProduct"};
        routes[label[static_cast<int>(it->second)]] = discriminant(pd, x, it->second).str();
    }
    json doc;
    doc["pair"] = pd.id.str();
    doc["x"] = coords_to_json(x);
    doc["routes"] = routes;
    doc["agree"] = agree;
    emit(doc);
    return agree ? 0 : 1;
}

int cmd_charpoly(const std::string& pair_spec, const std::string& x_text) {
    PairData pd = build_pair(PairId::parse(pair_spec));
    std::vector<Rational> x = coords_from_json(parse_json_arg(x_text, "--x"));
    if (static_cast<int>(x.size()) != pd.r)
        throw std::invalid_argument("--x: expected " + std::to_string(pd.r) + " coordinates for " + pd.id.str());
    CharPolys cp = charpolys(pd, x);
    bool bridge = charpoly_bridge_holds(pd, cp);
    json doc;
    doc["pair"] = pd.id.str();
    doc["r"] = pd.r;
    doc["s"] = pd.s;
    doc["cf"] = upoly_to_json(cp.cf);
    doc["cf_display"] = cp.cf.str();
    doc["cg"] = upoly_to_json(cp.cg);
    doc["cg_display"] = cp.cg.str();
    doc["bridge_ok"] = bridge; // t^s cf == t^r cg
    emit(doc);
    return bridge ? 0 : 1;
}

int cmd_pair(const std::string& pair_spec) {
    PairData pd = build_pair(PairId::parse(pair_spec));
    json doc;
    doc["pair"] = pd.id.str();
    doc["r"] = pd.r;
    doc["s"] = pd.s;
    doc["l"] = pd.l;
    doc["alpha"] = pd.alpha();
    doc["rank_maximal"] = pd.rank_maximal;
    json roots = json::array();
    for (const auto& root : pd.roots.positive_roots) {
        json jr;
        jr["form"] = root.coeffs;
        jr["display"] = root_str(root);
        jr["multiplicity"] = root.multiplicity;
        roots.push_back(std::move(jr));
    }
    doc["root_datum"] = {
        {"positive_roots", roots},
        {"centralizer_dim", pd.roots.centralizer_dim},
        {"exponents", pd.roots.exponents},
        {"weyl_order", pd.roots.weyl_order},
        {"derived", pd.roots.derived},
    };
    json degrees = json::array();
    for (const auto& g : generators(pd.id)) degrees.push_back(g.degree);
    doc["generator_degrees"] = degrees;
    WeylArithmetic wa = weyl_arithmetic(pd.id);
    doc["weyl"] = {{"order", wa.order}, {"reflections", wa.reflections}};
    emit(doc);
    return 0;
}

int cmd_sos(const std::string& kind, const std::string& matrix_text, const std::string& pair_spec,
            const std::string& x_text, int k, int threads) {
    SosCertificate cert;
    if (kind == "ilyushechkin" || kind == "symmetric-basis") {
        if (matrix_text.empty()) throw std::invalid_argument("--matrix is required for kind " + kind);
        Mat<GaussQ> z = matrix_from_json(parse_json_arg(matrix_text, "--matrix"));
        if (kind == "ilyushechkin") {
            cert = ilyushechkin_certificate(z, threads);
        } else {
            cert = symmetric_basis_certificate(real_part(z), threads);
        }
    } else if (kind == "pk") {
        if (pair_spec.empty() || x_text.empty() || k < 1)
            throw std::invalid_argument("kind pk needs --pair, --x and --k");
        PairData pd = build_pair(PairId::parse(pair_spec));
        std::vector<Rational> x = coords_from_json(parse_json_arg(x_text, "--x"));
        if (static_cast<int>(x.size()) != pd.r)
            throw std::invalid_argument("--x: expected " + std::to_string(pd.r) + " coordinates");
        cert = pk_certificate(pd, x, k);
    } else {
        throw std::invalid_argument("--kind: expected ilyushechkin|symmetric-basis|pk");
    }
    emit(certificate_to_json(cert));
    return 0;
}

int cmd_rudin(int k, int n, int lift_count) {
    SosCertificate cert = rudin_certificate(k, n);
    for (int i = 0; i < lift_count; ++i) cert = lift(cert);
    emit(certificate_to_json(cert));
    return 0;
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("verify: cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("verify: malformed JSON in " + path);
    SosCertificate cert = certificate_from_json(j);
    VerifyResult res = verify_certificate(cert);
    json doc;
    doc["file"] = path;
    doc["kind"] = cert.kind;
    doc["terms"] = cert.terms.size();
    doc["verified"] = res.ok;
    if (!res.ok) doc["reason"] = res.message;
    emit(doc);
    return res.ok ? 0 : 1;
}

int cmd_compare(const std::string& pair_spec, unsigned seed) {
    PairData pd = build_pair(PairId::parse(pair_spec));
    CompareReport rep = compare_D_phi(pd, 5, 5, seed);
    json doc;
    doc["pair"] = pd.id.str();
    doc["rank_maximal"] = rep.rank_maximal;
    doc["ratio"] = rep.constant_ratio ? json(rep.ratio.str()) : json("non-constant");
    doc["phi_on_a"] = rep.phi_on_a;
    doc["D_on_a"] = rep.d_on_a;
    json samples = json::array();
    for (const auto& s : rep.samples) {
        json js;
        js["x"] = coords_to_json(s.coords);
        js["on_cartan"] = s.on_cartan;
        js["D"] = s.D.str();
        js["phi"] = s.phi.str();
        samples.push_back(std::move(js));
    }
    doc["samples"] = samples;
    emit(doc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact discriminants of symmetric pairs and verifiable sum-of-squares certificates"};
    app.require_subcommand(1);

    std::string pair_spec, x_text, route = "all", matrix_text, kind, verify_path;
    int k = 0, n = 0, lift_count = 0, threads = 1;
    unsigned seed = 1;

    auto* disc = app.add_subcommand("disc", "discriminant through one or all routes, cross-checked");
    disc->add_option("--pair", pair_spec, "pair spec: glnr:N | glnc:N | sopq:P,Q")->required();
    disc->add_option("--x", x_text, "JSON array of rational-string coordinates in p_basis")->required();
    disc->add_option("--route", route, "all|coefff|coeffg|detg|rootproduct (default all)");

    auto* cp = app.add_subcommand("charpoly", "characteristic polynomials of f(x) and g(x)");
    cp->add_option("--pair", pair_spec)->required();
    cp->add_option("--x", x_text)->required();

    auto* pair_cmd = app.add_subcommand("pair", "dimensions, root datum and Weyl arithmetic of a pair");
    pair_cmd->add_option("--pair", pair_spec)->required();

    auto* sos = app.add_subcommand("sos", "emit a sum-of-squares certificate as JSON");
    sos->add_option("--kind", kind, "ilyushechkin|symmetric-basis|pk")->required();
    sos->add_option("--matrix", matrix_text, "JSON matrix of rational strings (or [re,im] pairs)");
    sos->add_option("--pair", pair_spec);
    sos->add_option("--x", x_text);
    sos->add_option("--k", k, "minor order for kind pk");
    sos->add_option("--threads", threads, "worker threads for minor enumeration");

    auto* rudin = app.add_subcommand("rudin", "norm-power certificate (x_1^2+...+x_n^2)^k");
    rudin->add_option("--k", k)->required();
    rudin->add_option("--n", n)->required();
    rudin->add_option("--lift", lift_count, "apply the degree-raising lift this many times");

    auto* verify = app.add_subcommand("verify", "re-check a certificate file; exit 0 iff it holds");
    verify->add_option("file", verify_path, "certificate JSON path")->required();

    auto* compare = app.add_subcommand("compare", "D versus phi report for a pair");
    compare->add_option("--pair", pair_spec)->required();
    compare->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (disc->parsed()) return cmd_disc(pair_spec, x_text, route);
        if (cp->parsed()) return cmd_charpoly(pair_spec, x_text);
        if (pair_cmd->parsed()) return cmd_pair(pair_spec);
        if (sos->parsed()) return cmd_sos(kind, matrix_text, pair_spec, x_text, k, threads);
        if (rudin->parsed()) return cmd_rudin(k, n, lift_count);
        if (verify->parsed()) return cmd_verify(verify_path);
        if (compare->parsed()) return cmd_compare(pair_spec, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
