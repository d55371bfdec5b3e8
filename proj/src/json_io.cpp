#include "dynirr/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dynirr::io {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw dynirr::parse_error(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw value_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw value_error("cannot write " + path);
    out << contents;
}

json to_json(const IntPoly1& f) {
    json j;
    j["var"] = f.var();
    json coeffs = json::array();
    for (const Int& c : f.coeffs()) coeffs.push_back(c.to_string());
    j["coeffs"] = coeffs;
    return j;
}

json to_json(const IntPoly2& f) {
    json j;
    j["vars"] = json::array({f.var1(), f.var2()});
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(json::array({json::array({e.i, e.j}), c.to_string()}));
    j["terms"] = terms;
    return j;
}

json to_json(const ModPoly& f, const std::string& var) {
    json j;
    j["p"] = f.modulus();
    j["var"] = var;
    json coeffs = json::array();
    for (std::uint64_t c : f.coeffs()) coeffs.push_back(std::to_string(c));
    j["coeffs"] = coeffs;
    return j;
}

namespace {

Int int_from_json(const json& v) {
    if (!v.is_string()) throw value_error("coefficients must be decimal strings");
    return Int::from_decimal(v.get<std::string>());
}

}  // namespace

IntPoly1 poly1_from_json(const json& j) {
    if (!j.contains("var") || !j.contains("coeffs")) throw value_error("univariate JSON needs var/coeffs");
    std::vector<Int> c;
    for (const auto& v : j.at("coeffs")) c.push_back(int_from_json(v));
    return IntPoly1(j.at("var").get<std::string>(), std::move(c));
}

IntPoly2 poly2_from_json(const json& j) {
    if (!j.contains("vars") || !j.contains("terms")) throw value_error("bivariate JSON needs vars/terms");
    auto vars = j.at("vars");
    if (!vars.is_array() || vars.size() != 2) throw value_error("vars must list two variables");
    Poly2Builder acc(vars[0].get<std::string>(), vars[1].get<std::string>());
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 2)
            throw value_error("each term must be [[i, j], coeff]");
        acc.add(t[0][0].get<unsigned>(), t[0][1].get<unsigned>(), int_from_json(t[1]));
    }
    return acc.take();
}

ModPoly modpoly_from_json(const json& j) {
    if (!j.contains("p")) throw value_error("mod-p JSON needs p");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    std::vector<std::uint64_t> c;
    for (const auto& v : j.at("coeffs")) {
        Int x = int_from_json(v);
        c.push_back(x.mod_ui(p));
    }
    return ModPoly(p, std::move(c));
}

json to_json(const certify::EisensteinCertificate& cert) {
    json j;
    j["kind"] = "eisenstein-certificate";
    j["variant"] = cert.variant;
    j["p"] = cert.p;
    j["poly_digest"] = cert.poly_digest;
    j["poly"] = to_json(cert.poly);
    if (cert.variant == "classic") {
        j["lead_not_div_p"] = cert.lead_not_div_p;
        j["nonleading_div_p"] = cert.nonleading_div_p;
        j["const_not_div_p2"] = cert.const_not_div_p2;
    } else {
        j["base"] = to_json(*cert.base);
        j["exponent"] = cert.exponent ? json(*cert.exponent) : json(nullptr);
        j["power_structure_ok"] = cert.power_structure_ok;
        j["base_irreducible_mod_p"] = cert.base_irreducible_mod_p;
        j["resultant"] = cert.resultant_value ? json(cert.resultant_value->to_string()) : json(nullptr);
        j["resultant_valuation"] =
            cert.resultant_valuation ? json(*cert.resultant_valuation) : json(nullptr);
        j["valuation_bound"] = cert.valuation_bound;
        j["resultant_bound_ok"] = cert.resultant_bound_ok;
    }
    j["verdict"] = certify::verdict_name(cert.verdict);
    j["failed"] = cert.failed;
    return j;
}

certify::EisensteinCertificate eisenstein_from_json(const json& j) {
    if (!j.contains("variant") || !j.contains("poly") || !j.contains("p"))
        throw value_error("certificate JSON needs variant/poly/p");
    std::string variant = j.at("variant").get<std::string>();
    IntPoly1 poly = poly1_from_json(j.at("poly"));
    long p = j.at("p").get<long>();
    if (variant == "classic") return certify::eisenstein_classic(poly, p);
    IntPoly1 base = poly1_from_json(j.at("base"));
    return certify::eisenstein_general(poly, base, p);
}

bool verify_certificate_text(const std::string& text) {
    json j = parse(text);
    if (j.contains("eisenstein")) j = j.at("eisenstein");  // pipeline bundle
    std::string variant = j.at("variant").get<std::string>();
    IntPoly1 poly = poly1_from_json(j.at("poly"));
    long p = j.at("p").get<long>();
    certify::EisensteinCertificate fresh =
        (variant == "classic") ? certify::eisenstein_classic(poly, p)
                               : certify::eisenstein_general(poly, poly1_from_json(j.at("base")), p);
    if (j.at("poly_digest").get<std::uint64_t>() != fresh.poly_digest) return false;
    if (j.at("verdict").get<std::string>() != certify::verdict_name(fresh.verdict)) return false;
    if (variant != "classic") {
        json expected_exp = j.at("exponent");
        if (fresh.exponent && (expected_exp.is_null() || expected_exp.get<long>() != *fresh.exponent))
            return false;
        if (!fresh.exponent && !expected_exp.is_null()) return false;
        json expected_res = j.at("resultant");
        if (fresh.resultant_value &&
            (expected_res.is_null() || expected_res.get<std::string>() != fresh.resultant_value->to_string()))
            return false;
    }
    return true;
}

json to_json(const certify::PipelineCertificate& cert) {
    json j;
    j["kind"] = "pipeline-certificate";
    j["D"] = cert.D;
    j["p"] = cert.p;
    j["e"] = cert.e;
    j["k"] = cert.k;
    j["n"] = cert.n;
    j["d"] = cert.d;
    j["verdict"] = certify::verdict_name(cert.verdict);
    j["detail"] = cert.detail;
    j["base_irreducible"] = cert.base_irreducible;
    j["power_exponent"] = cert.power_exponent;
    j["resultant"] = cert.resultant_value.to_string();
    j["resultant_valuation"] = cert.resultant_valuation ? json(*cert.resultant_valuation) : json(nullptr);
    j["expected_resultant_abs"] = cert.expected_resultant_abs.to_string();
    j["resultant_shape_ok"] = cert.resultant_shape_ok;
    j["seconds"] = cert.seconds;
    if (cert.verdict != certify::Verdict::out_of_hypotheses) j["eisenstein"] = to_json(cert.eisenstein);
    return j;
}

json to_json(const certify::OriginReport& rep) {
    json j;
    j["constant_term"] = rep.constant_term.to_string();
    j["linear"] = json::array({rep.linear_var1.to_string(), rep.linear_var2.to_string()});
    j["vanishes_at_origin"] = rep.vanishes_at_origin;
    j["linear_part_nonzero"] = rep.linear_part_nonzero;
    j["hypotheses_hold"] = rep.hypotheses_hold;
    return j;
}

json to_json(const StructureReport& rep) {
    json checks = json::array();
    for (const auto& item : rep.items) {
        json c;
        c["name"] = item.name;
        c["pass"] = item.pass;
        if (!item.detail.empty()) c["detail"] = item.detail;
        checks.push_back(c);
    }
    json j;
    j["all_pass"] = rep.all_pass();
    j["checks"] = checks;
    return j;
}

json to_json(const uni::ResultantWitness& w) {
    json j;
    j["k"] = w.k;
    j["m"] = w.m;
    j["d"] = w.d;
    j["n"] = w.n;
    j["resultant"] = w.value.to_string();
    j["sign"] = w.value.sign();
    j["diagonal_case"] = w.diagonal_case;
    j["expected_abs"] = w.expected_abs.to_string();
    j["matches"] = w.matches;
    return j;
}

json to_json(const uni::ModpPowerReport& rep) {
    json j;
    j["k"] = rep.k;
    j["n"] = rep.n;
    j["d"] = rep.d ? json(*rep.d) : json("all");
    j["is_power"] = rep.is_power;
    j["exponent"] = rep.exponent;
    j["scalar"] = rep.scalar;
    j["expected_exponent"] = rep.expected_exponent ? json(*rep.expected_exponent) : json(nullptr);
    j["matches"] = rep.matches;
    return j;
}

json to_json(const uni::GleasonReport& rep) {
    json j;
    j["n"] = rep.n;
    j["disc"] = rep.disc.to_string();
    j["residue"] = rep.residue;
    j["ok"] = rep.ok;
    return j;
}

json to_json(const std::vector<uni::SurveyRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["D"] = r.D;
        j["n"] = r.n;
        j["p"] = r.p;
        j["e"] = r.e;
        j["deg_rn"] = r.deg_rn;
        j["degree_divides"] = r.degree_divides;
        j["frobenius_ok"] = r.frobenius_ok;
        j["irreducible"] = r.irreducible;
        j["expected_irreducible"] = r.expected_irreducible;
        j["matches"] = r.matches;
        arr.push_back(j);
    }
    return arr;
}

json to_json(const oracle::FamilyValidation& v) {
    json j;
    j["total"] = v.total;
    j["confirmed"] = v.confirmed;
    j["root_count_ok"] = v.root_count_ok;
    j["roots_converged"] = v.roots_converged;
    j["omega_ok"] = v.omega_ok;
    j["all_confirmed"] = v.all_confirmed();
    json reps = json::array();
    for (const auto& r : v.reports) {
        json rr;
        rr["parameter"] = json::array({r.parameter.real(), r.parameter.imag()});
        rr["observed_preperiod"] = r.observed_preperiod;
        rr["observed_period"] = r.observed_period;
        rr["residual"] = r.residual;
        rr["verdict"] = r.verdict;
        reps.push_back(rr);
    }
    j["reports"] = reps;
    return j;
}

}  // namespace dynirr::io
