#include "maxdet/report.hpp"

#include <cmath>
#include <sstream>

namespace maxdet {

namespace {

// R = exp(ln_r) is always representable; D is not once n is large.
json entry_json(const BoundEntry& e, int n) {
    json j;
    j["name"] = e.name;
    j["n"] = n;
    j["ln_D"] = e.ln_d;
    j["ln_R"] = e.ln_r;
    j["R"] = std::exp(e.ln_r);
    j["source"] = e.source;
    return j;
}

}  // namespace

json registry_json(const OrderRegistry& reg) {
    json j;
    j["cap"] = reg.cap();
    j["mode"] = to_string(reg.mode());
    j["orders"] = json::array();
    for (int n : reg.orders()) {
        json o;
        o["order"] = n;
        o["tag"] = reg.realization(n).tag();
        j["orders"].push_back(std::move(o));
    }
    return j;
}

json bound_report_json(const BoundReport& rep) {
    json j;
    j["n"] = rep.n;
    j["delta"] = rep.delta_used;
    j["mode"] = to_string(rep.mode);
    j["entries"] = json::array();
    for (const BoundEntry& e : rep.entries)
        j["entries"].push_back(entry_json(e, rep.n));
    json u;
    u["hadamard_ln_D"] = rep.upper.hadamard;
    if (rep.upper.barba) u["barba_ln_D"] = *rep.upper.barba;
    j["upper"] = std::move(u);
    return j;
}

std::string bound_report_csv(const BoundReport& rep) {
    std::ostringstream out;
    out << "name,n,ln_D,ln_R,R,source\n";
    out.precision(12);
    for (const BoundEntry& e : rep.entries)
        out << e.name << ',' << rep.n << ',' << e.ln_d << ',' << e.ln_r << ','
            << std::exp(e.ln_r) << ',' << '"' << e.source << '"' << '\n';
    out << "hadamard-upper," << rep.n << ',' << rep.upper.hadamard << ",0,1,"
        << "\"Hadamard bound\"\n";
    if (rep.upper.barba)
        out << "barba-upper," << rep.n << ',' << *rep.upper.barba << ','
            << (*rep.upper.barba - rep.upper.hadamard) << ','
            << std::exp(*rep.upper.barba - rep.upper.hadamard)
            << ",\"Barba bound\"\n";
    return out.str();
}

json certificate_json(const WitnessCertificate& cert,
                      const std::string& matrix_file) {
    json j;
    j["n"] = cert.n;
    j["det_abs"] = cert.det_abs.get_str();
    j["ln_det"] = cert.ln_det;
    j["ln_R"] =
        cert.ln_det - 0.5 * cert.n * std::log(static_cast<double>(cert.n));
    j["claimed_bound"] = cert.claimed_bound;
    json c;
    switch (cert.construction.kind) {
        case Construction::Kind::minor: c["type"] = "minor"; break;
        case Construction::Kind::major: c["type"] = "major"; break;
        case Construction::Kind::excess_border:
            c["type"] = "excess-border";
            break;
        case Construction::Kind::double_border:
            c["type"] = "double-border";
            break;
        case Construction::Kind::sylvester_double:
            c["type"] = "sylvester-double";
            break;
        case Construction::Kind::hadamard: c["type"] = "hadamard"; break;
        case Construction::Kind::loaded: c["type"] = "loaded"; break;
    }
    c["h"] = cert.construction.h;
    if (!cert.construction.rows.empty()) {
        c["rows"] = cert.construction.rows;
        c["cols"] = cert.construction.cols;
    }
    j["construction"] = std::move(c);
    if (cert.sigma_achieved) j["sigma_achieved"] = cert.sigma_achieved->get_str();
    j["verified"] = cert.verified;
    if (!matrix_file.empty())
        j["matrix_file"] = matrix_file;
    else
        j["matrix_text"] = to_text(cert.matrix);
    return j;
}

WitnessCertificate certificate_from_json(const json& j,
                                         const std::string& matrix_text) {
    WitnessCertificate cert;
    try {
        cert.n = j.at("n").get<int>();
        cert.det_abs = ExactInt(j.at("det_abs").get<std::string>());
        cert.ln_det = j.at("ln_det").get<double>();
        cert.claimed_bound = j.at("claimed_bound").get<double>();
        const json& c = j.at("construction");
        cert.construction.kind =
            parse_construction_kind(c.at("type").get<std::string>());
        cert.construction.h = c.at("h").get<int>();
        if (c.contains("rows")) {
            cert.construction.rows = c.at("rows").get<std::vector<int>>();
            cert.construction.cols = c.at("cols").get<std::vector<int>>();
        }
        if (j.contains("sigma_achieved"))
            cert.sigma_achieved =
                ExactInt(j.at("sigma_achieved").get<std::string>());
        cert.verified = j.at("verified").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad certificate JSON: ") + e.what());
    }
    cert.matrix = parse_sign_matrix(matrix_text);
    if (cert.matrix.order() != cert.n)
        throw parse_error("certificate order does not match its matrix");
    return cert;
}

}  // namespace maxdet
