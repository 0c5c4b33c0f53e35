#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/oracle.hpp"
#include "maxdet/report.hpp"
#include "maxdet/selftest.hpp"
#include "maxdet/witnesses.hpp"

namespace {

namespace fs = std::filesystem;
using namespace maxdet;

// Resolve a file name against the cwd, then MAXDET_DATA_DIR.
std::string resolve_data_file(const std::string& name) {
    if (fs::exists(name)) return name;
    if (const char* dir = std::getenv("MAXDET_DATA_DIR")) {
        const fs::path p = fs::path(dir) / name;
        if (fs::exists(p)) return p.string();
    }
    return name;  // let the open fail with the original name
}

void load_references_from_data_dir() {
    if (const char* dir = std::getenv("MAXDET_DATA_DIR")) {
        const fs::path p = fs::path(dir) / "reference_d.csv";
        if (fs::exists(p)) load_reference_csv(p.string());
    }
}

OrderRegistry make_registry(int cap, const std::string& mode,
                            const std::vector<std::string>& load_files) {
    OrderRegistry reg = OrderRegistry::build(cap, parse_mode(mode));
    for (const std::string& f : load_files)
        reg.load_matrix(resolve_data_file(f));
    return reg;
}

struct TableRow {
    int n = 0;
    BoundReport report;
    std::optional<WitnessCertificate> witness;
    std::optional<ExactInt> reference;
};

double entry_r(const BoundReport& rep, const std::string& name) {
    for (const auto& e : rep.entries)
        if (e.name == name) return std::exp(e.ln_r);
    return std::nan("");
}

void print_table(std::ostream& out, const std::vector<TableRow>& rows) {
    out << "n,delta,unconditional_R,conditional_R,kms_R,ll_R,cl_R,"
           "barba_R,witness_det,witness_R,reference_D,reference_R\n";
    out.precision(6);
    for (const TableRow& row : rows) {
        const double upper = row.report.upper.hadamard;
        out << row.n << ',' << row.report.delta_used << ','
            << entry_r(row.report, "unconditional") << ','
            << entry_r(row.report, "conditional") << ','
            << entry_r(row.report, "kms") << ','
            << entry_r(row.report, "de-launey-levin") << ','
            << entry_r(row.report, "clements-lindstrom") << ',';
        if (row.report.upper.barba)
            out << std::exp(*row.report.upper.barba - upper);
        out << ',';
        if (row.witness)
            out << row.witness->det_abs.get_str() << ','
                << std::exp(row.witness->ln_det - upper) << ',';
        else
            out << ",,";
        if (row.reference)
            out << row.reference->get_str() << ','
                << std::exp(ln_exact(*row.reference) - upper);
        else
            out << ',';
        out << '\n';
    }
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open '" << path << "'\n";
        return 2;
    }
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << "\n";
        return 2;
    }
    std::string matrix_text;
    if (j.contains("matrix_file")) {
        const fs::path mp =
            fs::path(path).parent_path() / j["matrix_file"].get<std::string>();
        std::ifstream min(mp);
        if (!min) {
            std::cerr << "cannot open matrix file '" << mp.string() << "'\n";
            return 2;
        }
        std::stringstream buf;
        buf << min.rdbuf();
        matrix_text = buf.str();
    } else if (j.contains("matrix_text")) {
        matrix_text = j["matrix_text"].get<std::string>();
    } else {
        std::cerr << "certificate carries no matrix\n";
        return 2;
    }
    const WitnessCertificate cert = certificate_from_json(j, matrix_text);
    bool ok = reverify(cert);
    if (ok && cert.construction.kind == Construction::Kind::minor) {
        // Replay the source Hadamard matrix and recheck the exact
        // complementary-minor identity on the recorded split.
        const int h = cert.construction.h;
        const OrderRegistry reg =
            OrderRegistry::build(h, RegistryMode::constructive);
        if (reg.contains(h)) {
            const SignMatrix hm = *reg.materialize(h);
            ok = verify_block_identity(hm, cert.construction.rows,
                                       cert.construction.cols);
            if (ok) {
                const Split split = complementary_split(
                    hm, cert.construction.rows, cert.construction.cols);
                ok = abs(det_exact(split.complement)) == cert.det_abs;
            }
        }
    }
    std::cout << (ok ? "verified" : "FAILED") << " n=" << cert.n
              << " det=" << cert.det_abs.get_str() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lower bounds and witness matrices for the maximal "
                 "determinant of {+1,-1} matrices"};
    app.require_subcommand(1);

    std::string mode = "conjecture";
    std::string format = "json";
    int cap = 0;  // 0 = derive from n
    long sieve_bound = 1000000;
    std::uint64_t seed = 0;
    int restarts = 32;
    std::vector<std::string> load_files;
    std::string out_base;
    int n = 0, n_min = 0, n_max = 0, order = 0;
    bool with_witness = false;
    std::string verify_path;

    auto add_common = [&](CLI::App* cmd, bool with_cap = true) {
        cmd->add_option("--mode", mode, "registry mode")
            ->check(CLI::IsMember({"constructive", "known-orders",
                                   "conjecture"}));
        if (with_cap) cmd->add_option("--cap", cap, "registry order cap");
        cmd->add_option("--load", load_files,
                        "Hadamard matrix file(s) to add to the registry");
    };

    CLI::App* bound = app.add_subcommand("bound", "bound report for one n");
    bound->add_option("n", n, "matrix order")->required()
        ->check(CLI::PositiveNumber);
    add_common(bound);
    bound->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* witness =
        app.add_subcommand("witness", "construct and certify a witness");
    witness->add_option("n", n, "matrix order")->required()
        ->check(CLI::PositiveNumber);
    add_common(witness);
    witness->add_option("--seed", seed, "search seed");
    witness->add_option("--restarts", restarts, "local search restarts");
    witness->add_option("--out", out_base,
                        "write BASE.json and BASE.matrix instead of stdout");

    CLI::App* table = app.add_subcommand("table", "CSV comparison table");
    table->add_option("n_min", n_min, "first order")->required()
        ->check(CLI::PositiveNumber);
    table->add_option("n_max", n_max, "last order")->required()
        ->check(CLI::PositiveNumber);
    add_common(table);
    table->add_flag("--witness", with_witness, "also compute witness dets");
    table->add_option("--seed", seed, "search seed");

    CLI::App* orders = app.add_subcommand("orders", "dump the order registry");
    orders->add_option("--cap", cap, "registry order cap (default 64)");
    add_common(orders, false);

    CLI::App* gaps_cmd =
        app.add_subcommand("gaps", "prime-gap and order-gap tables");
    gaps_cmd->add_option("--cap", cap, "table cap (default 100)");
    gaps_cmd->add_option("--sieve-bound", sieve_bound, "prime sieve bound");

    CLI::App* excess_cmd =
        app.add_subcommand("excess", "maximize the excess of an order");
    excess_cmd->add_option("order", order, "Hadamard order")->required()
        ->check(CLI::PositiveNumber);
    excess_cmd->add_option("--seed", seed, "search seed");
    excess_cmd->add_option("--restarts", restarts, "local search restarts");

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "exhaustive D(n) for tiny n");
    oracle_cmd->add_option("n", n, "matrix order (<= 6)")->required()
        ->check(CLI::PositiveNumber);

    CLI::App* verify =
        app.add_subcommand("verify", "re-verify a stored certificate");
    verify->add_option("path", verify_path, "certificate JSON")->required();

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        load_references_from_data_dir();

        if (bound->parsed()) {
            const int use_cap = cap > 0 ? cap : 2 * n + 8;
            const OrderRegistry reg = make_registry(use_cap, mode, load_files);
            const BoundReport rep = bound_report(n, reg);
            if (format == "csv")
                std::cout << bound_report_csv(rep);
            else
                std::cout << bound_report_json(rep).dump(2) << "\n";
            return 0;
        }
        if (witness->parsed()) {
            const int use_cap = cap > 0 ? cap : 2 * n + 8;
            const OrderRegistry reg = make_registry(use_cap, mode, load_files);
            SearchParams params{restarts, seed};
            const WitnessCertificate cert = best_witness(n, reg, params);
            if (!out_base.empty()) {
                const std::string matrix_name =
                    fs::path(out_base).filename().string() + ".matrix";
                std::ofstream mout(out_base + ".matrix");
                write_matrix(mout, cert.matrix);
                std::ofstream jout(out_base + ".json");
                jout << certificate_json(cert, matrix_name).dump(2) << "\n";
                std::cout << (cert.verified ? "verified" : "FAILED")
                          << " n=" << cert.n
                          << " det=" << cert.det_abs.get_str() << " ("
                          << cert.construction.tag() << ")\n";
            } else {
                std::cout << certificate_json(cert).dump(2) << "\n";
            }
            return cert.verified ? 0 : 1;
        }
        if (table->parsed()) {
            if (n_max < n_min) throw precondition_error("n_max < n_min");
            const int use_cap = cap > 0 ? cap : 2 * n_max + 8;
            const OrderRegistry reg = make_registry(use_cap, mode, load_files);
            std::vector<TableRow> rows;
            for (int k = n_min; k <= n_max; ++k) {
                TableRow row;
                row.n = k;
                row.report = bound_report(k, reg);
                if (with_witness) {
                    try {
                        row.witness =
                            best_witness(k, reg, SearchParams{restarts, seed});
                    } catch (const no_witness_error&) {
                    }
                }
                row.reference = reference_D(k);
                rows.push_back(std::move(row));
            }
            print_table(std::cout, rows);
            return 0;
        }
        if (orders->parsed()) {
            const OrderRegistry reg =
                make_registry(cap > 0 ? cap : 64, mode, load_files);
            std::cout << registry_json(reg).dump(2) << "\n";
            return 0;
        }
        if (gaps_cmd->parsed()) {
            if (cap <= 0) cap = 100;
            const GapTable gt(std::max(sieve_bound, static_cast<long>(cap)));
            const OrderRegistry reg = OrderRegistry::build(
                std::max(2 * cap, 8), RegistryMode::constructive);
            json j;
            j["cap"] = cap;
            j["sieve_bound"] = gt.bound();
            j["lambda"] = json::array();
            for (std::size_t i = 0; i + 1 < gt.primes().size(); ++i) {
                if (gt.primes()[i] > cap) break;
                json e;
                e["p"] = gt.primes()[i];
                e["next"] = gt.primes()[i + 1];
                e["gap"] = gt.primes()[i + 1] - gt.primes()[i];
                e["lambda"] = gt.lambda(static_cast<double>(gt.primes()[i]));
                j["lambda"].push_back(std::move(e));
            }
            j["gamma"] = json::array();
            const auto& ords = reg.orders();
            for (std::size_t i = 0; i + 1 < ords.size(); ++i) {
                if (ords[i] > cap) break;
                json e;
                e["order"] = ords[i];
                e["next"] = ords[i + 1];
                e["gamma"] = reg.gamma(ords[i]);
                j["gamma"].push_back(std::move(e));
            }
            j["delta"] = json::array();
            for (int k = 1; k <= cap / 2; ++k) {
                const DeltaResult d = reg.delta(k);
                json e;
                e["n"] = k;
                e["delta"] = d.delta;
                e["h"] = d.h_primary;
                j["delta"].push_back(std::move(e));
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (excess_cmd->parsed()) {
            const OrderRegistry reg = OrderRegistry::build(
                std::max(order, 2), RegistryMode::constructive);
            std::optional<SignMatrix> hm;
            if (reg.contains(order)) hm = reg.materialize(order);
            if (!hm) {
                std::cerr << "order " << order << " is not constructible\n";
                return 4;
            }
            const SignMatrix best =
                maximize_excess(*hm, SearchParams{restarts, seed});
            json j;
            j["h"] = order;
            j["sigma"] = excess(best).get_str();
            j["sigma_floor"] = std::exp(excess_lower(order).ln);
            j["matrix_text"] = to_text(best);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (oracle_cmd->parsed()) {
            std::cout << "n,D\n" << n << ',' << brute_force_D(n).get_str()
                      << "\n";
            return 0;
        }
        if (verify->parsed()) return cmd_verify(verify_path);
        if (selftest->parsed()) {
            const auto results = run_acceptance(std::cout);
            for (const auto& r : results)
                if (!r.pass) return 1;
            return 0;
        }
    } catch (const error_registry_too_small& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const no_witness_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
