#include "screenlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace screenlab::io {

namespace {

using nlohmann::json;

json g12_number(double x) {
    // Round through the 12-significant-digit decimal form so the JSON dump
    // is stable no matter how the value was computed.
    return json(std::stod(format_g12(x)));
}

json g12_array(const std::vector<double>& xs) {
    json arr = json::array();
    for (const double x : xs) arr.push_back(g12_number(x));
    return arr;
}

json outcome_to_json(const SimOutcome& outcome) {
    json j;
    j["seed"] = outcome.seed;
    j["trials"] = outcome.trials;
    j["ic_violation"] = g12_number(outcome.ic_violation);
    if (!outcome.bin_centers.empty()) {
        j["bin_centers"] = g12_array(outcome.bin_centers);
        j["empirical_rent"] = g12_array(outcome.empirical_rent);
        j["rent_se"] = g12_array(outcome.rent_se);
        j["bin_counts"] = outcome.bin_counts;
        j["exact_rent"] = g12_array(outcome.exact_rent);
    }
    if (!outcome.best_report.empty()) j["best_report"] = g12_array(outcome.best_report);
    j["empirical_value"] = g12_number(outcome.empirical_value);
    j["value_se"] = g12_number(outcome.value_se);
    return j;
}

}  // namespace

std::string format_g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : bytes) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string checksum_hex(const std::string& bytes) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string("fnv1a64:") + buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << bytes;
}

std::string sign_map_csv(const std::vector<SignMapCell>& cells) {
    std::ostringstream os;
    os << "q1,q0,dV_dq1,dV_dq2,sign1,sign0\n";
    for (const auto& cell : cells) {
        os << format_g12(cell.q1) << ',' << format_g12(cell.q0) << ','
           << format_g12(cell.d_q1) << ',' << format_g12(cell.d_q0) << ','
           << cell.sign1 << ',' << cell.sign0 << '\n';
    }
    return os.str();
}

std::string profile_csv(const std::vector<ProfilePoint>& rows) {
    std::ostringstream os;
    os << "q,value,cost,net\n";
    for (const auto& row : rows) {
        os << format_g12(row.q) << ',' << format_g12(row.value) << ','
           << format_g12(row.cost) << ',' << format_g12(row.net) << '\n';
    }
    return os.str();
}

std::string rent_curve_csv(const Equilibrium& eq, int samples) {
    std::ostringstream os;
    os << "theta,rent,zone\n";
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(samples) + 2);
    for (int i = 0; i < samples; ++i) grid.push_back((i + 0.5) / samples);
    grid.push_back(eq.theta1);
    grid.push_back(eq.theta0);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (const double theta : grid) {
        os << format_g12(theta) << ',' << format_g12(managerial_rent(theta, eq)) << ','
           << zone_name(classify_zone(theta, eq)) << '\n';
    }
    return os.str();
}

std::string design_result_json(const DesignResult& result) {
    json j;
    j["q_star"] = g12_number(result.q_star);
    j["net_value"] = g12_number(result.net_value);
    j["is_corner"] = result.is_corner;
    json profile = json::array();
    for (const auto& row : result.profile) {
        profile.push_back(json{{"q", g12_number(row.q)},
                               {"value", g12_number(row.value)},
                               {"cost", g12_number(row.cost)},
                               {"net", g12_number(row.net)}});
    }
    j["profile"] = profile;
    return j.dump(2) + "\n";
}

std::string sim_outcome_json(const SimOutcome& outcome) {
    return outcome_to_json(outcome).dump(2) + "\n";
}

std::string simulate_bundle_json(const SimOutcome& best_response, const SimOutcome& rents,
                                 const SimOutcome& value, double quadrature_value) {
    json j;
    j["best_response"] = outcome_to_json(best_response);
    j["rents"] = outcome_to_json(rents);
    j["value"] = outcome_to_json(value);
    j["quadrature_value"] = g12_number(quadrature_value);
    return j.dump(2) + "\n";
}

void RunManifest::record(const std::string& path, const std::string& bytes) {
    outputs.emplace_back(path, checksum_hex(bytes));
}

std::string RunManifest::to_json() const {
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    json outs = json::array();
    for (const auto& [path, checksum] : outputs) {
        outs.push_back(json{{"path", path}, {"checksum", checksum}});
    }
    j["outputs"] = outs;
    return j.dump(2) + "\n";
}

void RunManifest::write_alongside(const std::string& primary_output) const {
    write_file(primary_output + ".manifest.json", to_json());
}

}  // namespace screenlab::io
