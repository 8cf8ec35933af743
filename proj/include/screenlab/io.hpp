// File output helpers shared by the CLI and tests: fixed 12-significant-digit
// number formatting (so repeated runs produce byte-identical artifacts),
// FNV-1a checksums, CSV writers, JSON serialization of results, and the
// run manifest written alongside every output set.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "screenlab/design.hpp"
#include "screenlab/sim.hpp"
#include "screenlab/valuation.hpp"

namespace screenlab::io {

// Shortest-of-%.12g rendering used for every floating-point value we emit.
std::string format_g12(double x);

std::uint64_t fnv1a64(const std::string& bytes);
std::string checksum_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

std::string sign_map_csv(const std::vector<SignMapCell>& cells);
std::string profile_csv(const std::vector<ProfilePoint>& rows);
std::string rent_curve_csv(const Equilibrium& eq, int samples);

std::string design_result_json(const DesignResult& result);
std::string sim_outcome_json(const SimOutcome& outcome);
// Combined record the simulate command writes: best-response scan, rent
// bins, and the value comparison in one document.
std::string simulate_bundle_json(const SimOutcome& best_response, const SimOutcome& rents,
                                 const SimOutcome& value, double quadrature_value);

// Run manifest: command, resolved parameters, and a checksum per emitted
// file. Deliberately carries no timestamps so reruns are byte-identical.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<std::pair<std::string, std::string>> outputs;  // path, checksum

    void record(const std::string& path, const std::string& bytes);
    std::string to_json() const;
    // Written next to the primary output as <primary>.manifest.json.
    void write_alongside(const std::string& primary_output) const;
};

}  // namespace screenlab::io
