#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pilab/cf.hpp"
#include "pilab/groups.hpp"
#include "pilab/spectra.hpp"

// JSON and CSV renderings. Exact rationals are "num/den" strings; reals are
// decimal strings with 17 significant digits. Nothing time-dependent goes in.
namespace pilab::report {

using json = nlohmann::ordered_json;

std::string real(double x);
std::string real(long double x);

json to_json(const cf::Convergent& conv);
json to_json(const cf::GapReport& gap);
json to_json(const cf::AuditReport& audit);
json to_json(const groups::SubgroupReport& sub, bool with_elements = true);
json to_json(const groups::CosetReport& coset, bool with_sets = false);
json to_json(const groups::ArtinScan& scan);
json to_json(const groups::ArtinNear& near);
json to_json(const spectra::WeylReport& weyl);
json to_json(const spectra::BlockStats& stats);
json to_json(const spectra::ExpSumReport& expsum);
json to_json(const spectra::LipschitzReport& pairing);
json to_json(const spectra::WallReport& wall);
json to_json(const spectra::XSequenceAudit& audit);

/// The block written as a base-b string of k digits.
std::string pattern(std::uint64_t index, unsigned base, unsigned k);

void write_weyl_csv(std::ostream& out, const spectra::WeylReport& weyl);
void write_blocks_csv(std::ostream& out, const std::vector<spectra::BlockStats>& blocks);
void write_artin_csv(std::ostream& out, const std::vector<kernels::ArtinRow>& rows);

}  // namespace pilab::report
