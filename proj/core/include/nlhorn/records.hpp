#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nlhorn/inequalities.hpp"
#include "nlhorn/verify.hpp"

namespace nlhorn {

/// Line-oriented JSON: one header line (format version, tool, n, family,
/// record count), then one line per record in canonical order. Regenerating
/// the same set yields byte-identical output.
std::string to_records(const InequalitySet& set);
/// Inverse of to_records. Throws ParseError on malformed input.
InequalitySet set_from_records(std::string_view text);

/// Header line (with wall time), one summary line, then one line per finding.
/// Everything after the header is independent of thread count.
std::string to_records(const ScanReport& report);

/// Flat exports for spreadsheets; not round-trippable.
std::string to_csv(const InequalitySet& set);
std::string to_csv(const ScanReport& report);

std::string read_file(const std::filesystem::path& path);
/// Writes via a temp file and rename so readers never see partial content.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace nlhorn
