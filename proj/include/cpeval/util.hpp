#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cpeval {

std::string sha256_hex(std::string_view data);

// Judge output normalization: strip trailing whitespace on every line and
// drop trailing newlines; all other bytes compared verbatim.
std::string normalize_output(std::string_view raw);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);
// Write-then-rename so concurrent writers never expose partial content.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
bool contains(std::string_view haystack, std::string_view needle);
std::string replace_all(std::string s, std::string_view from, std::string_view to);

// Minimal CSV reader: comma separated, no quoting, blank lines skipped.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);

double median(std::vector<double> values);  // even length: mean of middle pair

// Runs fn(0..n-1) on up to `workers` threads. Exceptions are rethrown in the
// caller (first by index). Callers write results into index-addressed slots,
// which keeps aggregation in input order regardless of completion order.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

void warn(const std::string& message);

}  // namespace cpeval
