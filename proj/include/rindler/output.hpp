#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace rindler::output {

/// 12 significant digits, trailing zeros kept, C locale regardless of the
/// process locale. Negative zero prints as zero.
std::string format_number(double value);

/// Shortest round-trip form for file names and metadata ("0.01", "-1").
std::string format_compact(double value);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// CSV document with '#'-prefixed metadata lines ahead of the header.
class CsvTable
{
public:
    CsvTable(Metadata metadata, std::vector<std::string> columns);

    /// Throws std::invalid_argument if the cell count does not match the header.
    void add_row(std::vector<std::string> cells);

    std::size_t row_count() const noexcept { return rows_.size(); }
    std::string str() const;

private:
    Metadata metadata_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

/// Quotes a cell when it holds a comma, quote or newline.
std::string csv_escape(const std::string& cell);

/// Writes through a sibling temporary file and renames it into place.
/// Throws std::runtime_error when the file cannot be written.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// A file whose content has been fully computed but not yet written.
struct PendingFile
{
    std::filesystem::path path;
    std::string content;
};

void write_all(const std::vector<PendingFile>& files);

}  // namespace rindler::output
