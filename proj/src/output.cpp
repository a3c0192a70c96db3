#include "rindler/output.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace rindler::output {

std::string format_number(double value)
{
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::showpoint << std::setprecision(12) << value;
    return os.str();
}

std::string format_compact(double value)
{
    if (value == 0.0) value = 0.0;
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

CsvTable::CsvTable(Metadata metadata, std::vector<std::string> columns)
    : metadata_(std::move(metadata)), columns_(std::move(columns))
{
}

void CsvTable::add_row(std::vector<std::string> cells)
{
    if (cells.size() != columns_.size()) throw std::invalid_argument("CSV row width does not match the header");
    rows_.push_back(std::move(cells));
}

std::string csv_escape(const std::string& cell)
{
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string CsvTable::str() const
{
    std::string out;
    for (const auto& [key, value] : metadata_) out += "# " + key + ": " + value + "\n";
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cells[i]);
        }
        out += "\n";
    };
    emit(columns_);
    for (const auto& row : rows_) emit(row);
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << content;
        if (!os.flush()) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move output into place at " + path.string());
    }
}

void write_all(const std::vector<PendingFile>& files)
{
    for (const auto& f : files) write_file_atomic(f.path, f.content);
}

}  // namespace rindler::output
