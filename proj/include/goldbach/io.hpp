#pragma once

// CSV / JSON / aligned-table rendering of every result type the CLI emits.
// Column names are part of the external interface; do not rename them.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "goldbach/diophantine.hpp"
#include "goldbach/error.hpp"
#include "goldbach/partition.hpp"
#include "goldbach/sequences.hpp"

namespace goldbach::io {

enum class Format { csv, json, table };

inline Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "table") return Format::table;
    throw DomainError("unknown format '" + std::string(name) + "' (expected csv, json or table)");
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline void write_csv(std::ostream& os, const Table& t) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << cells[c];
        os << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
}

inline void write_aligned(std::ostream& os, const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto grow = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size() && c < width.size(); ++c) width[c] = std::max(width[c], cells[c].size());
    };
    grow(t.header);
    for (const auto& row : t.rows) grow(row);
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << "  ";
            os << cells[c];
            if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size(), ' ');
        }
        os << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
}

inline void write(std::ostream& os, const Table& t, const nlohmann::json& j, Format format) {
    switch (format) {
    case Format::csv: write_csv(os, t); break;
    case Format::table: write_aligned(os, t); break;
    case Format::json: os << j.dump(2) << '\n'; break;
    }
}

inline const char* bit(bool b) { return b ? "1" : "0"; }

// --- partition counts -------------------------------------------------------

/// Streams `two_n,count,backend` rows without materialising strings per row.
inline void write_counts(std::ostream& os, std::span<const PartitionCount> rows, Format format) {
    switch (format) {
    case Format::csv:
        os << "two_n,count,backend\n";
        for (const auto& r : rows) os << r.two_n << ',' << r.count << ',' << to_string(r.backend) << '\n';
        break;
    case Format::json:
        os << '[';
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const auto& r = rows[k];
            os << (k ? ",\n  " : "\n  ") << "{\"two_n\": " << r.two_n << ", \"count\": " << r.count
               << ", \"backend\": \"" << to_string(r.backend) << "\"}";
        }
        os << (rows.empty() ? "]\n" : "\n]\n");
        break;
    case Format::table:
        os << "two_n       count       backend\n";
        for (const auto& r : rows) {
            auto a = std::to_string(r.two_n);
            auto b = std::to_string(r.count);
            os << a << std::string(a.size() < 12 ? 12 - a.size() : 1, ' ') << b
               << std::string(b.size() < 12 ? 12 - b.size() : 1, ' ') << to_string(r.backend) << '\n';
        }
        break;
    }
}

// --- matrices ---------------------------------------------------------------

inline Table matrix_table(const MatrixExport& m) {
    Table t;
    t.header.push_back("label");
    for (auto label : m.labels) t.header.push_back(std::to_string(label));
    for (std::uint64_t r = 0; r < m.side; ++r) {
        std::vector<std::string> row{std::to_string(m.labels[r])};
        for (std::uint64_t c = 0; c < m.side; ++c) row.push_back(std::to_string(m.cell(r, c)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline nlohmann::json matrix_json(const MatrixExport& m) {
    nlohmann::json cells = nlohmann::json::array();
    for (std::uint64_t r = 0; r < m.side; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::uint64_t c = 0; c < m.side; ++c) row.push_back(m.cell(r, c));
        cells.push_back(std::move(row));
    }
    return {{"kind", std::string(to_string(m.kind))}, {"side", m.side}, {"labels", m.labels}, {"cells", cells}};
}

// --- sync audit -------------------------------------------------------------

inline Table audit_table(std::span<const SyncAuditRow> rows) {
    Table t{{"n", "i", "p", "p_prime", "gcd_ok", "partner", "partner_prime"}, {}};
    for (const auto& r : rows) {
        t.rows.push_back({std::to_string(r.n), std::to_string(r.i), std::to_string(r.p), bit(r.p_prime),
                          bit(r.gcd_ok), std::to_string(r.partner), bit(r.partner_prime)});
    }
    return t;
}

inline nlohmann::json audit_json(std::span<const SyncAuditRow> rows) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({{"n", r.n}, {"i", r.i}, {"p", r.p}, {"p_prime", int{r.p_prime}}, {"gcd_ok", int{r.gcd_ok}},
                       {"partner", r.partner}, {"partner_prime", int{r.partner_prime}}});
    }
    return out;
}

// --- witnesses --------------------------------------------------------------

inline Table witness_table(std::span<const DiophantineWitness> rows) {
    Table t{{"two_n", "i", "lower", "upper", "a", "b", "master_holds"}, {}};
    for (const auto& w : rows) {
        t.rows.push_back({std::to_string(2 * w.n), std::to_string(w.i), std::to_string(w.lower()),
                          std::to_string(w.upper()), w.a.get_str(), w.b.get_str(), bit(w.master_holds)});
    }
    return t;
}

/// a and b are decimal strings: they routinely exceed any fixed-width integer.
inline nlohmann::json witness_json(std::span<const DiophantineWitness> rows) {
    auto out = nlohmann::json::array();
    for (const auto& w : rows) {
        out.push_back({{"two_n", 2 * w.n}, {"i", w.i}, {"lower", w.lower()}, {"upper", w.upper()},
                       {"a", w.a.get_str()}, {"b", w.b.get_str()}, {"master_holds", w.master_holds}});
    }
    return out;
}

} // namespace goldbach::io
