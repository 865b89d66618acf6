#pragma once

// Internal helpers for the persisted law-cache text format: one
// polynomial per line, integer (or p-local rational) coefficients,
// canonical sorted term order, so files are bit-exact across platforms.

#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "witt/error.hpp"
#include "witt/sparse_poly.hpp"

namespace witt::detail {

// x/y variable names for a law over the given index labels; the y
// family starts at var id labels.size().
inline std::function<std::string(VarId)> law_namer(const std::vector<long>& labels) {
    return [labels](VarId v) {
        const std::size_t t = labels.size();
        if (v < t) return "x" + std::to_string(labels[v]);
        if (v < 2 * t) return "y" + std::to_string(labels[v - t]);
        throw invalid_value("variable id out of range in law");
    };
}

inline std::function<VarId(const std::string&)> law_lookup(const std::vector<long>& labels) {
    return [labels](const std::string& id) -> VarId {
        if (id.size() < 2 || (id[0] != 'x' && id[0] != 'y'))
            throw invalid_value("unknown law variable '" + id + "'");
        long label = std::stol(id.substr(1));
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return static_cast<VarId>(id[0] == 'x' ? i : labels.size() + i);
        throw invalid_value("unknown law variable '" + id + "'");
    };
}

inline void write_poly_lines(std::ostream& os, const std::string& tag,
                             const std::vector<SparsePoly>& polys,
                             const std::vector<long>& line_labels,
                             const std::vector<long>& var_labels) {
    auto namer = law_namer(var_labels);
    for (std::size_t i = 0; i < polys.size(); ++i)
        os << tag << "[" << line_labels[i] << "] = " << polys[i].str(namer) << "\n";
}

// Parses "tag[label] = poly"; returns false when the line is not of
// that shape (caller decides what to do).
inline bool parse_poly_line(const std::string& line, std::string& tag, long& label,
                            SparsePoly& poly, const std::vector<long>& var_labels) {
    const auto lb = line.find('[');
    const auto rb = line.find(']');
    const auto eq = line.find('=');
    if (lb == std::string::npos || rb == std::string::npos || eq == std::string::npos
        || !(lb < rb && rb < eq))
        return false;
    tag = line.substr(0, lb);
    while (!tag.empty() && tag.back() == ' ') tag.pop_back();
    label = std::stol(line.substr(lb + 1, rb - lb - 1));
    poly = SparsePoly::parse(line.substr(eq + 1), law_lookup(var_labels));
    return true;
}

} // namespace witt::detail
