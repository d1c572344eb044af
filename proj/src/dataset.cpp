#include "pfci/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pfci/graph_io.hpp"

namespace pfci {

int Dataset::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < column_names.size(); ++i)
        if (column_names[i] == name) return static_cast<int>(i);
    throw PfciError("no column named '" + name + "'");
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Dataset parse_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw PfciError("empty CSV input from " + origin);

    Dataset d;
    for (const auto& f : split_line(line)) d.column_names.push_back(trim(f));
    const std::size_t p = d.column_names.size();
    if (p == 0) throw PfciError("CSV header has no columns (" + origin + ")");

    std::vector<double> data;
    std::size_t rows = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_line(line);
        if (fields.size() != p)
            throw PfciError("row " + std::to_string(lineno) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(p) + " (" + origin + ")");
        for (std::size_t c = 0; c < p; ++c) {
            const std::string token = trim(fields[c]);
            if (token.empty() || token == "NA" || token == "nan" || token == "NaN")
                throw MissingValue(lineno, c + 1);
            char* end = nullptr;
            const double value = std::strtod(token.c_str(), &end);
            if (end != token.c_str() + token.size() || !std::isfinite(value))
                throw NonNumeric(lineno, c + 1, token);
            data.push_back(value);
        }
        ++rows;
    }

    d.values.resize(rows, p);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < p; ++c)
            d.values(r, c) = data[r * p + c];
    return d;
}

Dataset read_csv(const std::string& path) { return parse_csv(read_text_file(path), path); }

std::string to_csv(const Dataset& d) {
    std::ostringstream out;
    for (std::size_t c = 0; c < d.column_names.size(); ++c) {
        if (c) out << ',';
        out << d.column_names[c];
    }
    out << '\n';
    char buf[40];
    for (Eigen::Index r = 0; r < d.n(); ++r) {
        for (Eigen::Index c = 0; c < d.p(); ++c) {
            if (c) out << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", d.values(r, c));
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

void write_csv(const Dataset& d, const std::string& path) {
    write_text_file(path, to_csv(d));
}

Dataset standardize(const Dataset& d) {
    if (d.n() < 2) throw PfciError("standardize requires at least 2 observations");
    Dataset out = d;
    const double n = static_cast<double>(d.n());
    for (Eigen::Index c = 0; c < d.p(); ++c) {
        auto col = out.values.col(c);
        const double mean = col.mean();
        col.array() -= mean;
        const double var = col.squaredNorm() / (n - 1.0);
        if (var <= 0.0) throw ConstantColumn(d.column_names[c]);
        col /= std::sqrt(var);
    }
    return out;
}

}  // namespace pfci
