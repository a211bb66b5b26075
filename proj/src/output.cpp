#include "casimir/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace casimir::out {

std::string format_g17(double v) {
    if (v == 0.0) v = 0.0;  // flush -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const OutputTable& table) {
    std::string s;
    for (const std::string& m : table.meta) {
        s += "# ";
        s += m;
        s += '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) s += ',';
        s += table.columns[i];
    }
    s += '\n';
    for (const std::vector<double>& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            s += format_g17(row[i]);
        }
        s += '\n';
    }
    return s;
}

std::string to_json(const OutputTable& table) {
    std::string s = "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        s += "{";
        for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
            if (i) s += ",";
            s += '"';
            s += table.columns[i];
            s += "\":";
            s += format_g17(table.rows[r][i]);
        }
        s += (r + 1 < table.rows.size()) ? "},\n" : "}\n";
    }
    s += "]\n";
    return s;
}

OutputTable parse_csv(const std::string& text) {
    OutputTable t;
    std::istringstream in(text);
    std::string line;
    bool have_columns = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
            t.meta.push_back(line.substr(start));
            continue;
        }
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (!have_columns) {
            t.columns = fields;
            have_columns = true;
            continue;
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& f : fields) {
            char* end = nullptr;
            double v = std::strtod(f.c_str(), &end);
            if (end == f.c_str()) throw std::runtime_error("parse_csv: bad numeric field '" + f + "'");
            row.push_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace casimir::out
