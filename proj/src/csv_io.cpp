#include "morphclust/csv_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "morphclust/errors.hpp"

namespace morphclust {

namespace {

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    for (std::string& f : fields) {
        const auto b = f.find_first_not_of(" \t");
        const auto e = f.find_last_not_of(" \t");
        f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    }
    return fields;
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool parse_double(const std::string& s, double& out)
{
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !s.empty();
}

bool parse_label(const std::string& s, int& out)
{
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !s.empty();
}

} // namespace

std::pair<Dataset, std::optional<LabelVector>> read_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);

    Dataset data;
    LabelVector labels;
    bool has_labels = false;
    int columns = 0;

    std::string line;
    std::size_t line_no = 0;
    bool header_checked = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;

        auto fields = split_fields(line);

        if (!header_checked) {
            header_checked = true;
            const std::string joined = [&] {
                std::string j;
                for (const auto& f : fields)
                    j += lower(f) + ",";
                return j;
            }();
            if (joined == "x,y," || joined == "x,y,z," || joined == "x,y,label,"
                || joined == "x,y,z,label,") {
                data.dim = joined.find('z') != std::string::npos ? 3 : 2;
                has_labels = joined.find("label") != std::string::npos;
                columns = static_cast<int>(fields.size());
                continue;
            }
            // headerless: infer layout from the column count
            switch (fields.size()) {
            case 2: data.dim = 2; break;
            case 3: data.dim = 3; break;
            case 4: data.dim = 3; has_labels = true; break;
            default:
                throw ParseError(line_no, "expected 2..4 columns, got "
                                 + std::to_string(fields.size()));
            }
            columns = static_cast<int>(fields.size());
        }

        if (static_cast<int>(fields.size()) != columns)
            throw ShapeError("line " + std::to_string(line_no) + ": expected "
                             + std::to_string(columns) + " columns, got "
                             + std::to_string(fields.size()));

        for (int d = 0; d < data.dim; ++d) {
            double v = 0.0;
            if (!parse_double(fields[static_cast<std::size_t>(d)], v))
                throw ParseError(line_no, "cannot parse '" + fields[static_cast<std::size_t>(d)]
                                 + "' as a number");
            data.coords.push_back(v);
        }
        if (has_labels) {
            int l = 0;
            if (!parse_label(fields.back(), l))
                throw ParseError(line_no, "cannot parse '" + fields.back() + "' as a label");
            labels.push_back(l);
        }
    }

    if (data.coords.empty())
        throw InvalidData(path + " contains no data rows");
    validate_dataset(data);

    if (has_labels)
        return {std::move(data), std::move(labels)};
    return {std::move(data), std::nullopt};
}

void write_csv(const std::string& path, const Dataset& data, const LabelVector& labels)
{
    if (labels.size() != data.size())
        throw ShapeError("label count does not match point count");

    std::ostringstream out;
    out << (data.dim == 3 ? "x,y,z,label\n" : "x,y,label\n");

    char buf[64];
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double* p = data.point(i);
        for (int d = 0; d < data.dim; ++d) {
            std::snprintf(buf, sizeof buf, "%.17g", p[d]);
            out << buf << ',';
        }
        out << labels[i] << '\n';
    }

    std::ofstream file(path, std::ios::binary); // keep \n on every platform
    if (!file || !(file << out.str()))
        throw IoError("cannot write " + path);
}

} // namespace morphclust
