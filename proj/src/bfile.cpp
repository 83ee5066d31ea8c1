#include <fstream>
#include <sstream>

#include "htdet/verify.hpp"

namespace htdet::verify {

BFile parse_bfile(std::istream& in) {
    BFile out;
    std::string line;
    int line_no = 0;
    std::optional<int> last;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;

        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        fields >> index_text >> value_text;
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (value_text.empty() || (fields >> extra)) {
            throw BFileError(where + "expected \"n value\", got \"" + line + "\"");
        }
        int index = 0;
        std::size_t used = 0;
        try {
            index = std::stoi(index_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != index_text.size()) throw BFileError(where + "bad index \"" + index_text + "\"");
        Integer value;
        try {
            value = Integer::parse(value_text);
        } catch (const std::invalid_argument&) {
            throw BFileError(where + "bad value \"" + value_text + "\"");
        }
        if (!last) {
            out.offset = index;
        } else if (index != *last + 1) {
            throw BFileError(where + "index " + std::to_string(index) + " does not follow " +
                             std::to_string(*last));
        }
        last = index;
        out.values.push_back(std::move(value));
    }
    return out;
}

BFile read_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw BFileError("cannot open " + path.string());
    try {
        return parse_bfile(in);
    } catch (const BFileError& e) {
        throw BFileError(path.filename().string() + ": " + e.what());
    }
}

void write_bfile(std::ostream& out, const sequences::SequencePrefix& prefix) {
    for (std::size_t i = 0; i < prefix.values.size(); ++i) {
        out << prefix.offset + static_cast<int>(i) << ' ' << prefix.values[i] << '\n';
    }
}

std::string bfile_text(const sequences::SequencePrefix& prefix) {
    std::ostringstream os;
    write_bfile(os, prefix);
    return os.str();
}

}  // namespace htdet::verify
