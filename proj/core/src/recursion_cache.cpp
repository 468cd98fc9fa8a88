#include "gwcount/recursion_cache.hpp"

#include "gwcount/errors.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <string>
#include <system_error>

namespace gwcount {

namespace {

bool all_digits(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

RecursionTable read_recursion_cache(std::istream& in, const CacheLoadOptions& options) {
    std::vector<Count> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            throw CacheError("carriage return in line", line_no);
        }
        const auto space = line.find(' ');
        if (space == std::string::npos) {
            throw CacheError(line.empty() ? "blank line" : "expected \"d value\"", line_no);
        }
        const std::string_view degree_text(line.data(), space);
        const std::string_view value_text(line.data() + space + 1, line.size() - space - 1);
        if (!all_digits(degree_text) || !all_digits(value_text)) {
            throw CacheError("expected two non-negative decimal fields", line_no);
        }
        int degree = 0;
        const auto [ptr, ec] =
            std::from_chars(degree_text.data(), degree_text.data() + degree_text.size(), degree);
        if (ec != std::errc{} || ptr != degree_text.data() + degree_text.size()) {
            throw CacheError("degree out of range", line_no);
        }
        if (static_cast<std::size_t>(degree) != values.size() + 1) {
            throw CacheError("expected degree " + std::to_string(values.size() + 1) + ", found " +
                                 std::to_string(degree),
                             line_no);
        }
        values.emplace_back(std::string(value_text), 10);
        if (degree == 1 && values.back() != 1) {
            throw CacheError("N_1 must be 1", line_no);
        }
    }
    if (in.bad()) {
        throw CacheError("read failure", 0);
    }
    if (values.empty()) {
        throw CacheError("cache is empty", 0);
    }

    RecursionTable table = RecursionTable::from_values(std::move(values));
    const int top = table.max_degree();

    auto verify = [&](int d) {
        if (table.derive(d) != table.at(d)) {
            throw CacheError("stored N_" + std::to_string(d) + " does not match the recursion",
                             static_cast<std::size_t>(d));
        }
    };
    if (options.verify_all) {
        for (int d = 2; d <= top; ++d) {
            verify(d);
        }
    } else if (top >= 2) {
        std::mt19937_64 rng(options.seed ? *options.seed : std::random_device{}());
        std::uniform_int_distribution<int> pick(2, top);
        verify(pick(rng));
    }
    return table;
}

RecursionTable load_recursion_cache(const std::filesystem::path& path,
                                    const CacheLoadOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw CacheError("cannot open " + path.string(), 0);
    }
    return read_recursion_cache(in, options);
}

void write_recursion_cache(std::ostream& out, const RecursionTable& table) {
    for (int d = 1; d <= table.max_degree(); ++d) {
        out << d << ' ' << table.at(d).get_str(10) << '\n';
    }
}

void save_recursion_cache(const std::filesystem::path& path, const RecursionTable& table) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        write_recursion_cache(out, table);
        out.flush();
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace gwcount
