#include "mescorr/cli/config.hpp"

#include <algorithm>
#include <sstream>

#include "mescorr/error.hpp"

namespace mescorr::cli {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool has_flag(std::span<const std::string> args, const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

} // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(number) + ": expected key=value");
        }
        std::string key = trim(text.substr(0, eq));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        if (key.empty()) throw ConfigError("config line " + std::to_string(number) + ": empty key");
        out[key] = trim(text.substr(eq + 1));
    }
    return out;
}

std::vector<std::string> merge_config(std::span<const std::string> args,
                                      const std::map<std::string, std::string>& config) {
    std::vector<std::string> merged;
    if (args.empty()) return merged;
    merged.push_back(args.front());
    for (const auto& [key, value] : config) {
        const std::string flag = "--" + key;
        if (key == "config" || has_flag(args, flag)) continue;
        merged.push_back(flag);
        std::istringstream values(value);
        std::string v;
        while (values >> v) merged.push_back(v);
    }
    merged.insert(merged.end(), args.begin() + 1, args.end());
    return merged;
}

} // namespace mescorr::cli
