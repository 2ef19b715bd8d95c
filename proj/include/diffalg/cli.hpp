#ifndef DIFFALG_CLI_HPP
#define DIFFALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "diffalg/polynomial.hpp"

namespace diffalg {

struct CliConfig {
    uint32_t m = 2;
    long long max_degree = 64;
    long long max_candidates = 100000;
    bool verbose = false;

    Limits limits() const {
        Limits l;
        l.max_degree = max_degree;
        l.max_candidates = max_candidates;
        return l;
    }
};

// Command bodies; each returns the full stdout text and throws diffalg
// errors on failure. The thin argv front end maps exceptions to exit codes
// 1 (parse/parameter), 2 (resource cap), 3 (certification failure).

std::string cmd_eval(const CliConfig& cfg, std::string_view expr);
std::string cmd_compose(const CliConfig& cfg, std::istream& pairs);
std::string cmd_normalize(const CliConfig& cfg, std::istream& word);
std::string cmd_reduce(const CliConfig& cfg, std::string_view fx, std::string_view fy);
std::string cmd_membership(const CliConfig& cfg, std::string_view u, std::string_view h);
std::string cmd_anick(const CliConfig& cfg);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffalg

#endif
