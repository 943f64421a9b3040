#ifndef VOTOPES_CLI_IO_HPP
#define VOTOPES_CLI_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "votopes/polytope.hpp"

namespace votopes {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Normaliz-style input: amb_space, row blocks for inequalities (closed) and
// excluded_faces (strict), and the flags nonnegative / total_degree. Each
// row must sit on its own line with exactly amb_space integer tokens.
struct InputDocument {
    int ambient_dim = 0;
    std::vector<std::vector<long long>> inequalities;
    std::vector<std::vector<long long>> excluded_faces;
    bool nonnegative = false;
    bool total_degree = false;

    bool operator==(const InputDocument&) const = default;
};

InputDocument parse_input(const std::string& text);
std::string emit_input(const HPolytope& p);

HPolytope to_polytope(const InputDocument& doc);
InputDocument from_polytope(const HPolytope& p);

// Ordered, labeled key-value output; render() is byte-stable for identical
// content. render_flat() emits the machine-readable "key=value" form.
class OutputDocument {
  public:
    void section(const std::string& title);
    void entry(const std::string& key, const std::string& value);

    std::string render() const;
    std::string render_flat() const;

  private:
    // (key, value); a section marker has an empty value and key = title
    std::vector<std::pair<std::string, std::string>> items_;
    std::vector<bool> is_section_;
};

// Full command-line surface; returns the process exit code (0 success,
// 2 parse/usage error, 3 budget exceeded).
int run_cli(int argc, const char* const* argv);

}  // namespace votopes

#endif
