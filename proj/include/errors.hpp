#pragma once

#include <stdexcept>
#include <string>

namespace pw {

class pw_error : public std::runtime_error {
public:
    pw_error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct shape_error : pw_error {
    explicit shape_error(const std::string& m) : pw_error("shape", m) {}
};
struct degenerate_flag_error : pw_error {
    explicit degenerate_flag_error(const std::string& m) : pw_error("degenerate-flag", m) {}
};
struct invalid_permutation_error : pw_error {
    explicit invalid_permutation_error(const std::string& m) : pw_error("invalid-permutation", m) {}
};
struct toggle_error : pw_error {
    explicit toggle_error(const std::string& m) : pw_error("toggle-not-applicable", m) {}
};
struct le_error : pw_error {
    explicit le_error(const std::string& m) : pw_error("le-condition", m) {}
};
struct graph_error : pw_error {
    explicit graph_error(const std::string& m) : pw_error("graph", m) {}
};
struct braid_error : pw_error {
    explicit braid_error(const std::string& m) : pw_error("braid", m) {}
};
struct weave_error : pw_error {
    explicit weave_error(const std::string& m) : pw_error("weave", m) {}
};
struct chain_error : pw_error {
    explicit chain_error(const std::string& m) : pw_error("chain", m) {}
};
struct stratum_error : pw_error {
    explicit stratum_error(const std::string& m) : pw_error("not-in-stratum", m) {}
};
struct mutation_error : pw_error {
    explicit mutation_error(const std::string& m) : pw_error("mutation", m) {}
};
struct twist_error : pw_error {
    explicit twist_error(const std::string& m) : pw_error("twist", m) {}
};
struct search_error : pw_error {
    explicit search_error(const std::string& m) : pw_error("search-exhausted", m) {}
};
struct parse_error : pw_error {
    explicit parse_error(const std::string& m) : pw_error("parse", m) {}
};

}  // namespace pw
