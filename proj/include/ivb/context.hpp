#ifndef IVB_CONTEXT_HPP
#define IVB_CONTEXT_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace ivb {

// Library-level error categories. The CLI maps these onto exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible contexts, orderings or coefficient fields.
struct context_error : error {
    using error::error;
};

// Violated operation precondition (non-divisor quotient, non-basis input, ...).
struct precondition_error : error {
    using error::error;
};

// Malformed textual input; carries a 1-based position.
struct parse_error : error {
    int line;
    int column;
    parse_error(std::string msg, int line_, int column_)
        : error(std::move(msg) + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_)),
          line(line_), column(column_) {}
};

// Ordered list of variable names; position 0 is the highest variable.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw error("variable context must contain at least one variable");
        std::unordered_set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty())
                throw error("variable names must be nonempty");
            if (!seen.insert(n).second)
                throw error("duplicate variable name '" + n + "'");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a variable name, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return npos;
    }

    friend bool operator==(const VarContext& a, const VarContext& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
}

inline void require_same_context(const VarContext& a, const VarContext& b) {
    if (!(a == b)) throw context_error("mismatched variable contexts");
}

}  // namespace ivb

#endif
