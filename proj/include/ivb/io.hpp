#ifndef IVB_IO_HPP
#define IVB_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "ivb/ordering.hpp"
#include "ivb/polynomial.hpp"

namespace ivb {

std::string to_string(const Monomial& m, const VarContext& ctx);

// Single-character stream over one expression with 1-based error positions.
class TextScanner {
public:
    TextScanner(std::string text, int line) : text_(std::move(text)), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const std::string& what) {
        if (!consume(c)) fail("expected " + what);
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, static_cast<int>(pos_) + 1);
    }

    std::optional<std::string> identifier();
    std::optional<std::string> number();

    int line() const { return line_; }

private:
    std::string text_;
    std::size_t pos_ = 0;
    int line_;
};

Monomial parse_monomial(const std::string& text, const VarContext& ctx, int line = 1);

// Parsed key/value problem description; see the file grammar in the README.
struct ProblemFile {
    std::vector<std::string> vars;
    OrderKind order = OrderKind::degrevlex;
    unsigned long characteristic = 0;
    bool diff_mode = false;
    std::vector<std::string> unknowns;
    std::vector<std::string> body;
    std::vector<int> body_lines;
};

ProblemFile parse_problem_file(const std::string& content);
ProblemFile load_problem_file(const std::string& path);

namespace detail {

struct ParsedTerm {
    std::string coeff_num = "1";
    std::string coeff_den = "1";
    bool negative = false;
    Monomial mon;
    // diff mode
    bool has_derivative = false;
    std::size_t unknown = 0;
    Monomial multi_index;
};

// Shared term-list parser; `unknowns` empty means plain polynomial mode.
std::vector<ParsedTerm> parse_terms(const std::string& text, const VarContext& ctx,
                                    const std::vector<std::string>& unknowns, int line);

std::string multiply_decimal(const std::string& a, const std::string& b);

}  // namespace detail

template <typename F>
Polynomial<F> parse_polynomial(const std::string& text, const RingPtr<F>& ring, int line = 1) {
    auto parsed = detail::parse_terms(text, *ring->vars, {}, line);
    std::vector<Term<F>> terms;
    terms.reserve(parsed.size());
    for (auto& t : parsed) {
        auto c = ring->field.from_fraction(t.coeff_num, t.coeff_den);
        if (t.negative) c = ring->field.neg(c);
        terms.push_back({std::move(t.mon), std::move(c)});
    }
    return make_poly(ring, std::move(terms));
}

template <typename F>
std::string coeff_to_string(const F& field, const typename F::Elem& c) {
    return field.to_string(c);
}

template <typename F>
std::string to_string(const Polynomial<F>& f) {
    if (f.is_zero()) return "0";
    const auto& ring = *f.ring();
    const auto& fld = ring.field;
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        auto c = t.coeff;
        bool negative = fld.is_negative(c);
        if (negative) c = fld.neg(c);
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string cs = fld.to_string(c);
        if (t.mon.is_one()) {
            out += cs;
        } else {
            if (!fld.is_one(c)) out += cs + "*";
            out += to_string(t.mon, *ring.vars);
        }
    }
    return out;
}

}  // namespace ivb

#endif
