#include "ivb/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ivb {

std::string to_string(const Monomial& m, const VarContext& ctx) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        Exponent e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.name(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::optional<std::string> TextScanner::identifier() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    char c = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
    std::string id;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        id += text_[pos_++];
    return id;
}

std::optional<std::string> TextScanner::number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        return std::nullopt;
    std::string num;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        num += text_[pos_++];
    return num;
}

namespace detail {

namespace {

Exponent parse_exponent(TextScanner& sc) {
    auto num = sc.number();
    if (!num) sc.fail("expected exponent");
    unsigned long long v = 0;
    for (char c : *num) {
        v = v * 10 + static_cast<unsigned long long>(c - '0');
        if (v > 0xffffffffull) sc.fail("exponent too large");
    }
    return static_cast<Exponent>(v);
}

}  // namespace

std::vector<ParsedTerm> parse_terms(const std::string& text, const VarContext& ctx,
                                    const std::vector<std::string>& unknowns, int line) {
    TextScanner sc(text, line);
    std::vector<ParsedTerm> terms;
    if (sc.at_end()) sc.fail("empty expression");
    bool negative = sc.consume('-');
    if (!negative) sc.consume('+');
    for (;;) {
        ParsedTerm term;
        term.negative = negative;
        term.mon = Monomial(ctx.size());
        term.multi_index = Monomial(ctx.size());
        bool saw_factor = false;
        for (;;) {
            if (auto num = sc.number()) {
                term.coeff_num = multiply_decimal(term.coeff_num, *num);
                if (sc.consume('/')) {
                    auto den = sc.number();
                    if (!den) sc.fail("expected denominator");
                    if (*den == "0") sc.fail("zero denominator");
                    term.coeff_den = multiply_decimal(term.coeff_den, *den);
                }
            } else if (auto id = sc.identifier()) {
                std::size_t uidx = VarContext::npos;
                for (std::size_t k = 0; k < unknowns.size(); ++k)
                    if (unknowns[k] == *id) uidx = k;
                if (uidx != VarContext::npos) {
                    if (term.has_derivative) sc.fail("product of derivatives is not linear");
                    term.has_derivative = true;
                    term.unknown = uidx;
                    if (sc.consume('[')) {
                        if (!sc.consume(']')) {
                            for (;;) {
                                auto var = sc.identifier();
                                if (!var) sc.fail("expected variable name in derivative");
                                std::size_t vi = ctx.index_of(*var);
                                if (vi == VarContext::npos) sc.fail("unknown variable '" + *var + "'");
                                term.multi_index = mul_var(term.multi_index, vi);
                                if (sc.consume(']')) break;
                                sc.expect(',', "',' or ']'");
                            }
                        }
                    }
                } else {
                    std::size_t vi = ctx.index_of(*id);
                    if (vi == VarContext::npos) sc.fail("unknown variable '" + *id + "'");
                    Exponent e = 1;
                    if (sc.consume('^')) e = parse_exponent(sc);
                    term.mon = mul(term.mon, Monomial::variable(ctx.size(), vi, e));
                }
            } else {
                sc.fail("expected coefficient or variable");
            }
            saw_factor = true;
            if (!sc.consume('*')) break;
        }
        if (!saw_factor) sc.fail("empty term");
        if (!unknowns.empty()) {
            if (!term.has_derivative)
                sc.fail("term without derivative in a linear differential polynomial");
            if (!term.mon.is_one())
                sc.fail("variable coefficients are not supported in differential mode");
        }
        terms.push_back(std::move(term));
        if (sc.at_end()) break;
        if (sc.consume('-')) negative = true;
        else if (sc.consume('+')) negative = false;
        else sc.fail("expected '+', '-' or end of expression");
    }
    return terms;
}

std::string multiply_decimal(const std::string& a, const std::string& b) {
    // Schoolbook product of nonnegative decimal strings; inputs are small.
    std::vector<int> r(a.size() + b.size(), 0);
    for (std::size_t i = a.size(); i-- > 0;)
        for (std::size_t j = b.size(); j-- > 0;) {
            int v = (a[i] - '0') * (b[j] - '0') + r[i + j + 1];
            r[i + j + 1] = v % 10;
            r[i + j] += v / 10;
        }
    std::string out;
    for (int d : r)
        if (!(out.empty() && d == 0)) out += static_cast<char>('0' + d);
    return out.empty() ? "0" : out;
}

}  // namespace detail

Monomial parse_monomial(const std::string& text, const VarContext& ctx, int line) {
    auto terms = detail::parse_terms(text, ctx, {}, line);
    if (terms.size() != 1 || terms[0].negative || terms[0].coeff_num != "1" ||
        terms[0].coeff_den != "1")
        throw parse_error("expected a plain monomial", line, 1);
    return terms[0].mon;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_names(const std::string& s, int line) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        part = trim(part);
        if (part.empty()) throw parse_error("empty name in list", line, 1);
        out.push_back(part);
    }
    return out;
}

}  // namespace

ProblemFile parse_problem_file(const std::string& content) {
    ProblemFile pf;
    std::stringstream ss(content);
    std::string raw;
    int line = 0;
    bool in_body = false;
    bool saw_vars = false;
    while (std::getline(ss, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (in_body) {
            pf.body.push_back(s);
            pf.body_lines.push_back(line);
            continue;
        }
        auto colon = s.find(':');
        if (colon == std::string::npos) throw parse_error("expected 'key: value'", line, 1);
        std::string key = trim(s.substr(0, colon));
        std::string value = trim(s.substr(colon + 1));
        if (key == "vars") {
            pf.vars = split_names(value, line);
            saw_vars = true;
        } else if (key == "order") {
            if (!order_kind_from_string(value, pf.order))
                throw parse_error("unknown ordering '" + value + "'", line, 1);
        } else if (key == "char") {
            try {
                pf.characteristic = std::stoul(value);
            } catch (...) {
                throw parse_error("invalid characteristic '" + value + "'", line, 1);
            }
        } else if (key == "mode") {
            if (value == "diff") pf.diff_mode = true;
            else if (value == "poly") pf.diff_mode = false;
            else throw parse_error("unknown mode '" + value + "'", line, 1);
        } else if (key == "unknowns") {
            pf.unknowns = split_names(value, line);
        } else if (key == "polys") {
            if (!value.empty()) throw parse_error("'polys:' takes no inline value", line, 1);
            in_body = true;
        } else {
            throw parse_error("unknown key '" + key + "'", line, 1);
        }
    }
    if (!saw_vars) throw parse_error("missing 'vars:' declaration", line, 1);
    if (!in_body || pf.body.empty()) throw parse_error("missing or empty 'polys:' section", line, 1);
    if (pf.diff_mode && pf.unknowns.empty())
        throw parse_error("diff mode requires 'unknowns:'", line, 1);
    return pf;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem_file(ss.str());
}

}  // namespace ivb
