#include "augnewton/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace augnewton {

VariableList::VariableList(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw std::invalid_argument("variable list must not be empty");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("variable name must not be empty");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
    }
}

VariableList VariableList::split(std::string_view csv) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos)
            comma = csv.size();
        std::string part(csv.substr(start, comma - start));
        // trim
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front())))
            part.erase(part.begin());
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back())))
            part.pop_back();
        names.push_back(std::move(part));
        if (comma == csv.size())
            break;
        start = comma + 1;
    }
    return VariableList(std::move(names));
}

std::optional<std::size_t> VariableList::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

VariableList VariableList::extended(const std::string& fresh_name) const {
    if (index_of(fresh_name))
        throw std::invalid_argument("variable name already in use: " + fresh_name);
    auto names = names_;
    names.push_back(fresh_name);
    return VariableList(std::move(names));
}

Exponent checked_add(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in addition");
    return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in multiplication");
    return r;
}

bool ExponentVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    if (size() != other.size())
        throw std::invalid_argument("exponent vector length mismatch");
    std::vector<Exponent> out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = checked_add(e_[i], other.e_[i]);
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
    return *this + (-other);
}

ExponentVector ExponentVector::operator-() const {
    std::vector<Exponent> out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = checked_mul(e_[i], -1);
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::scaled(Exponent factor) const {
    std::vector<Exponent> out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = checked_mul(e_[i], factor);
    return ExponentVector(std::move(out));
}

namespace {

// Canonicalize: sort, then drop exponent vectors appearing an even number of
// times (characteristic 2).
void canonicalize(std::vector<ExponentVector>& support) {
    std::sort(support.begin(), support.end());
    std::vector<ExponentVector> out;
    out.reserve(support.size());
    std::size_t i = 0;
    while (i < support.size()) {
        std::size_t j = i;
        while (j < support.size() && support[j] == support[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(support[i]);
        i = j;
    }
    support = std::move(out);
}

void require_same_vars(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("polynomials over different variable lists");
}

}  // namespace

LaurentPoly::LaurentPoly(VariableList vars, std::vector<ExponentVector> support)
    : vars_(std::move(vars)), support_(std::move(support)) {
    for (const auto& e : support_)
        if (e.size() != vars_.size())
            throw std::invalid_argument("exponent vector length does not match variable list");
    canonicalize(support_);
}

LaurentPoly LaurentPoly::one(VariableList vars) {
    auto k = vars.size();
    return LaurentPoly(std::move(vars), {ExponentVector::zero(k)});
}

LaurentPoly LaurentPoly::monomial(VariableList vars, ExponentVector e) {
    return LaurentPoly(std::move(vars), {std::move(e)});
}

std::optional<ExponentVector> LaurentPoly::as_monomial() const {
    if (support_.size() == 1)
        return support_[0];
    return std::nullopt;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    require_same_vars(*this, other);
    std::vector<ExponentVector> out;
    out.reserve(support_.size() + other.support_.size());
    std::set_symmetric_difference(support_.begin(), support_.end(),
                                  other.support_.begin(), other.support_.end(),
                                  std::back_inserter(out));
    LaurentPoly r(vars_);
    r.support_ = std::move(out);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    require_same_vars(*this, other);
    std::vector<ExponentVector> out;
    out.reserve(support_.size() * other.support_.size());
    for (const auto& a : support_)
        for (const auto& b : other.support_)
            out.push_back(a + b);
    canonicalize(out);
    LaurentPoly r(vars_);
    r.support_ = std::move(out);
    return r;
}

LaurentPoly LaurentPoly::times_monomial(const ExponentVector& e) const {
    std::vector<ExponentVector> out;
    out.reserve(support_.size());
    for (const auto& a : support_)
        out.push_back(a + e);
    LaurentPoly r(vars_);
    r.support_ = std::move(out);  // translation preserves order and distinctness
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    return vars_ == other.vars_ && support_ == other.support_;
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
    LaurentPoly result = LaurentPoly::one(p.vars());
    if (n == 0)
        return result;
    LaurentPoly sq = p;
    while (n) {
        if (n & 1)
            result = result * sq;
        n >>= 1;
        if (n)
            sq = sq * sq;
    }
    return result;
}

MonomialSubstitution::MonomialSubstitution(VariableList source, VariableList target,
                                           std::vector<ExponentVector> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size())
        throw std::invalid_argument("substitution needs one image per source variable");
    for (const auto& img : images_)
        if (img.size() != target_.size())
            throw std::invalid_argument("substitution image has wrong arity");
}

LaurentPoly substitute(const LaurentPoly& p, const MonomialSubstitution& sigma) {
    if (p.vars() != sigma.source())
        throw std::invalid_argument("polynomial variables do not match substitution source");
    std::vector<ExponentVector> out;
    out.reserve(p.support().size());
    const std::size_t k = sigma.source().size();
    for (const auto& e : p.support()) {
        ExponentVector acc = ExponentVector::zero(sigma.target().size());
        for (std::size_t i = 0; i < k; ++i)
            if (e[i] != 0)
                acc = acc + sigma.image(i).scaled(e[i]);
        out.push_back(std::move(acc));
    }
    return LaurentPoly(sigma.target(), std::move(out));
}

LaurentPoly extend_with_pinch_variable(const LaurentPoly& f, const LaurentPoly& g,
                                       const std::string& fresh_name) {
    if (f.vars() != g.vars())
        throw std::invalid_argument("polynomials over different variable lists");
    VariableList ext = f.vars().extended(fresh_name);
    std::vector<ExponentVector> out;
    out.reserve(f.support().size() + g.support().size());
    for (const auto& e : f.support()) {
        auto v = e.entries();
        v.push_back(0);
        out.emplace_back(std::move(v));
    }
    for (const auto& e : g.support()) {
        auto v = e.entries();
        v.push_back(-1);
        out.emplace_back(std::move(v));
    }
    return LaurentPoly(std::move(ext), std::move(out));
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar in the header.

namespace {

class Parser {
public:
    Parser(std::string_view text, const VariableList& vars) : text_(text), vars_(vars) {}

    LaurentPoly parse() {
        skip_ws();
        // extension: bare "0" is the zero polynomial
        if (peek() == '0') {
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (at_end())
                return LaurentPoly::zero(vars_);
            pos_ = save;
        }
        std::vector<ExponentVector> terms;
        terms.push_back(parse_term());
        skip_ws();
        while (!at_end()) {
            expect('+');
            terms.push_back(parse_term());
            skip_ws();
        }
        return LaurentPoly(vars_, std::move(terms));
    }

private:
    ExponentVector parse_term() {
        ExponentVector acc = parse_factor();
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            acc = acc + parse_factor();
            skip_ws();
        }
        return acc;
    }

    ExponentVector parse_factor() {
        skip_ws();
        if (at_end())
            throw ParseError("expected a factor", pos_);
        char c = peek();
        if (c == '1') {
            ++pos_;
            return ExponentVector::zero(vars_.size());
        }
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        std::size_t ident_pos = pos_;
        std::string ident;
        while (!at_end()) {
            char d = peek();
            if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
                ident.push_back(d);
                ++pos_;
            } else {
                break;
            }
        }
        auto idx = vars_.index_of(ident);
        if (!idx)
            throw ParseError("unknown variable '" + ident + "'", ident_pos);
        Exponent exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            exp = parse_integer();
        }
        ExponentVector e = ExponentVector::zero(vars_.size());
        e[*idx] = exp;
        return e;
    }

    Exponent parse_integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", pos_);
        Exponent value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = checked_add(checked_mul(value, 10), peek() - '0');
            ++pos_;
        }
        return neg ? -value : value;
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    std::string_view text_;
    const VariableList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const VariableList& vars) {
    return Parser(text, vars).parse();
}

std::string render(const LaurentPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first_term = true;
    for (const auto& e : p.support()) {
        if (!first_term)
            out += " + ";
        first_term = false;
        bool first_factor = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!first_factor)
                out += "*";
            first_factor = false;
            out += p.vars().name(i);
            if (e[i] != 1) {
                out += "^";
                out += std::to_string(e[i]);
            }
        }
        if (first_factor)
            out += "1";
    }
    return out;
}

}  // namespace augnewton
