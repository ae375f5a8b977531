#include "gps/parser.hpp"

#include "gps/errors.hpp"

#include <cctype>
#include <sstream>

namespace gps {

namespace {

struct Token {
    enum Kind { Name, Number, Punct, End } kind = End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at(const std::string& p) const { return tok_.kind == Token::Punct && tok_.text == p; }
    bool at_name(const std::string& n) const { return tok_.kind == Token::Name && tok_.text == n; }
    Token expect_punct(const std::string& p) {
        if (!at(p)) fail("expected '" + p + "'");
        return next();
    }
    Token expect_name() {
        if (tok_.kind != Token::Name) fail("expected identifier");
        return next();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + (tok_.kind == Token::End
                                     ? " (at end of input)"
                                     : ", found '" + tok_.text + "'"),
                          tok_.line, tok_.col);
    }

    struct State {
        size_t pos;
        int line, col;
        Token tok;
    };
    State save() const { return {pos_, line_, col_, tok_}; }
    void restore(const State& s) { pos_ = s.pos; line_ = s.line; col_ = s.col; tok_ = s.tok; }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == '\n') { ++line_; col_ = 1; ++pos_; continue; }
            if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++pos_; continue; }
            break;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::End;
            tok_.text.clear();
            return;
        }
        size_t start = pos_;
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::Name;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            // one decimal point, only when followed by a digit (so "1..4" lexes
            // as "1", ".", ".", "4")
            if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
            tok_.kind = Token::Number;
        } else {
            ++pos_;
            tok_.kind = Token::Punct;
        }
        tok_.text = src_.substr(start, pos_ - start);
        col_ += static_cast<int>(pos_ - start);
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// Prime factorization for the log(n) sugar; n is small by construction.
std::map<long, int> factorize(long n) {
    std::map<long, int> f;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) { ++f[p]; n /= p; }
    if (n > 1) ++f[n];
    return f;
}

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ProblemFile parse_file() {
        ProblemFile pf;
        std::vector<BasisGenerator> gens;
        bool sig_done = false;
        while (lex_.peek().kind != Token::End) {
            if (lex_.at_name("basis")) {
                if (sig_done) lex_.fail("basis declarations must precede 'vars'");
                lex_.next();
                gens.push_back(parse_basis_decl());
            } else if (lex_.at_name("vars")) {
                if (sig_done) lex_.fail("duplicate 'vars' declaration");
                lex_.next();
                pf.basis = ExponentBasis::make(gens);
                pf.signature = parse_varspec(pf.basis);
                sig_done = true;
            } else if (lex_.at_name("solve") || lex_.at_name("monomialize") ||
                       lex_.at_name("present") || lex_.at_name("verify")) {
                if (!sig_done) lex_.fail("directive before 'vars' declaration");
                pf.directives.push_back(parse_directive(pf));
            } else {
                if (!sig_done) lex_.fail("series definition before 'vars' declaration");
                Token name = lex_.expect_name();
                if (pf.signature.slot_of(name.text))
                    throw parse_error("series name '" + name.text + "' collides with a variable",
                                      name.line, name.col);
                lex_.expect_punct("=");
                GSeries f = parse_expr(pf.signature);
                lex_.expect_punct(";");
                if (!pf.series.count(name.text)) pf.series_order.push_back(name.text);
                pf.series.insert_or_assign(name.text, std::move(f));
            }
        }
        if (!sig_done) {
            pf.basis = ExponentBasis::make(gens);
            pf.signature.basis = pf.basis;
        }
        return pf;
    }

    GSeries parse_single(const VarSignature& sig) {
        GSeries f = parse_expr(sig);
        if (lex_.peek().kind != Token::End) lex_.fail("unexpected trailing input");
        return f;
    }

private:
    BasisGenerator parse_basis_decl() {
        BasisGenerator g;
        g.name = lex_.expect_name().text;
        lex_.expect_punct("=");
        if (lex_.at_name("alg")) {
            lex_.next();
            lex_.expect_punct("(");
            g.minpoly = parse_univariate_poly();
            lex_.expect_punct(",");
            g.enclosure = parse_interval();
            lex_.expect_punct(")");
        } else if (lex_.at_name("interval")) {
            lex_.next();
            lex_.expect_punct("(");
            g.enclosure = parse_interval();
            lex_.expect_punct(")");
        } else {
            lex_.fail("expected 'alg' or 'interval'");
        }
        lex_.expect_punct(";");
        return g;
    }

    // Univariate polynomial like x^2-2 in one dummy variable.
    QPoly parse_univariate_poly() {
        std::vector<Rational> coeffs;
        std::string var;
        auto addc = [&](size_t deg, const Rational& c) {
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
            coeffs[deg] += c;
        };
        int sign = 1;
        if (lex_.at("-")) { lex_.next(); sign = -1; }
        while (true) {
            Rational c(1);
            size_t deg = 0;
            bool have_num = false, have_var = false;
            if (lex_.peek().kind == Token::Number) {
                c = parse_number();
                have_num = true;
                if (lex_.at("/")) {
                    lex_.next();
                    c /= parse_number();
                }
            }
            if (have_num && lex_.at("*")) lex_.next();
            if (lex_.peek().kind == Token::Name) {
                Token v = lex_.next();
                if (var.empty()) var = v.text;
                else if (var != v.text)
                    throw parse_error("polynomial must be univariate", v.line, v.col);
                deg = 1;
                have_var = true;
                if (lex_.at("^")) {
                    lex_.next();
                    Rational d = parse_number();
                    if (!is_integer(d) || d < 1) lex_.fail("expected integer power");
                    deg = d.convert_to<size_t>();
                }
            }
            if (!have_num && !have_var) lex_.fail("expected polynomial term");
            addc(deg, sign * c);
            if (lex_.at("+")) { lex_.next(); sign = 1; }
            else if (lex_.at("-")) { lex_.next(); sign = -1; }
            else break;
        }
        return QPoly(std::move(coeffs));
    }

    QInterval parse_interval() {
        lex_.expect_punct("[");
        Rational lo = parse_signed_number();
        lex_.expect_punct(",");
        Rational hi = parse_signed_number();
        lex_.expect_punct("]");
        if (lo > hi) lex_.fail("interval endpoints out of order");
        return QInterval(lo, hi);
    }

    Rational parse_number() {
        Token t = lex_.peek();
        if (t.kind != Token::Number) lex_.fail("expected number");
        lex_.next();
        auto v = parse_rational(t.text);
        if (!v) throw parse_error("malformed number '" + t.text + "'", t.line, t.col);
        return *v;
    }

    Rational parse_signed_number() {
        int sign = 1;
        if (lex_.at("-")) { lex_.next(); sign = -1; }
        Rational v = parse_number();
        if (lex_.at("/")) {
            lex_.next();
            Rational d = parse_number();
            if (d == 0) lex_.fail("zero denominator");
            v /= d;
        }
        return sign * v;
    }

    VarSignature parse_varspec(const BasisPtr& basis) {
        VarSignature sig;
        sig.basis = basis;
        std::vector<std::string> gen, std_;
        while (true) {
            std::vector<std::string> group;
            while (lex_.peek().kind == Token::Name && !lex_.at_name("generalized") &&
                   !lex_.at_name("standard"))
                group.push_back(lex_.next().text);
            if (group.empty()) lex_.fail("expected variable names");
            lex_.expect_punct(":");
            Token kind = lex_.expect_name();
            if (kind.text == "generalized") gen.insert(gen.end(), group.begin(), group.end());
            else if (kind.text == "standard") std_.insert(std_.end(), group.begin(), group.end());
            else throw parse_error("expected 'generalized' or 'standard'", kind.line, kind.col);
            if (lex_.at(",")) { lex_.next(); continue; }
            break;
        }
        lex_.expect_punct(";");
        sig.m = static_cast<int>(gen.size());
        sig.n = static_cast<int>(std_.size());
        sig.names = gen;
        sig.names.insert(sig.names.end(), std_.begin(), std_.end());
        for (size_t i = 0; i < sig.names.size(); ++i)
            for (size_t j = i + 1; j < sig.names.size(); ++j)
                if (sig.names[i] == sig.names[j]) lex_.fail("duplicate variable '" + sig.names[i] + "'");
        for (const auto& nm : sig.names)
            if (basis->find(nm)) lex_.fail("variable '" + nm + "' collides with a basis generator");
        return sig;
    }

    Directive parse_directive(const ProblemFile& pf) {
        Directive d;
        d.kind = lex_.expect_name().text;
        Token series = lex_.expect_name();
        if (!pf.series.count(series.text))
            throw parse_error("undeclared series '" + series.text + "'", series.line, series.col);
        d.series = series.text;
        if (lex_.at_name("respect")) {
            lex_.next();
            Token v = lex_.expect_name();
            if (!pf.signature.slot_of(v.text))
                throw parse_error("undeclared variable '" + v.text + "'", v.line, v.col);
            d.respected = v.text;
        }
        while (lex_.peek().kind == Token::Name) {
            std::string key = lex_.next().text;
            if (lex_.peek().kind != Token::Number) lex_.fail("expected option value");
            d.options[key] = lex_.next().text;
        }
        lex_.expect_punct(";");
        if ((d.kind == "solve" || d.kind == "monomialize" || d.kind == "present") &&
            d.respected.empty())
            throw parse_error("directive '" + d.kind + "' needs 'respect <variable>'",
                              series.line, series.col);
        return d;
    }

    GSeries parse_expr(const VarSignature& sig) {
        GSeries acc = parse_term(sig);
        while (lex_.at("+") || lex_.at("-")) {
            bool plus = lex_.at("+");
            lex_.next();
            GSeries t = parse_term(sig);
            acc = plus ? acc + t : acc - t;
        }
        return acc;
    }

    GSeries parse_term(const VarSignature& sig) {
        GSeries acc = parse_factor(sig);
        while (lex_.at("*")) {
            lex_.next();
            acc = acc * parse_factor(sig);
        }
        return acc;
    }

    GSeries parse_factor(const VarSignature& sig) {
        Token t = lex_.peek();
        if (t.kind == Token::Number) {
            Rational v = parse_number();
            if (lex_.at("/")) {
                lex_.next();
                Rational d = parse_number();
                if (d == 0) lex_.fail("zero denominator");
                v /= d;
            }
            return GSeries::constant(sig, Coefficient(v));
        }
        if (lex_.at("-")) {
            lex_.next();
            return -parse_factor(sig);
        }
        if (lex_.at("(")) {
            lex_.next();
            GSeries e = parse_expr(sig);
            lex_.expect_punct(")");
            return e;
        }
        if (t.kind == Token::Name) {
            if (t.text == "sum") return parse_sum(sig);
            lex_.next();
            auto slot = sig.slot_of(t.text);
            if (!slot)
                throw parse_error("undeclared identifier '" + t.text + "'", t.line, t.col);
            Exponent e = sig.exp_rational(Rational(1));
            if (lex_.at("^")) {
                lex_.next();
                e = parse_exponent(sig);
            }
            return make_power(sig, *slot, e, t);
        }
        lex_.fail("expected a series factor");
    }

    GSeries make_power(const VarSignature& sig, int slot, const Exponent& e, const Token& at) {
        if (e.sign() < 0)
            throw parse_error("negative exponent on variable '" + sig.name(slot) + "'",
                              at.line, at.col);
        if (!sig.is_generalized(slot) && !e.is_natural())
            throw parse_error("non-integer exponent on standard variable '" + sig.name(slot) + "'",
                              at.line, at.col);
        ExpVec ev = sig.expvec_zero();
        ev[slot] = e;
        return GSeries::monomial(sig, std::move(ev), Coefficient(Rational(1)));
    }

    // exponent := INT | "(" combo ")" with combo a signed sum of rationals,
    // rational multiples of basis generators, and log(INT) sugar.
    Exponent parse_exponent(const VarSignature& sig) {
        if (lex_.peek().kind == Token::Number) {
            Rational v = parse_number();
            return sig.exp_rational(v);
        }
        lex_.expect_punct("(");
        Exponent acc = sig.exp_zero();
        int sign = 1;
        if (lex_.at("-")) { lex_.next(); sign = -1; }
        while (true) {
            acc = acc + parse_exponent_atom(sig).scaled(Rational(sign));
            if (lex_.at("+")) { lex_.next(); sign = 1; continue; }
            if (lex_.at("-")) { lex_.next(); sign = -1; continue; }
            break;
        }
        lex_.expect_punct(")");
        return acc;
    }

    Exponent parse_exponent_atom(const VarSignature& sig) {
        Rational scale(1);
        bool have_scale = false;
        if (lex_.peek().kind == Token::Number) {
            scale = parse_number();
            have_scale = true;
            if (lex_.at("/")) {
                lex_.next();
                Rational d = parse_number();
                if (d == 0) lex_.fail("zero denominator");
                scale /= d;
            }
            if (lex_.at("*")) lex_.next();
            else return sig.exp_rational(scale); // plain rational atom
        }
        Token t = lex_.peek();
        if (t.kind != Token::Name) {
            if (have_scale) return sig.exp_rational(scale);
            lex_.fail("expected exponent");
        }
        lex_.next();
        if (t.text == "log") {
            lex_.expect_punct("(");
            Rational n;
            if (lex_.peek().kind == Token::Name) {
                Token arg = lex_.next();
                auto bound = sum_binding(arg.text);
                if (!bound)
                    throw parse_error("log() argument '" + arg.text + "' is not a bound sum index",
                                      arg.line, arg.col);
                n = Rational(*bound);
            } else {
                n = parse_number();
            }
            lex_.expect_punct(")");
            if (!is_integer(n) || n < 1) lex_.fail("log() expects a positive integer");
            return log_exponent(sig, n.convert_to<long>(), t).scaled(scale);
        }
        auto slot = sig.basis->find(t.text);
        if (!slot)
            throw parse_error("undeclared basis generator '" + t.text + "'", t.line, t.col);
        std::vector<Rational> coords(sig.basis->size(), Rational(0));
        coords[*slot] = scale;
        return Exponent(sig.basis, std::move(coords));
    }

    // log(n) = sum of e_p * log(p) over the prime factorization; each log(p)
    // must be bound to a declared generator named "logn<p>" or "log<p>".
    Exponent log_exponent(const VarSignature& sig, long n, const Token& at) {
        Exponent acc = sig.exp_zero();
        for (auto [p, e] : factorize(n)) {
            auto slot = sig.basis->find("logn" + std::to_string(p));
            if (!slot) slot = sig.basis->find("log" + std::to_string(p));
            if (!slot)
                throw parse_error("log(" + std::to_string(n) + ") needs a declared basis "
                                  "generator for log " + std::to_string(p),
                                  at.line, at.col);
            std::vector<Rational> coords(sig.basis->size(), Rational(0));
            coords[*slot] = Rational(e);
            acc = acc + Exponent(sig.basis, std::move(coords));
        }
        return acc;
    }

    // sum(n=1..4, body): expands the body once per n with the name n bound;
    // the body is re-lexed from the same position for each value.
    GSeries parse_sum(const VarSignature& sig) {
        Token kw = lex_.next(); // 'sum'
        lex_.expect_punct("(");
        Token var = lex_.expect_name();
        lex_.expect_punct("=");
        Rational lo = parse_number();
        lex_.expect_punct(".");
        lex_.expect_punct(".");
        Rational hi = parse_number();
        lex_.expect_punct(",");
        if (!is_integer(lo) || !is_integer(hi) || lo > hi)
            throw parse_error("sum bounds must be integers lo <= hi", kw.line, kw.col);
        if (hi - lo > 4096) throw parse_error("sum range too large", kw.line, kw.col);
        sum_var_.push_back({var.text, lo.convert_to<long>()});
        Lexer::State body = lex_.save();
        GSeries acc(sig);
        for (long v = lo.convert_to<long>(); v <= hi.convert_to<long>(); ++v) {
            sum_var_.back().second = v;
            lex_.restore(body);
            acc = acc + parse_expr(sig);
        }
        sum_var_.pop_back();
        lex_.expect_punct(")");
        return acc;
    }

    std::optional<long> sum_binding(const std::string& name) const {
        for (auto it = sum_var_.rbegin(); it != sum_var_.rend(); ++it)
            if (it->first == name) return it->second;
        return std::nullopt;
    }

    Lexer lex_;
    std::vector<std::pair<std::string, long>> sum_var_;
};

} // namespace

const GSeries& ProblemFile::lookup(const std::string& name) const {
    auto it = series.find(name);
    if (it == series.end()) throw domain_error("unknown series '" + name + "'");
    return it->second;
}

ProblemFile parse_problem(const std::string& text) {
    Parser p(text);
    return p.parse_file();
}

GSeries parse_series(const std::string& text, const VarSignature& sig) {
    Parser p(text);
    return p.parse_single(sig);
}

std::string render(const GSeries& f) {
    if (f.is_zero()) return "0";
    // Canonical order: descending on the term map order.
    std::ostringstream os;
    std::vector<const std::pair<const ExpVec, Coefficient>*> terms;
    for (const auto& t : f.terms()) terms.push_back(&t);
    bool first = true;
    const VarSignature& sig = f.signature();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = **it;
        bool neg = c.sign() < 0;
        Coefficient a = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v].is_zero()) continue;
            std::string fct = sig.name(static_cast<int>(v));
            if (auto k = e[v].as_rational()) {
                if (*k != 1) {
                    if (is_integer(*k) && *k >= 0) fct += "^" + to_string(*k);
                    else fct += "^(" + to_string(*k) + ")";
                }
            } else {
                fct += "^(" + e[v].str() + ")";
            }
            factors.push_back(std::move(fct));
        }
        std::string coeff = a.str();
        if (factors.empty() || coeff != "1") {
            bool atomic = coeff.find(' ') == std::string::npos;
            factors.insert(factors.begin(), atomic ? coeff : "(" + coeff + ")");
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

} // namespace gps
