#include "gbsf/poly_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gbsf {

namespace {

std::string term_to_text(const Term& t) {
    std::ostringstream out;
    Rational c = t.coeff > 0 ? t.coeff : -t.coeff;
    bool printed = false;
    if (t.mono.is_one() || c != 1) {
        out << c.get_str();
        printed = true;
    }
    for (int v = 1; v <= t.mono.nvars(); ++v) {
        int e = t.mono.exponent(v);
        if (e == 0) continue;
        if (printed) out << "*";
        out << "x" << v;
        if (e > 1) out << "^" << e;
        printed = true;
    }
    return out.str();
}

}  // namespace

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : p.terms()) {
        if (first) {
            if (t.coeff < 0) out << "-";
            out << term_to_text(t);
            first = false;
        } else {
            out << (t.coeff < 0 ? " - " : " + ") << term_to_text(t);
        }
    }
    return out.str();
}

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw std::invalid_argument("parse_polynomial: expected an integer");
        return text_.substr(start, pos_ - start);
    }

  private:
    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const TermOrder& order) {
    Scanner scan(text);
    std::vector<Term> terms;
    bool first = true;
    while (!scan.done()) {
        bool negative = false;
        if (scan.consume('-')) negative = true;
        else if (scan.consume('+')) negative = false;
        else if (!first) throw std::invalid_argument("parse_polynomial: expected '+' or '-'");
        first = false;

        Rational coeff(1);
        Monomial mono(order.nvars());
        bool saw_factor = false;
        for (;;) {
            char c = scan.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = scan.integer();
                std::string den = "1";
                if (scan.consume('/')) den = scan.integer();
                coeff *= parse_rational(num + "/" + den);
                saw_factor = true;
            } else if (c == 'x') {
                scan.consume('x');
                long var = 0, exp = 1;
                try {
                    var = std::stol(scan.integer());
                    if (scan.consume('^')) exp = std::stol(scan.integer());
                } catch (const std::out_of_range&) {
                    throw std::invalid_argument("parse_polynomial: index or exponent too large");
                }
                if (var < 1 || var > order.nvars())
                    throw std::invalid_argument("parse_polynomial: variable index out of range");
                if (exp < 0 || exp > (1 << 20))
                    throw std::invalid_argument("parse_polynomial: exponent out of range");
                mono.set_exponent(static_cast<int>(var),
                                  mono.exponent(static_cast<int>(var)) + static_cast<int>(exp));
                saw_factor = true;
            } else {
                throw std::invalid_argument("parse_polynomial: unexpected character");
            }
            if (!scan.consume('*')) break;
        }
        if (!saw_factor) throw std::invalid_argument("parse_polynomial: empty term");
        if (negative) coeff = -coeff;
        terms.push_back(Term{coeff, mono});
    }
    if (terms.empty()) return Polynomial::zero(order);
    // A lone "0" parses as the constant zero term and drops out here.
    return Polynomial::from_terms(std::move(terms), order);
}

std::string to_json(const Polynomial& p) {
    nlohmann::json j;
    j["terms"] = nlohmann::json::array();
    for (const Term& t : p.terms()) {
        nlohmann::json jt;
        jt["c"] = t.coeff.get_str();
        jt["e"] = t.mono.exponents();
        j["terms"].push_back(jt);
    }
    return j.dump();
}

Polynomial polynomial_from_json(const std::string& json_text, const TermOrder& order) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::vector<Term> terms;
    for (const auto& jt : j.at("terms")) {
        Rational c = parse_rational(jt.at("c").get<std::string>());
        std::vector<int> exps = jt.at("e").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != order.nvars())
            throw std::invalid_argument("polynomial_from_json: exponent length mismatch");
        terms.push_back(Term{c, Monomial::from_exponents(std::move(exps))});
    }
    return Polynomial::from_terms(std::move(terms), order);
}

std::string order_to_string(const TermOrder& order) {
    std::ostringstream out;
    out << to_string(order.family()) << "[";
    for (size_t i = 0; i < order.ranking().size(); ++i) {
        if (i) out << ",";
        out << order.ranking()[i];
    }
    out << "]";
    return out.str();
}

std::string basis_to_json(const GroebnerBasis& basis, int n, int k) {
    nlohmann::json j;
    j["n"] = n;
    j["k"] = k;
    j["order"] = {{"family", to_string(basis.order.family())}, {"ranking", basis.order.ranking()}};
    j["sigma"] = basis.order.ranking();
    j["reduced"] = basis.reduced;
    j["generators"] = nlohmann::json::array();
    for (const Polynomial& g : basis.generators) {
        j["generators"].push_back(nlohmann::json::parse(to_json(g)));
    }
    return j.dump(2);
}

std::string basis_to_cas(const GroebnerBasis& basis) {
    std::ostringstream out;
    for (const Polynomial& g : basis.generators) out << to_text(g) << "\n";
    return out.str();
}

}  // namespace gbsf
