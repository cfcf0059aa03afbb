#ifndef heaps_polynomial_hpp
#define heaps_polynomial_hpp

#include <cstdint>
#include <string>
#include <vector>
#include <ostream>

#include <json.hpp>

#include "heaps/checked.hpp"
#include "heaps/error.hpp"

namespace heaps {

// Univariate polynomial in lambda with int64 coefficients; index = degree.
// All arithmetic is overflow checked. The zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
    static IntPolynomial lambda() { return IntPolynomial({0, 1}); }

    // lambda (lambda - 1) ... (lambda - k + 1)
    static IntPolynomial falling_factorial(unsigned k) {
        IntPolynomial out = constant(1);
        for (unsigned i = 0; i < k; ++i) {
            out = out * IntPolynomial({-static_cast<std::int64_t>(i), 1});
        }
        return out;
    }

    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    std::int64_t coeff(std::size_t degree) const noexcept {
        return degree < coeffs_.size() ? coeffs_[degree] : 0;
    }

    std::int64_t evaluate(std::int64_t x) const {
        std::int64_t out = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            out = checked_add(checked_mul(out, x), *it);
        }
        return out;
    }

    IntPolynomial& operator+=(const IntPolynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(other.coeffs_.size(), 0);
        }
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
            coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
        }
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& other) {
        return *this += other * constant(-1);
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        return IntPolynomial(std::move(out));
    }

    // Exact division of every coefficient by d; throws if any is not divisible.
    IntPolynomial divided_exactly(std::int64_t d) const {
        if (d == 0) {
            throw std::invalid_argument("division by zero");
        }
        std::vector<std::int64_t> out(coeffs_);
        for (auto& c : out) {
            if (c % d != 0) {
                throw std::domain_error("polynomial coefficient " + std::to_string(c) +
                                        " is not divisible by " + std::to_string(d));
            }
            c /= d;
        }
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // e.g. "λ^3 - 3λ^2 + 2λ"
    std::string to_string() const {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            std::int64_t c = coeffs_[d];
            if (c == 0) {
                continue;
            }
            std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
            if (out.empty()) {
                if (c < 0) {
                    out += "-";
                }
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (mag != 1 || d == 0) {
                out += std::to_string(mag);
            }
            if (d >= 1) {
                out += "λ";
            }
            if (d >= 2) {
                out += "^" + std::to_string(d);
            }
        }
        return out;
    }

    // {"coeffs": [a0, a1, ..., an]}; the zero polynomial is {"coeffs": []}
    nlohmann::json to_json() const {
        return nlohmann::json{{"coeffs", coeffs_}};
    }

    static IntPolynomial from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
            throw ParseError(ParseError::Kind::Malformed, 0, "expected {\"coeffs\": [...]}");
        }
        std::vector<std::int64_t> coeffs;
        for (const auto& c : j.at("coeffs")) {
            if (!c.is_number_integer()) {
                throw ParseError(ParseError::Kind::Malformed, 0, "non-integer coefficient " + c.dump());
            }
            coeffs.push_back(c.get<std::int64_t>());
        }
        return IntPolynomial(std::move(coeffs));
    }

    static IntPolynomial parse_json(const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(ParseError::Kind::Malformed, 0, e.what());
        }
        return from_json(j);
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<std::int64_t> coeffs_;
};

inline std::ostream& operator<<(std::ostream& out, const IntPolynomial& p) {
    return out << p.to_string();
}

}

#endif /* heaps_polynomial_hpp */
