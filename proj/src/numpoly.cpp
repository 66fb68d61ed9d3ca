#include "kdp/numpoly.hpp"

#include <stdexcept>

namespace kdp {

Integer factorial(unsigned k) {
    Integer acc = 1;
    for (unsigned j = 2; j <= k; ++j) acc *= j;
    return acc;
}

Integer binomial(const Integer& x, unsigned k) {
    Integer acc = 1;
    for (unsigned j = 0; j < k; ++j) {
        acc *= x - j;
        acc /= j + 1;  // exact: acc is C(x, j+1) * (j+1)! / (j+1)! at each step
    }
    return acc;
}

namespace {

void trim(std::vector<Integer>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

NumericalPolynomial::NumericalPolynomial(std::vector<Integer> binomial_coeffs)
    : coeffs_(std::move(binomial_coeffs)) {
    trim(coeffs_);
}

NumericalPolynomial NumericalPolynomial::constant(const Integer& c) {
    return NumericalPolynomial({c});
}

NumericalPolynomial NumericalPolynomial::binomial_shift(unsigned a, const Integer& shift) {
    std::vector<Integer> c(a + 1);
    for (unsigned k = 0; k <= a; ++k) c[k] = binomial(shift, a - k);
    return NumericalPolynomial(std::move(c));
}

NumericalPolynomial NumericalPolynomial::shifted_binomial(unsigned a, unsigned s) {
    return binomial_shift(a, Integer(a) - Integer(s));
}

const Integer& NumericalPolynomial::leading_coeff() const {
    if (is_zero()) throw std::logic_error("leading_coeff of zero polynomial");
    return coeffs_.back();
}

Integer NumericalPolynomial::operator()(const Integer& t) const {
    Integer sum = 0;
    Integer binom = 1;  // C(t, i), updated incrementally
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            binom *= t - (i - 1);
            binom /= i;
        }
        sum += coeffs_[i] * binom;
    }
    return sum;
}

std::vector<Rational> NumericalPolynomial::monomial_coeffs() const {
    if (is_zero()) return {};
    std::vector<Rational> out(coeffs_.size(), Rational(0));
    // basis[k] holds the integer coefficients of T^k in i! * C(T, i).
    std::vector<Integer> basis{1};
    Integer fact = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            // multiply by (T - (i-1))
            basis.insert(basis.begin(), 0);
            for (std::size_t k = 0; k + 1 < basis.size(); ++k)
                basis[k] -= Integer(i - 1) * basis[k + 1];

            fact *= i;
        }
        if (coeffs_[i] == 0) continue;
        for (std::size_t k = 0; k < basis.size(); ++k)
            out[k] += Rational(coeffs_[i] * basis[k], fact);
    }
    return out;
}

Rational NumericalPolynomial::leading_monomial_coeff() const {
    if (is_zero()) throw std::logic_error("leading_monomial_coeff of zero polynomial");
    return Rational(coeffs_.back(), factorial(coeffs_.size() - 1));
}

NumericalPolynomial NumericalPolynomial::operator+(const NumericalPolynomial& rhs) const {
    std::vector<Integer> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
    return NumericalPolynomial(std::move(c));
}

NumericalPolynomial NumericalPolynomial::operator-(const NumericalPolynomial& rhs) const {
    std::vector<Integer> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] -= rhs.coeffs_[i];
    return NumericalPolynomial(std::move(c));
}

NumericalPolynomial NumericalPolynomial::operator*(const Integer& s) const {
    std::vector<Integer> c = coeffs_;
    for (auto& x : c) x *= s;
    return NumericalPolynomial(std::move(c));
}

std::string NumericalPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += coeffs_[0].str();
        } else {
            out += coeffs_[i].str() + "*C(T," + std::to_string(i) + ")";
        }
    }
    return out;
}

Ordering compare_dominance(const NumericalPolynomial& p, const NumericalPolynomial& q) {
    NumericalPolynomial d = q - p;
    if (d.is_zero()) return Ordering::Equal;
    return d.leading_coeff() > 0 ? Ordering::Less : Ordering::Greater;
}

std::optional<NumericalPolynomial> fit_from_values(std::span<const Integer> values,
                                                   const Integer& offset, unsigned max_degree) {
    if (values.size() < static_cast<std::size_t>(max_degree) + 2)
        throw std::invalid_argument("fit_from_values: need at least max_degree + 2 samples");

    std::vector<std::vector<Integer>> rows;
    rows.emplace_back(values.begin(), values.end());
    unsigned fit_degree = max_degree + 1;
    for (unsigned d = 0; d <= max_degree; ++d) {
        const auto& prev = rows.back();
        std::vector<Integer> next(prev.size() - 1);
        for (std::size_t j = 0; j + 1 < prev.size(); ++j) next[j] = prev[j + 1] - prev[j];
        bool all_zero = true;
        for (const auto& x : next)
            if (x != 0) {
                all_zero = false;
                break;
            }
        rows.push_back(std::move(next));
        if (all_zero) {
            fit_degree = d;
            break;
        }
    }
    if (fit_degree > max_degree) return std::nullopt;

    NumericalPolynomial p;
    for (unsigned i = 0; i <= fit_degree; ++i) {
        if (rows[i][0] == 0) continue;
        p = p + NumericalPolynomial::binomial_shift(i, -offset) * rows[i][0];
    }
    return p;
}

}  // namespace kdp
