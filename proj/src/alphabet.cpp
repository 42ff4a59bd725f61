#include "qct/alphabet.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qct {

namespace {

/* expand one (1 - q^c) factor into the letter list: multiplying an alphabet
 * by the two-letter alphabet {1, -q^c} multiplies its r-th moment by
 * (1 - q^{cr}), exactly cancelling one geometric denominator */
std::vector<std::pair<Monomial, QRat>> times_one_minus_qc(
    const std::vector<std::pair<Monomial, QRat>>& letters, int c) {
    std::vector<std::pair<Monomial, QRat>> out;
    out.reserve(letters.size() * 2);
    for (const auto& [m, mult] : letters) {
        out.emplace_back(m, mult);
        out.emplace_back(m * Monomial::q(c), -mult);
    }
    return out;
}

}  // namespace

Alphabet Alphabet::from_vars(const std::vector<VarId>& vars) {
    Alphabet a;
    for (const VarId& v : vars) a.add_letter(Monomial::var(v));
    return a;
}

Alphabet Alphabet::single(const Monomial& m) {
    Alphabet a;
    a.add_letter(m);
    return a;
}

void Alphabet::add_letter(Monomial m, QRat mult) {
    if (mult.is_zero()) return;
    letters_.emplace_back(std::move(m), std::move(mult));
}

void Alphabet::add_geom_denom(int c) {
    if (c < 1) throw std::invalid_argument("Alphabet: geometric denominator needs c >= 1");
    denoms_.insert(std::upper_bound(denoms_.begin(), denoms_.end(), c), c);
}

Alphabet Alphabet::negated() const {
    Alphabet a(*this);
    for (auto& [m, mult] : a.letters_) mult = -mult;
    return a;
}

Alphabet Alphabet::operator+(const Alphabet& o) const {
    /* bring both to the common denominator prod over the union multiset */
    Alphabet out;
    auto left = letters_;
    for (int c : o.denoms_) left = times_one_minus_qc(left, c);
    auto right = o.letters_;
    for (int c : denoms_) right = times_one_minus_qc(right, c);
    out.letters_ = std::move(left);
    out.letters_.insert(out.letters_.end(), right.begin(), right.end());
    out.denoms_ = denoms_;
    out.denoms_.insert(out.denoms_.end(), o.denoms_.begin(), o.denoms_.end());
    std::sort(out.denoms_.begin(), out.denoms_.end());
    return out;
}

Alphabet Alphabet::operator*(const Alphabet& o) const {
    Alphabet out;
    for (const auto& [ma, ca] : letters_)
        for (const auto& [mb, cb] : o.letters_) out.add_letter(ma * mb, ca * cb);
    out.denoms_ = denoms_;
    out.denoms_.insert(out.denoms_.end(), o.denoms_.begin(), o.denoms_.end());
    std::sort(out.denoms_.begin(), out.denoms_.end());
    return out;
}

Alphabet Alphabet::scaled(const Monomial& m) const {
    Alphabet a(*this);
    for (auto& [letter, mult] : a.letters_) letter = letter * m;
    return a;
}

Alphabet Alphabet::g_transformed(int c) const {
    Alphabet a;
    a.letters_ = times_one_minus_qc(letters_, c);
    a.denoms_ = denoms_;
    a.add_geom_denom(1);
    return a;
}

std::vector<VarId> Alphabet::vars() const {
    std::set<VarId, decltype(&var_less)> seen(&var_less);
    for (const auto& [m, mult] : letters_) {
        (void)mult;
        for (const auto& [v, e] : m.entries()) {
            (void)e;
            seen.insert(v);
        }
    }
    return {seen.begin(), seen.end()};
}

std::string Alphabet::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, mult] : letters_) {
        os << (first ? "" : " + ") << "(" << mult.to_string() << ")*" << m.to_string();
        first = false;
    }
    if (first) os << "0";
    for (int c : denoms_) os << " / (1 - q^" << c << ")";
    return os.str();
}

Alphabet geometric_difference(int64_t e1, int64_t e2, int c) {
    Alphabet a;
    a.add_letter(Monomial::q(e1));
    a.add_letter(Monomial::q(e2), QRat(-1L));
    a.add_geom_denom(c);
    return a;
}

}  // namespace qct
