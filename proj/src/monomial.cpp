#include "qct/monomial.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qct {

namespace {

std::shared_mutex g_free_mutex;
std::vector<std::string>& free_names() {
    static std::vector<std::string> names;
    return names;
}
std::unordered_map<std::string, int32_t>& free_ids() {
    static std::unordered_map<std::string, int32_t> ids;
    return ids;
}

}  // namespace

VarId z0() { return VarId{0, 0}; }

VarId zvar(int32_t level, int32_t index) {
    if (level < 1 || index < 1)
        throw std::invalid_argument("zvar: level and index must be >= 1");
    return VarId{level, index};
}

VarId free_var(std::string_view name) {
    std::string key(name);
    {
        std::shared_lock lock(g_free_mutex);
        auto it = free_ids().find(key);
        if (it != free_ids().end()) return VarId{kFreeLevel, it->second};
    }
    std::unique_lock lock(g_free_mutex);
    auto [it, fresh] = free_ids().emplace(key, (int32_t)free_names().size());
    if (fresh) free_names().push_back(key);
    return VarId{kFreeLevel, it->second};
}

VarId scratch_var(int32_t index) { return VarId{kScratchLevel, index}; }

static const std::string& free_name(int32_t id) {
    std::shared_lock lock(g_free_mutex);
    return free_names()[(size_t)id];
}

bool var_less(const VarId& a, const VarId& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.level == kFreeLevel && a.index != b.index)
        return free_name(a.index) < free_name(b.index);
    return a.index < b.index;
}

std::string var_name(const VarId& v) {
    if (v.level == 0) return "z0";
    if (v.level == kFreeLevel) return free_name(v.index);
    if (v.level == kScratchLevel) return "#" + std::to_string(v.index);
    return "z[" + std::to_string(v.level) + "," + std::to_string(v.index) + "]";
}

Monomial Monomial::var(VarId v, int64_t e) {
    Monomial m;
    if (e != 0) m.exps_.emplace_back(v, e);
    return m;
}

Monomial Monomial::q(int64_t e) {
    Monomial m;
    m.qpow_ = e;
    return m;
}

Monomial Monomial::without_q() const {
    Monomial m = *this;
    m.qpow_ = 0;
    return m;
}

int64_t Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : exps_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.qpow_ = qpow_ + o.qpow_;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin(), ae = exps_.end();
    auto b = o.exps_.begin(), be = o.exps_.end();
    while (a != ae && b != be) {
        if (a->first == b->first) {
            int64_t e = a->second + b->second;
            if (e != 0) r.exps_.emplace_back(a->first, e);
            ++a;
            ++b;
        } else if (var_less(a->first, b->first)) {
            r.exps_.push_back(*a++);
        } else {
            r.exps_.push_back(*b++);
        }
    }
    r.exps_.insert(r.exps_.end(), a, ae);
    r.exps_.insert(r.exps_.end(), b, be);
    return r;
}

Monomial Monomial::pow(int64_t n) const {
    Monomial r;
    if (n == 0) return r;
    r.qpow_ = qpow_ * n;
    r.exps_.reserve(exps_.size());
    for (const auto& [v, e] : exps_) r.exps_.emplace_back(v, e * n);
    return r;
}

Monomial Monomial::erased(VarId v) const {
    Monomial r;
    r.qpow_ = qpow_;
    r.exps_.reserve(exps_.size());
    for (const auto& [w, e] : exps_)
        if (!(w == v)) r.exps_.emplace_back(w, e);
    return r;
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool any = false;
    if (qpow_ != 0) {
        os << "q";
        if (qpow_ != 1) os << "^" << qpow_;
        any = true;
    }
    for (const auto& [v, e] : exps_) {
        if (any) os << "*";
        os << var_name(v);
        if (e != 1) os << "^" << e;
        any = true;
    }
    if (!any) return "1";
    return os.str();
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ia == ea) return ib->second > 0;  // a reads 0 on b's variable
        if (ib == eb) return ia->second < 0;  // b reads 0 on a's variable
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        } else if (var_less(ia->first, ib->first)) {
            /* b reads 0 here */
            return ia->second < 0;
        } else {
            return 0 < ib->second;
        }
    }
    return a.qpow() < b.qpow();
}

}  // namespace qct
