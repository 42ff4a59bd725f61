#include "qct/symfun.hpp"

#include <sstream>
#include <stdexcept>

namespace qct {

MultiLaurent p_eval(int r, const Alphabet& a) {
    if (r < 1) throw std::invalid_argument("p_eval: r >= 1");
    MultiLaurent num;
    for (const auto& [m, mult] : a.letters())
        num.add_term(m.pow(r), mult.q_scaled(r));
    QPoly den(1L);
    for (int c : a.geom_denoms())
        den *= QPoly(1L) - QPoly::q_power((int64_t)c * r);
    return num.scaled(QRat(QPoly(1L), den));
}

MultiLaurent h_eval(int r, const Alphabet& a) {
    if (r < 0) throw std::invalid_argument("h_eval: r >= 0");
    std::vector<MultiLaurent> h{MultiLaurent(1L)}, p{MultiLaurent()};
    for (int m = 1; m <= r; ++m) {
        p.push_back(p_eval(m, a));
        MultiLaurent sum;
        for (int i = 1; i <= m; ++i) sum += p[(size_t)i] * h[(size_t)(m - i)];
        h.push_back(sum.scaled(QRat(make_rat(1, m))));
    }
    return h[(size_t)r];
}

MultiLaurent e_eval(int r, const Alphabet& a) {
    MultiLaurent v = h_eval(r, a.negated());
    return (r % 2 == 0) ? v : -v;
}

MultiLaurent g_eval(int r, const Alphabet& a, int c) {
    return h_eval(r, a.g_transformed(c));
}

MultiLaurent p_eval(const Partition& lam, const Alphabet& a) {
    MultiLaurent out(1L);
    for (int part : lam.parts()) out *= p_eval(part, a);
    return out;
}

MultiLaurent h_eval(const Partition& lam, const Alphabet& a) {
    MultiLaurent out(1L);
    for (int part : lam.parts()) out *= h_eval(part, a);
    return out;
}

MultiLaurent g_eval(const Partition& lam, const Alphabet& a, int c) {
    MultiLaurent out(1L);
    for (int part : lam.parts()) out *= g_eval(part, a, c);
    return out;
}

namespace {

/* cofactor expansion along the first column; fine for n <= 5 */
MultiLaurent determinant(const std::vector<std::vector<MultiLaurent>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiLaurent det;
    for (size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<MultiLaurent>> minor;
        minor.reserve(n - 1);
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        MultiLaurent term = m[i][0] * determinant(minor);
        if (i % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

MultiLaurent p_from_h_determinant(int n, const Alphabet& a) {
    if (n < 1) throw std::invalid_argument("p_from_h_determinant: n >= 1");
    std::vector<MultiLaurent> h;
    for (int r = 0; r <= n; ++r) h.push_back(h_eval(r, a));
    std::vector<std::vector<MultiLaurent>> m((size_t)n,
                                             std::vector<MultiLaurent>((size_t)n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            MultiLaurent& e = m[(size_t)i - 1][(size_t)j - 1];
            if (j == 1)
                e = h[(size_t)i].scaled(QRat((long)i));
            else if (i - j + 1 == 0)
                e = MultiLaurent(1L);
            else if (i - j + 1 > 0)
                e = h[(size_t)(i - j + 1)];
        }
    MultiLaurent det = determinant(m);
    return (n % 2 == 1) ? det : -det;  // (-1)^{n-1} * det
}

SymFunc SymFunc::basis_element(SymBasis basis, const Partition& lam) {
    SymFunc f;
    f.basis_ = basis;
    f.coeffs_[lam] = QRat(1L);
    f.degree_ = lam.size();
    return f;
}

SymFunc SymFunc::h(int r) {
    if (r < 0) throw std::invalid_argument("SymFunc::h: r >= 0");
    SymFunc f;
    f.degree_ = r;
    for (const Partition& lam : partitions_of(r))
        f.coeffs_[lam] = QRat(make_rat(1, z_lambda(lam)));
    return f;
}

SymFunc SymFunc::e(int r) {
    if (r < 0) throw std::invalid_argument("SymFunc::e: r >= 0");
    SymFunc f;
    f.degree_ = r;
    for (const Partition& lam : partitions_of(r)) {
        BigRat c = make_rat(1, z_lambda(lam));
        if ((r - lam.length()) % 2 != 0) c = -c;
        f.coeffs_[lam] = QRat(c);
    }
    return f;
}

int SymFunc::max_support_length() const {
    int n = 0;
    for (const auto& [lam, c] : coeffs_) {
        (void)c;
        n = std::max(n, lam.length());
    }
    return n;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (basis_ != o.basis_ || degree_ != o.degree_)
        throw std::invalid_argument("SymFunc: mixed-basis or mixed-degree sum");
    SymFunc f(*this);
    for (const auto& [lam, c] : o.coeffs_) {
        QRat& slot = f.coeffs_[lam];
        slot += c;
        if (slot.is_zero()) f.coeffs_.erase(lam);
    }
    return f;
}

SymFunc SymFunc::scaled(const QRat& c) const {
    SymFunc f;
    f.basis_ = basis_;
    f.degree_ = degree_;
    if (c.is_zero()) return f;
    for (const auto& [lam, k] : coeffs_) f.coeffs_[lam] = k * c;
    return f;
}

MultiLaurent SymFunc::eval(const Alphabet& a, int c) const {
    MultiLaurent out;
    for (const auto& [lam, coeff] : coeffs_) {
        MultiLaurent v = basis_ == SymBasis::P ? p_eval(lam, a) : g_eval(lam, a, c);
        out += v.scaled(coeff);
    }
    return out;
}

std::string SymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : coeffs_) {
        os << (first ? "" : " + ");
        if (!c.is_one()) os << "(" << c.to_string() << ")*";
        os << (basis_ == SymBasis::P ? "p" : "g") << lam.to_string();
        first = false;
    }
    return os.str();
}

std::map<Partition, QRat> convert_to_g_basis(const SymFunc& f, int d, int c) {
    if (f.basis() == SymBasis::G) return f.coeffs();
    if (f.degree() != d)
        throw std::invalid_argument("convert_to_g_basis: degree mismatch");
    if (d == 0) return f.coeffs();  // constants: p() = g() = 1

    /* evaluate everything on d generic letters; matching coefficients of
     * the letter monomials gives an (overdetermined) exact linear system */
    std::vector<VarId> xs;
    for (int i = 0; i < d; ++i) xs.push_back(scratch_var(i));
    Alphabet a = Alphabet::from_vars(xs);

    const std::vector<Partition> mus = partitions_of(d);
    const size_t ncols = mus.size();
    std::vector<MultiLaurent> gvals;
    gvals.reserve(ncols);
    for (const Partition& mu : mus) gvals.push_back(g_eval(mu, a, c));
    MultiLaurent fval = f.eval(a, c);

    /* row space: all monomials seen across the g's and f */
    std::map<Monomial, size_t, MonomialLess> rows;
    auto note = [&](const MultiLaurent& v) {
        for (const auto& [m, coeff] : v.terms()) {
            (void)coeff;
            rows.emplace(m, rows.size());
        }
    };
    for (const MultiLaurent& g : gvals) note(g);
    note(fval);

    const size_t nrows = rows.size();
    std::vector<std::vector<QRat>> mat(nrows, std::vector<QRat>(ncols + 1));
    for (size_t j = 0; j < ncols; ++j)
        for (const auto& [m, coeff] : gvals[j].terms())
            mat[rows.at(m)][j] = coeff;
    for (const auto& [m, coeff] : fval.terms()) mat[rows.at(m)][ncols] = coeff;

    /* Gaussian elimination over Q(q) */
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < ncols && rank < nrows; ++col) {
        size_t piv = rank;
        while (piv < nrows && mat[piv][col].is_zero()) ++piv;
        if (piv == nrows) continue;
        std::swap(mat[rank], mat[piv]);
        QRat inv = mat[rank][col].inverse();
        for (size_t j = col; j <= ncols; ++j) mat[rank][j] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank || mat[r][col].is_zero()) continue;
            QRat factor = mat[r][col];
            for (size_t j = col; j <= ncols; ++j)
                mat[r][j] -= factor * mat[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != ncols)
        throw std::logic_error("convert_to_g_basis: singular evaluation system");
    for (size_t r = rank; r < nrows; ++r)
        if (!mat[r][ncols].is_zero())
            throw std::logic_error("convert_to_g_basis: inconsistent system");

    std::map<Partition, QRat> out;
    for (size_t r = 0; r < rank; ++r)
        if (!mat[r][ncols].is_zero()) out[mus[pivot_col[r]]] = mat[r][ncols];
    return out;
}

}  // namespace qct
