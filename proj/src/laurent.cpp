#include "kmss/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace kmss {

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) {
        Rat v = r.coeff(e) + c;
        if (v == 0)
            r.coeffs_.erase(e);
        else
            r.coeffs_[e] = v;
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            Rat v = r.coeff(e1 + e2) + c1 * c2;
            if (v == 0)
                r.coeffs_.erase(e1 + e2);
            else
                r.coeffs_[e1 + e2] = v;
        }
    return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw DomainError("NonUnitDeterminant", "not a unit in the Laurent ring");
    const auto& [e, c] = *coeffs_.begin();
    return term(-e, Rat(1) / c);
}

LaurentPoly LaurentPoly::sigma() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool show_coeff = (ac != 1) || e == 0;
        if (show_coeff) os << rat_to_string(ac);
        if (e != 0) {
            if (show_coeff) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    LaurentMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const LaurentPoly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!o(k, j).is_zero()) r(i, j) = r(i, j) + a * o(k, j);
        }
    return r;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

LaurentMatrix LaurentMatrix::apply_sigma() const {
    LaurentMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(i, j) = (*this)(i, j).sigma();
    return r;
}

namespace {

LaurentPoly det_rec(const LaurentMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.size() == 1) return m(row, cols[0]);
    LaurentPoly det;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (m(row, cols[k]).is_zero()) continue;
        std::size_t c = cols[k];
        cols.erase(cols.begin() + k);
        LaurentPoly minor = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + k, c);
        LaurentPoly contrib = m(row, c) * minor;
        det = (k % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

}  // namespace

LaurentPoly LaurentMatrix::determinant() const {
    std::vector<std::size_t> cols(n_);
    for (std::size_t i = 0; i < n_; ++i) cols[i] = i;
    return det_rec(*this, cols, 0);
}

LaurentMatrix LaurentMatrix::inverse() const {
    LaurentPoly det = determinant();
    LaurentPoly det_inv = det.unit_inverse();  // throws NonUnitDeterminant
    LaurentMatrix adj(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            // cofactor C_ij goes to adj(j, i)
            LaurentMatrix minor(n_ - 1);
            for (std::size_t r = 0, mr = 0; r < n_; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n_; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = (*this)(r, c);
                }
                ++mr;
            }
            LaurentPoly cof = (n_ == 1) ? LaurentPoly(1) : minor.determinant();
            if ((i + j) % 2 == 1) cof = -cof;
            adj(j, i) = cof * det_inv;
        }
    return adj;
}

bool LaurentMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

LaurentMatrix theta_affine(const LaurentMatrix& x) {
    return x.inverse().transpose().apply_sigma();
}

LaurentMatrix twist_affine(const LaurentMatrix& x) {
    return x * theta_affine(x).inverse();
}

CharPoly characteristic_polynomial(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    // Entries of lambda*I - m as polynomials in lambda, determinant by
    // cofactor expansion in the polynomial ring (desk-scale sizes only).
    using PolyL = std::vector<LaurentPoly>;
    auto mul = [](const PolyL& p, const PolyL& q) {
        PolyL r(p.size() + q.size() - 1);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) r[i + j] = r[i + j] + p[i] * q[j];
        return r;
    };
    auto add = [](PolyL p, const PolyL& q, bool subtract) {
        if (q.size() > p.size()) p.resize(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            p[i] = subtract ? p[i] - q[i] : p[i] + q[i];
        return p;
    };
    std::vector<PolyL> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyL e{-m(i, j)};
            if (i == j) e.push_back(LaurentPoly(1));
            entries[i * n + j] = std::move(e);
        }
    auto det = [&](auto&& self, std::vector<std::size_t>& cols, std::size_t row) -> PolyL {
        if (cols.size() == 1) return entries[row * n + cols[0]];
        PolyL d{LaurentPoly()};
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::size_t c = cols[k];
            cols.erase(cols.begin() + k);
            PolyL minor = self(self, cols, row + 1);
            cols.insert(cols.begin() + k, c);
            d = add(std::move(d), mul(entries[row * n + c], minor), k % 2 == 1);
        }
        return d;
    };
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    PolyL result = det(det, cols, 0);
    while (result.size() > 1 && result.back().is_zero()) result.pop_back();
    return result;
}

std::string charpoly_str(const CharPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = p.size(); d-- > 0;) {
        if (p[d].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0) {
            os << "(" << p[d].str() << ")";
        } else {
            if (!(p[d] == LaurentPoly(1))) os << "(" << p[d].str() << ")*";
            os << "lambda";
            if (d > 1) os << "^" << d;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Exact square test for a rational-coefficient Laurent polynomial.
bool is_rational_square(const LaurentPoly& d) {
    if (d.is_zero()) return true;
    long long lo = d.min_exponent(), hi = d.max_exponent();
    if (lo % 2 != 0 || hi % 2 != 0) return false;
    Rat lead = d.coeff(hi);
    if (lead < 0) return false;
    // Candidate root r with exponents hi/2 down to lo/2, computed by matching
    // coefficients from the top; r_top = sqrt(lead) must be rational here
    // because callers pre-scale by the leading coefficient.
    BigInt num = rat_num(lead), den = rat_den(lead);
    BigInt sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    Rat r_top = Rat(sn) / Rat(sd);
    long long rt = hi / 2, rb = lo / 2;
    std::map<long long, Rat> r;
    r[rt] = r_top;
    for (long long e = rt - 1; e >= rb; --e) {
        // coefficient of t^(rt + e) in r^2: 2 r_rt r_e + (known products)
        Rat known = 0;
        for (long long a = e + 1; a < rt; ++a) {
            long long b = rt + e - a;
            if (b <= e || b > rt) continue;
            auto ia = r.find(a), ib = r.find(b);
            if (ia != r.end() && ib != r.end()) known += ia->second * ib->second;
        }
        r[e] = (d.coeff(rt + e) - known) / (2 * r_top);
    }
    LaurentPoly cand;
    for (const auto& [e, c] : r) cand = cand + LaurentPoly::term(e, c);
    return cand * cand == d;
}

}  // namespace

bool quadratic_splits_over_laurent(const LaurentPoly& c) {
    LaurentPoly disc = c * c - LaurentPoly(4);
    if (disc.is_zero()) return true;
    // disc is a square of a real-coefficient Laurent polynomial iff
    // lead * disc is a square of a rational one (the root's coefficients all
    // lie in Q / sqrt(lead)).
    Rat lead = disc.coeff(disc.max_exponent());
    if (lead < 0) return false;
    LaurentPoly scaled = LaurentPoly(lead) * disc;
    return is_rational_square(scaled);
}

HoleExample example_hole(std::size_t n) {
    if (n < 1) throw DomainError("BadSize", "n must be at least 1");
    HoleExample h;
    h.u = LaurentMatrix::identity(n + 1);
    h.u(0, 1) = LaurentPoly(1) + LaurentPoly::t();
    h.v = twist_affine(h.u);
    h.charpoly = characteristic_polynomial(h.v);
    return h;
}

Diagonalizability diagonalizable_in_affine(const LaurentMatrix& v) {
    if (v.is_diagonal()) return {true, "matrix is diagonal"};
    CharPoly p = characteristic_polynomial(v);
    // Strip (lambda - 1) factors by synthetic division at lambda = 1.
    CharPoly q = p;
    while (q.size() > 3) {
        // remainder = q(1)
        LaurentPoly rem;
        for (const auto& coeff : q) rem = rem + coeff;
        if (!rem.is_zero()) break;
        CharPoly div(q.size() - 1);
        LaurentPoly carry;
        for (std::size_t d = q.size(); d-- > 1;) {
            carry = carry + q[d];
            div[d - 1] = carry;
        }
        q = std::move(div);
    }
    if (q.size() != 3 || !(q[2] == LaurentPoly(1)) || !(q[0] == LaurentPoly(1)))
        throw DomainError("NotFromExampleHole",
                          "diagonalizability is only decided for Hole-shaped inputs");
    LaurentPoly c = -q[1];
    if (!quadratic_splits_over_laurent(c))
        return {false,
                "characteristic polynomial does not split into linear factors over R[t,t^-1]"};
    throw DomainError("NotFromExampleHole",
                      "splitting characteristic polynomial; diagonalizability not decided");
}

MidpointReport midpoint_obstruction(const LaurentMatrix& v) {
    Diagonalizability d = diagonalizable_in_affine(v);
    MidpointReport r;
    if (d.diagonalizable) {
        r.midpoint_exists = true;
        r.explanation = "element is diagonalizable; no obstruction detected";
    } else {
        r.midpoint_exists = false;
        r.explanation =
            "no midpoint of the identity and v exists in the group model: a midpoint x' "
            "would satisfy v = tau(x') = x'^2 with x' in the twist image, forcing v to be "
            "diagonalizable, but " + d.reason;
    }
    return r;
}

}  // namespace kmss
