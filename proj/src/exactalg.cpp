#include "latreg/exactalg.hpp"

#include <algorithm>
#include <utility>

namespace latreg {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// floor(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

struct ExtendedGcd {
    Integer g, x, y;  // g = x*a + y*b, g >= 0
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

template <typename T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <typename T>
void swap_cols(Matrix<T>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

/// row_dst += factor * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

/// Replaces columns (p, q) by (x*cp + y*cq, -b/g*cp + a/g*cq); a unimodular 2x2 step.
void gcd_column_step(IntMatrix& m, std::size_t p, std::size_t q, const Integer& x, const Integer& y,
                     const Integer& bg, const Integer& ag) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer cp = m(i, p);
        Integer cq = m(i, q);
        m(i, p) = x * cp + y * cq;
        m(i, q) = -bg * cp + ag * cq;
    }
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RatVector to_rational(const IntVector& v) {
    RatVector r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

bool is_integral(const RatMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(),
                       [](const Rational& x) { return boost::multiprecision::denominator(x) == 1; });
}

bool is_integral(const RatVector& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& x) { return boost::multiprecision::denominator(x) == 1; });
}

IntMatrix to_integer(const RatMatrix& m) {
    if (!is_integral(m)) throw DegeneracyError("matrix has non-integral entries");
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = boost::multiprecision::numerator(m(i, j));
    return r;
}

IntVector to_integer(const RatVector& v) {
    if (!is_integral(v)) throw DegeneracyError("vector has non-integral entries");
    IntVector r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(boost::multiprecision::numerator(x));
    return r;
}

Rational det(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("det: matrix is not square");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rational result = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            swap_rows(a, pivot, c);
            result = -result;
        }
        result *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return result;
}

Integer det(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("det: matrix is not square");
    IntMatrix a = m;
    const std::size_t n = a.rows();
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            swap_rows(a, r, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact by Sylvester's identity
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        swap_rows(a, pivot, r);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Rational f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0) ++pivot;
        if (pivot == n) throw DegeneracyError("inverse: matrix is singular");
        swap_rows(a, pivot, c);
        swap_rows(inv, pivot, c);
        Rational p = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

HermiteForm hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.cols());
    std::size_t pc = 0;
    for (std::size_t i = 0; i < h.rows() && pc < h.cols(); ++i) {
        for (std::size_t j = pc + 1; j < h.cols(); ++j) {
            if (h(i, j) == 0) continue;
            const Integer a = h(i, pc);
            const Integer b = h(i, j);
            const ExtendedGcd e = extended_gcd(a, b);
            const Integer bg = b / e.g;
            const Integer ag = a / e.g;
            gcd_column_step(h, pc, j, e.x, e.y, bg, ag);
            gcd_column_step(u, pc, j, e.x, e.y, bg, ag);
        }
        if (h(i, pc) == 0) continue;
        if (h(i, pc) < 0) {
            negate_col(h, pc);
            negate_col(u, pc);
        }
        const Integer pivot = h(i, pc);
        for (std::size_t j = 0; j < pc; ++j) {
            Integer q = floor_div(h(i, j), pivot);
            add_col(h, j, pc, -q);
            add_col(u, j, pc, -q);
        }
        ++pc;
    }
    return {std::move(h), std::move(u)};
}

SmithForm snf(const IntMatrix& m) {
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t rows = s.rows();
    const std::size_t cols = s.cols();

    auto bring_smallest_to = [&](std::size_t t, bool whole_block) -> bool {
        // Moves a nonzero entry of least absolute value into (t, t). When whole_block is
        // false only row t and column t are searched.
        std::size_t bi = rows, bj = cols;
        Integer best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (!whole_block && i != t && j != t) continue;
                if (s(i, j) == 0) continue;
                Integer a = abs_value(s(i, j));
                if (bi == rows || a < best) {
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == rows) return false;
        swap_rows(s, bi, t);
        swap_rows(u, bi, t);
        swap_cols(s, bj, t);
        swap_cols(v, bj, t);
        return true;
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        if (!bring_smallest_to(t, true)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s(i, t) == 0) continue;
                Integer q = s(i, t) / s(t, t);
                add_row(s, i, t, -q);
                add_row(u, i, t, -q);
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s(t, j) == 0) continue;
                Integer q = s(t, j) / s(t, t);
                add_col(s, j, t, -q);
                add_col(v, j, t, -q);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) {
                bring_smallest_to(t, false);
                continue;
            }
            // Row and column t are clear; enforce divisibility of the remaining block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        add_row(s, t, i, 1);
                        add_row(u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }
    return {std::move(s), std::move(u), std::move(v)};
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
    const SmithForm f = snf(m);
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(f.s.rows(), f.s.cols()); ++i)
        if (f.s(i, i) != 0) d.push_back(f.s(i, i));
    return d;
}

Integer sublattice_index(const std::vector<IntVector>& vectors, std::size_t n, RankMode mode) {
    if (vectors.empty()) throw ArgumentError("sublattice_index: empty vector list");
    if (n == 0) throw DimensionError("sublattice_index: ambient dimension must be positive");
    for (const auto& v : vectors)
        if (v.size() != n) throw DimensionError("sublattice_index: vector length differs from ambient dimension");
    const std::vector<Integer> d = invariant_factors(IntMatrix::from_rows(vectors));
    if (d.empty()) return mode == RankMode::full ? Integer(0) : Integer(1);
    if (mode == RankMode::full && d.size() < n) return 0;
    Integer index = 1;
    for (const auto& x : d) index *= x;
    return index;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    const Integer d = det(m);
    if (d != 1 && d != -1) throw DegeneracyError("unimodular_inverse: |det| != 1");
    return to_integer(inverse(to_rational(m)));
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return abs_value(g);
}

IntVector primitive(const IntVector& v) {
    const Integer g = gcd_of(v);
    if (g == 0) throw DegeneracyError("primitive: zero vector");
    IntVector r = v;
    for (auto& x : r) x /= g;
    return r;
}

AffineMap::AffineMap(RatMatrix linear, RatVector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
    if (!linear_.is_square()) throw DimensionError("AffineMap: linear part is not square");
    if (linear_.rows() != translation_.size()) throw DimensionError("AffineMap: translation length mismatch");
    if (det(linear_) == 0) throw DegeneracyError("AffineMap: linear part is singular");
}

AffineMap AffineMap::identity(std::size_t n) { return AffineMap(RatMatrix::identity(n), RatVector(n)); }

RatVector AffineMap::operator()(const RatVector& x) const {
    RatVector y = linear_ * x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation_[i];
    return y;
}

RatVector AffineMap::operator()(const IntVector& x) const { return (*this)(to_rational(x)); }

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    if (f.dim() != g.dim()) throw DimensionError("compose: dimension mismatch");
    return AffineMap(f.linear() * g.linear(), f(g.translation()));
}

AffineMap inverse(const AffineMap& f) {
    RatMatrix inv = inverse(f.linear());
    RatVector t = inv * f.translation();
    for (auto& x : t) x = -x;
    return AffineMap(std::move(inv), std::move(t));
}

AffineMap solve_affine_map(const std::vector<RatVector>& src, const std::vector<RatVector>& dst) {
    if (src.size() != dst.size() || src.empty()) throw DimensionError("solve_affine_map: point counts differ");
    const std::size_t n = src.front().size();
    if (n == 0 || src.size() != n + 1) throw DimensionError("solve_affine_map: need n+1 points in dimension n");
    for (std::size_t i = 0; i <= n; ++i)
        if (src[i].size() != n || dst[i].size() != n) throw DimensionError("solve_affine_map: point length mismatch");

    RatMatrix c(n, n), d(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            c(i, j) = src[j + 1][i] - src[0][i];
            d(i, j) = dst[j + 1][i] - dst[0][i];
        }
    if (det(c) == 0) throw DegeneracyError("solve_affine_map: source points are affinely dependent");
    RatMatrix linear = d * inverse(c);
    RatVector t = linear * src[0];
    for (std::size_t i = 0; i < n; ++i) t[i] = dst[0][i] - t[i];
    return AffineMap(std::move(linear), std::move(t));
}

bool is_lattice_affine(const AffineMap& map) {
    if (!is_integral(map.linear()) || !is_integral(map.translation())) return false;
    const Rational d = det(map.linear());
    return d == 1 || d == -1;
}

std::string to_string(const Integer& x) { return x.str(); }
std::string to_string(const Rational& x) { return x.str(); }

namespace {
template <typename T>
void print_matrix(std::ostream& os, const Matrix<T>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).str();
        os << ']';
    }
    os << ']';
}
}  // namespace

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    print_matrix(os, m);
    return os;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    print_matrix(os, m);
    return os;
}

}  // namespace latreg
