#include <matchbox/matrix.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace matchbox {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("IntMatrix::from_rows: no rows");
    }
    const std::size_t cols = rows.front().size();
    if (cols == 0) {
        throw std::invalid_argument("IntMatrix::from_rows: empty row");
    }
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
    }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
    }
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(a, j) += c * (*this)(b, j);
    }
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, a) += c * (*this)(i, b);
    }
}

void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(a, j) = -(*this)(a, j);
    }
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) {
                out << ',';
            }
            out << (*this)(i, j);
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("IntMatrix: incompatible shapes in product");
    }
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("determinant: square matrix required");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix b = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && b(pivot, k) == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return 0;
            }
            b.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact by the Desnanot-Jacobi identity
                b(i, j) = (b(i, j) * b(k, k) - b(i, k) * b(k, j)) / prev;
            }
            b(i, k) = 0;
        }
        prev = b(k, k);
    }
    return sign > 0 ? b(n - 1, n - 1) : -b(n - 1, n - 1);
}

namespace {

// true if some entry of d below-right of (t, t) is nonzero; reports the first
bool find_nonzero(const IntMatrix& d, std::size_t t, std::size_t& oi, std::size_t& oj) {
    for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) != 0) {
                oi = i;
                oj = j;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = f.d;

    const std::size_t steps = m < n ? m : n;
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi;
        std::size_t pj;
        if (!find_nonzero(d, t, pi, pj)) {
            break;  // all remaining entries vanish
        }
        d.swap_rows(t, pi);
        f.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        f.v.swap_cols(t, pj);

        for (;;) {
            // clear column t with euclidean steps; a nonzero remainder is
            // swapped into the pivot, strictly shrinking |pivot|
            bool again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) {
                    continue;
                }
                Int q = d(i, t) / d(t, t);
                if (q != 0) {
                    d.add_row(i, t, -q);
                    f.u.add_row(i, t, -q);
                }
                if (d(i, t) != 0) {
                    d.swap_rows(t, i);
                    f.u.swap_rows(t, i);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) {
                    continue;
                }
                Int q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.add_col(j, t, -q);
                    f.v.add_col(j, t, -q);
                }
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    f.v.swap_cols(t, j);
                    again = true;
                }
            }
            if (again) {
                continue;
            }
            // divisibility: fold a bad row into row t and restart this pivot
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i) {
                for (std::size_t j = t + 1; j < n && divides; ++j) {
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i, 1);
                        f.u.add_row(t, i, 1);
                        divides = false;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            f.u.negate_row(t);
        }
    }
    return f;
}

std::vector<Int> smith_diagonal(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    const std::size_t steps = a.rows() < a.cols() ? a.rows() : a.cols();
    std::vector<Int> diag;
    diag.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) {
        diag.push_back(f.d(t, t));
    }
    return diag;
}

namespace {

// Row-style Hermite form, in place: staircase with positive pivots and the
// entries above each pivot reduced into [0, pivot).
void row_hermite(IntMatrix& h) {
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        // gcd the column below r into a single entry
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (h(i, j) != 0 && (best == m || abs(h(i, j)) < abs(h(best, j)))) {
                    best = i;
                }
            }
            if (best == m) {
                break;  // column is zero from r down
            }
            h.swap_rows(r, best);
            bool cleared = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, j) == 0) {
                    continue;
                }
                Int q = h(i, j) / h(r, j);
                h.add_row(i, r, -q);
                if (h(i, j) != 0) {
                    cleared = false;
                }
            }
            if (cleared) {
                break;
            }
        }
        if (h(r, j) == 0) {
            continue;
        }
        if (h(r, j) < 0) {
            h.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = div_floor(h(i, j), h(r, j));
            if (q != 0) {
                h.add_row(i, r, -q);
            }
        }
        ++r;
    }
}

}  // namespace

IntMatrix hermite_column_basis(const IntMatrix& a) {
    IntMatrix h = a.transposed();
    row_hermite(h);
    // count nonzero rows (they come first)
    std::size_t rank = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j) {
            if (h(i, j) != 0) {
                zero = false;
                break;
            }
        }
        if (!zero) {
            rank = i + 1;
        }
    }
    IntMatrix basis(a.rows(), rank == 0 ? 0 : rank);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            basis(j, i) = h(i, j);
        }
    }
    return basis;
}

}  // namespace matchbox
