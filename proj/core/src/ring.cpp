// SPDX-License-Identifier: Apache-2.0
#include "rcch/ring.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include "rcch/error.hpp"

namespace rcch {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::WidthTooLarge: return "WidthTooLarge";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::EntriesNotInRing: return "EntriesNotInRing";
        case ErrorKind::InternalProgressFailure: return "InternalProgressFailure";
        case ErrorKind::OddParity: return "OddParity";
        case ErrorKind::NotInGroup: return "NotInGroup";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NoSingleFlip: return "NoSingleFlip";
        case ErrorKind::UnsupportedGate: return "UnsupportedGate";
        case ErrorKind::IndicesNotDistinct: return "IndicesNotDistinct";
        case ErrorKind::DimensionNotPowerOfTwo: return "DimensionNotPowerOfTwo";
        case ErrorKind::ContainsH: return "ContainsH";
        case ErrorKind::TooManyH: return "TooManyH";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::BadAlphabet: return "BadAlphabet";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::FormMismatch: return "FormMismatch";
        case ErrorKind::TransportInvariantViolated: return "TransportInvariantViolated";
    }
    return "Error";
}

namespace {

bool is_odd(const Int& v) { return bit_test(v, 0); }

// (a + b sqrt2) * sqrt2 = 2b + a sqrt2
void times_sqrt2(Int& a, Int& b) {
    Int na = b * 2;
    b = a;
    a = std::move(na);
}

}  // namespace

RingElem::RingElem(Int a, Int b, unsigned k) : a_(std::move(a)), b_(std::move(b)), k_(k) {
    canonicalize();
}

void RingElem::canonicalize() {
    if (a_.is_zero() && b_.is_zero()) {
        k_ = 0;
        return;
    }
    // (a + b sqrt2)/sqrt2 = b + (a/2) sqrt2 when a is even
    while (k_ > 0 && !is_odd(a_)) {
        Int na = b_;
        b_ = a_ / 2;
        a_ = std::move(na);
        --k_;
    }
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

RingElem RingElem::operator+(const RingElem& o) const {
    Int a1 = a_, b1 = b_, a2 = o.a_, b2 = o.b_;
    unsigned k = k_;
    for (unsigned i = k_; i < o.k_; ++i) times_sqrt2(a1, b1);
    for (unsigned i = o.k_; i < k_; ++i) times_sqrt2(a2, b2);
    if (o.k_ > k) k = o.k_;
    return RingElem(a1 + a2, b1 + b2, k);
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    if (is_zero() || o.is_zero()) return RingElem();
    Int a = a_ * o.a_ + 2 * b_ * o.b_;
    Int b = a_ * o.b_ + b_ * o.a_;
    return RingElem(std::move(a), std::move(b), k_ + o.k_);
}

RingElem RingElem::mul_sqrt2() const {
    if (is_zero()) return *this;
    if (k_ > 0) {
        RingElem r = *this;
        --r.k_;
        return r;
    }
    Int a = a_, b = b_;
    times_sqrt2(a, b);
    return RingElem(std::move(a), std::move(b), 0);
}

RingElem RingElem::div_sqrt2() const {
    if (is_zero()) return *this;
    return RingElem(a_, b_, k_ + 1);
}

int RingElem::residue_a(unsigned m) const {
    if (m < k_ || is_zero()) return 0;
    return (m == k_ && is_odd(a_)) ? 1 : 0;
}

int RingElem::residue_b(unsigned m) const {
    if (m < k_ || is_zero()) return 0;
    if (m == k_) return is_odd(b_) ? 1 : 0;
    if (m == k_ + 1) return is_odd(a_) ? 1 : 0;
    return 0;
}

double RingElem::to_double() const {
    double v = a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(2.0);
    return v / std::pow(std::sqrt(2.0), static_cast<double>(k_));
}

std::string RingElem::str() const {
    std::ostringstream os;
    os << a_;
    if (b_ < 0)
        os << '-' << Int(-b_);
    else
        os << '+' << b_;
    os << "*r2/r2^" << k_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << x.str(); }

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    bool eat(std::string_view lit) {
        if (s.substr(i, lit.size()) == lit) {
            i += lit.size();
            return true;
        }
        return false;
    }

    bool integer(Int& out) {
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) {
            i = start;
            return false;
        }
        out = Int(std::string(s.substr(start, i - start)));
        return true;
    }
};

}  // namespace

RingElem RingElem::parse(std::string_view text) {
    Cursor c{text};
    Int a, b, k;
    auto fail = [&](const char* what) {
        throw ParseError(1, static_cast<int>(c.i) + 1,
                         std::string(what) + " in ring element '" + std::string(text) + "'");
    };
    if (!c.integer(a)) fail("expected integer");
    if (c.i == text.size()) return RingElem(a, 0, 0);
    if (c.i >= text.size() || (text[c.i] != '+' && text[c.i] != '-')) fail("expected sign");
    bool neg = text[c.i] == '-';
    ++c.i;
    if (!c.integer(b)) fail("expected integer");
    if (neg) b = -b;
    if (!c.eat("*r2/r2^")) fail("expected '*r2/r2^'");
    if (!c.integer(k) || k < 0) fail("expected exponent");
    if (c.i != text.size()) fail("trailing characters");
    return RingElem(a, b, k.convert_to<unsigned>());
}

RingElem ring_add(const RingElem& x, const RingElem& y) { return x + y; }
RingElem ring_mul(const RingElem& x, const RingElem& y) { return x * y; }
unsigned lde_elem(const RingElem& x) { return x.lde(); }

RingMatrix RingMatrix::identity(std::size_t n) {
    RingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElem(1);
    return m;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

unsigned RingMatrix::column_lde(std::size_t j) const {
    unsigned k = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        if (at(i, j).lde() > k) k = at(i, j).lde();
    return k;
}

void RingMatrix::negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

void RingMatrix::swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

// M <- M * H_[a,b]
void RingMatrix::hadamard_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) {
        RingElem x = at(i, a), y = at(i, b);
        if (x.is_zero() && y.is_zero()) continue;
        at(i, a) = (x + y).div_sqrt2();
        at(i, b) = (x - y).div_sqrt2();
    }
}

void RingMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void RingMatrix::swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

// M <- H_[a,b] * M
void RingMatrix::hadamard_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) {
        RingElem x = at(a, j), y = at(b, j);
        if (x.is_zero() && y.is_zero()) continue;
        at(a, j) = (x + y).div_sqrt2();
        at(b, j) = (x - y).div_sqrt2();
    }
}

bool RingMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const RingElem& x = at(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool RingMatrix::is_signed_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<int> row_hits(rows_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
        int hits = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            const RingElem& x = at(i, j);
            if (x.is_zero()) continue;
            if (!x.is_unit_sign()) return false;
            ++hits;
            ++row_hits[i];
        }
        if (hits != 1) return false;
    }
    for (int h : row_hits)
        if (h != 1) return false;
    return true;
}

std::string RingMatrix::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ' ';
            out += at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

RingMatrix RingMatrix::parse(std::string_view text) {
    std::vector<std::vector<RingElem>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::vector<RingElem> row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size()) break;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            try {
                row.push_back(RingElem::parse(std::string_view(line).substr(i, j - i)));
            } catch (const ParseError& e) {
                throw ParseError(lineno, static_cast<int>(i) + e.column(), "bad matrix entry");
            }
            i = j;
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(lineno, 1, "row length differs from the first row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno, 1, "empty matrix");
    RingMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    RingMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const RingElem& x = a.at(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const RingElem& y = b.at(l, j);
                if (!y.is_zero()) c.at(i, j) += x * y;
            }
        }
    return c;
}

bool is_orthogonal(const RingMatrix& a) {
    if (a.rows() != a.cols()) return false;
    return mat_mul(a, a.transpose()).is_identity();
}

RingMatrix pp_matrix() {
    // entries of (1/(2 sqrt2)) [[r+1,1,1,r-1],[1,-r-1,r-1,-1],[1,r-1,-r-1,-1],[r-1,-1,-1,r+1]]
    const long tbl[4][4][2] = {
        {{1, 1}, {1, 0}, {1, 0}, {-1, 1}},
        {{1, 0}, {-1, -1}, {-1, 1}, {-1, 0}},
        {{1, 0}, {-1, 1}, {-1, -1}, {-1, 0}},
        {{-1, 1}, {-1, 0}, {-1, 0}, {1, 1}},
    };
    RingMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = RingElem(tbl[i][j][0], tbl[i][j][1], 3);
    return m;
}

}  // namespace rcch
