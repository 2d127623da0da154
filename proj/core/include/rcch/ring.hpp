// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in Z[1/sqrt2] and dense matrices over it.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rcch {

using Int = boost::multiprecision::cpp_int;

// (a + b*sqrt2) / sqrt2^k, kept canonical: k == 0 or a is odd.
class RingElem {
  public:
    RingElem() = default;
    RingElem(Int a, Int b, unsigned k);
    RingElem(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)

    static RingElem inv_sqrt2_pow(unsigned k) { return RingElem(1, 0, k); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    unsigned k() const { return k_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return k_ == 0 && a_ == 1 && b_.is_zero(); }
    bool is_minus_one() const { return k_ == 0 && a_ == -1 && b_.is_zero(); }
    bool is_unit_sign() const { return is_one() || is_minus_one(); }

    unsigned lde() const { return k_; }

    RingElem operator-() const;
    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    RingElem mul_sqrt2() const;
    RingElem div_sqrt2() const;

    // Numerator sqrt2^k * x as (a, b) with x = (a + b sqrt2)/sqrt2^k.
    // Residue class mod 2Z[sqrt2] of sqrt2^m * x for m >= k.
    int residue_a(unsigned m) const;
    int residue_b(unsigned m) const;

    bool operator==(const RingElem& o) const { return k_ == o.k_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    double to_double() const;
    std::string str() const;
    static RingElem parse(std::string_view text);

  private:
    void canonicalize();

    Int a_{0};
    Int b_{0};
    unsigned k_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RingElem& x);

RingElem ring_add(const RingElem& x, const RingElem& y);
RingElem ring_mul(const RingElem& x, const RingElem& y);
unsigned lde_elem(const RingElem& x);

class RingMatrix {
  public:
    RingMatrix() = default;
    RingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RingMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RingElem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const RingElem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const RingMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    RingMatrix transpose() const;
    unsigned column_lde(std::size_t j) const;

    // Column and row actions used when multiplying by one/two-level generators.
    void negate_col(std::size_t a);
    void swap_cols(std::size_t a, std::size_t b);
    void hadamard_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t a);
    void swap_rows(std::size_t a, std::size_t b);
    void hadamard_rows(std::size_t a, std::size_t b);

    bool is_identity() const;
    bool is_signed_permutation() const;

    std::string str() const;
    static RingMatrix parse(std::string_view text);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RingElem> e_;
};

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
bool is_orthogonal(const RingMatrix& a);

// The P (x) P matrix on two qubits.
RingMatrix pp_matrix();

}  // namespace rcch
