#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linemul/digits.hpp"

namespace linemul {

// Instrumentation hook threaded through the arithmetic; a null pointer
// means "don't count". One counter set per run, never shared.
struct OpCounter {
    std::int64_t digit_multiplications = 0;
    std::int64_t digit_additions = 0;
    std::int64_t carry_operations = 0;
    std::int64_t unary_increments = 0;
};

// How a grid cell's digit product is obtained.
enum class CellMode {
    Multiply,   // one digit multiplication per cell
    UnaryCount, // repeated increment, no multiply instruction
};

// cells[i][j] = a.digits[i] * b.digits[j]; the arithmetic shadow of the
// line diagram, one cell per line-crossing group.
struct PartialProductGrid {
    std::vector<std::vector<int>> cells; // rows follow a, cols follow b
    Base base;
    DigitString factor_a;
    DigitString factor_b;

    std::size_t rows() const noexcept { return cells.size(); }
    std::size_t cols() const noexcept { return cells.empty() ? 0 : cells[0].size(); }
};

// Anti-diagonal totals D_0..D_K, most-significant first; K = rows+cols-2.
struct DiagonalSums {
    std::vector<std::int64_t> sums;
    Base base;
};

// One carry-resolution step. Steps run units-first (k = K down to 0).
// The most significant step writes its whole total as digits, so
// `written` can hold more than one digit there (most-significant first);
// every other step writes exactly one.
struct CarryStep {
    int diagonal;                // k
    std::int64_t raw_sum;        // D_k
    std::int64_t incoming_carry;
    std::vector<int> written;
    std::int64_t outgoing_carry;
};

struct CarryLedger {
    std::vector<CarryStep> steps; // units-first
};

// Digit product by counting alone: nested increment loop, no multiply.
// The tables-free baseline, used by tests and `--method count`.
int unary_count_oracle(int da, int db, OpCounter* counter = nullptr);

PartialProductGrid build_grid(const DigitString& a, const DigitString& b,
                              OpCounter* counter = nullptr,
                              CellMode mode = CellMode::Multiply);

DiagonalSums diagonal_sums(const PartialProductGrid& g, OpCounter* counter = nullptr);

std::pair<DigitString, CarryLedger> resolve_carries(const DiagonalSums& s,
                                                    OpCounter* counter = nullptr);

// build_grid -> diagonal_sums -> resolve_carries.
DigitString grid_multiply(const DigitString& a, const DigitString& b,
                          OpCounter* counter = nullptr,
                          CellMode mode = CellMode::Multiply);

// coefficient * base^power; one term per anti-diagonal, coefficient D_k,
// power K-k. The product-of-polynomials view of the grid.
struct PolynomialTerm {
    std::int64_t coefficient;
    int power;

    friend bool operator==(const PolynomialTerm&, const PolynomialTerm&) = default;
};

std::vector<PolynomialTerm> binomial_terms(const DigitString& a, const DigitString& b);

// A single digit product with its place-value shift (base^shift).
struct ShiftedProduct {
    int product;
    int shift;

    friend bool operator==(const ShiftedProduct&, const ShiftedProduct&) = default;
};

// Long multiplication without carries: row r holds the products of
// b's digit r (units-first rows) against every digit of a.
std::vector<std::vector<ShiftedProduct>> schoolbook_rows(const DigitString& a,
                                                         const DigitString& b);

// Classic long multiplication with in-row carries.
DigitString schoolbook_multiply(const DigitString& a, const DigitString& b,
                                OpCounter* counter = nullptr);

} // namespace linemul
