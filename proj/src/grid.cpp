#include "linemul/grid.hpp"

#include <algorithm>

namespace linemul {

namespace {

void require_same_base(const DigitString& a, const DigitString& b) {
    if (!(a.base == b.base))
        throw BaseMismatch("factors use base " + std::to_string(a.base.value()) +
                           " and base " + std::to_string(b.base.value()));
}

// Strips leading zeros, keeps a lone 0.
DigitString normalized(std::vector<int> digits, Base base) {
    std::size_t first = 0;
    while (first + 1 < digits.size() && digits[first] == 0) ++first;
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(first));
    if (digits.empty()) digits.push_back(0);
    return DigitString{std::move(digits), base};
}

} // namespace

int unary_count_oracle(int da, int db, OpCounter* counter) {
    int count = 0;
    for (int s = 0; s < da; ++s) {
        for (int t = 0; t < db; ++t) {
            ++count;
            if (counter) ++counter->unary_increments;
        }
    }
    // An empty cluster still takes one look to confirm it is empty.
    if (counter && count == 0) ++counter->unary_increments;
    return count;
}

PartialProductGrid build_grid(const DigitString& a, const DigitString& b,
                              OpCounter* counter, CellMode mode) {
    require_same_base(a, b);
    PartialProductGrid g{{}, a.base, a, b};
    g.cells.resize(a.size(), std::vector<int>(b.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (mode == CellMode::UnaryCount) {
                g.cells[i][j] = unary_count_oracle(a.digits[i], b.digits[j], counter);
            } else {
                g.cells[i][j] = a.digits[i] * b.digits[j];
                if (counter) ++counter->digit_multiplications;
            }
        }
    }
    return g;
}

DiagonalSums diagonal_sums(const PartialProductGrid& g, OpCounter* counter) {
    const std::size_t rows = g.rows(), cols = g.cols();
    DiagonalSums s{std::vector<std::int64_t>(rows + cols - 1, 0), g.base};
    for (std::size_t k = 0; k < s.sums.size(); ++k) {
        bool first = true;
        for (std::size_t i = 0; i < rows; ++i) {
            if (k < i || k - i >= cols) continue;
            s.sums[k] += g.cells[i][k - i];
            if (!first && counter) ++counter->digit_additions;
            first = false;
        }
    }
    return s;
}

std::pair<DigitString, CarryLedger> resolve_carries(const DiagonalSums& s,
                                                    OpCounter* counter) {
    const int base = s.base.value();
    const int last = static_cast<int>(s.sums.size()) - 1;

    CarryLedger ledger;
    std::int64_t carry = 0;
    for (int k = last; k >= 0; --k) {
        const std::int64_t raw = s.sums[static_cast<std::size_t>(k)];
        const std::int64_t incoming = carry;
        std::int64_t total = raw + incoming;
        if (counter && incoming != 0) ++counter->carry_operations;

        CarryStep step{k, raw, incoming, {}, 0};
        if (k == 0) {
            // Leftmost diagonal: write the whole total out, it may span
            // several digits.
            std::vector<int> expansion;
            do {
                expansion.push_back(static_cast<int>(total % base));
                total /= base;
            } while (total > 0);
            std::reverse(expansion.begin(), expansion.end());
            step.written = std::move(expansion);
            step.outgoing_carry = 0;
        } else {
            step.written = {static_cast<int>(total % base)};
            step.outgoing_carry = total / base;
            carry = step.outgoing_carry;
        }
        ledger.steps.push_back(std::move(step));
    }

    // Most significant step came last; its digits lead the result.
    std::vector<int> digits = ledger.steps.back().written;
    for (std::size_t n = ledger.steps.size() - 1; n-- > 0;)
        digits.push_back(ledger.steps[n].written[0]);

    return {normalized(std::move(digits), s.base), std::move(ledger)};
}

DigitString grid_multiply(const DigitString& a, const DigitString& b,
                          OpCounter* counter, CellMode mode) {
    const auto grid = build_grid(a, b, counter, mode);
    const auto sums = diagonal_sums(grid, counter);
    return resolve_carries(sums, counter).first;
}

std::vector<PolynomialTerm> binomial_terms(const DigitString& a, const DigitString& b) {
    const auto sums = diagonal_sums(build_grid(a, b));
    const int last = static_cast<int>(sums.sums.size()) - 1;
    std::vector<PolynomialTerm> terms;
    terms.reserve(sums.sums.size());
    for (int k = 0; k <= last; ++k)
        terms.push_back({sums.sums[static_cast<std::size_t>(k)], last - k});
    return terms;
}

std::vector<std::vector<ShiftedProduct>> schoolbook_rows(const DigitString& a,
                                                         const DigitString& b) {
    require_same_base(a, b);
    const int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
    std::vector<std::vector<ShiftedProduct>> rows;
    rows.reserve(static_cast<std::size_t>(lb));
    for (int r = 0; r < lb; ++r) { // units digit of b first
        const int j = lb - 1 - r;
        std::vector<ShiftedProduct> row;
        row.reserve(static_cast<std::size_t>(la));
        for (int s = 0; s < la; ++s) { // units digit of a first
            const int i = la - 1 - s;
            row.push_back({a.digits[static_cast<std::size_t>(i)] *
                               b.digits[static_cast<std::size_t>(j)],
                           r + s});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

DigitString schoolbook_multiply(const DigitString& a, const DigitString& b,
                                OpCounter* counter) {
    require_same_base(a, b);
    const int base = a.base.value();
    const int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());

    // acc is units-first.
    std::vector<std::int64_t> acc(static_cast<std::size_t>(la + lb), 0);
    for (int r = 0; r < lb; ++r) {
        const int bj = b.digits[static_cast<std::size_t>(lb - 1 - r)];
        std::int64_t carry = 0;
        for (int s = 0; s < la; ++s) {
            const int ai = a.digits[static_cast<std::size_t>(la - 1 - s)];
            std::int64_t p = static_cast<std::int64_t>(ai) * bj;
            if (counter) ++counter->digit_multiplications;
            if (carry != 0) {
                p += carry;
                if (counter) ++counter->carry_operations;
            }
            const std::size_t pos = static_cast<std::size_t>(r + s);
            if (counter && acc[pos] != 0) ++counter->digit_additions;
            acc[pos] += p % base;
            carry = p / base;
        }
        // Spill the row's final carry into the columns above.
        std::size_t pos = static_cast<std::size_t>(r + la);
        while (carry != 0) {
            if (counter) ++counter->carry_operations;
            acc[pos] += carry % base;
            carry /= base;
            ++pos;
        }
        // Keep each column a single digit as we go.
        for (std::size_t c = static_cast<std::size_t>(r); c + 1 < acc.size(); ++c) {
            if (acc[c] >= base) {
                acc[c + 1] += acc[c] / base;
                acc[c] %= base;
                if (counter) ++counter->carry_operations;
            }
        }
    }

    std::vector<int> digits(acc.size());
    for (std::size_t n = 0; n < acc.size(); ++n)
        digits[acc.size() - 1 - n] = static_cast<int>(acc[n]);
    return normalized(std::move(digits), a.base);
}

} // namespace linemul
