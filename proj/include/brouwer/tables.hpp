#pragma once

#include <array>
#include <istream>
#include <string>
#include <vector>

namespace brouwer {

/// One table entry: a rational function of the table variable
/// (x = sin^2 I, or e^2 for the 'q' entries), stored as numerator and
/// divisor polynomial coefficients, lowest power first.
struct TablePoly {
    std::array<double, 8> num{};
    int num_len = 0;
    std::array<double, 4> den{};
    int den_len = 0;

    double eval(double x) const {
        double n = 0.0;
        for (int i = num_len - 1; i >= 0; --i) n = n * x + num[i];
        if (den_len == 0) return n;
        double d = 0.0;
        for (int i = den_len - 1; i >= 0; --i) d = d * x + den[i];
        return n / d;
    }
    /// numerator value and first two derivatives at x
    void eval_num2(double x, double& v, double& d1, double& d2) const;
    /// divisor value and first two derivatives at x (den_len > 0)
    void eval_den2(double x, double& v, double& d1, double& d2) const;
    bool zero() const;
};

/// The five coefficient tables of the theory, loaded from the structured
/// text asset (see data/coefficient_tables.txt for the format).
class CoefficientTables {
public:
    /// Parse from a stream; verifies the trailing fnv1a64 checksum line.
    static CoefficientTables parse(std::istream& in);
    static CoefficientTables parse_text(const std::string& text);
    /// The copy embedded in the library (identical to the shipped file).
    static const CoefficientTables& builtin();
    static std::string builtin_text();

    // accessors return a zero polynomial for indices outside the table
    const TablePoly& t1_B(int i, int j, int k) const;
    const TablePoly& t2_b(int i, int j, int k) const;
    const TablePoly& t2_q(int i, int j) const;
    const TablePoly& t3_beta(int i, int j, int k) const;
    const TablePoly& t4_beta(int i, int k) const;
    const TablePoly& t5_A(int i, int j, int k) const;

    std::size_t size() const { return n_entries_; }

    /// Test hook: add delta to the constant coefficient of one entry.
    /// Returns false when the entry does not exist.
    bool perturb(int table, const std::string& name, int i, int j, int k, double delta);

private:
    // dense storage; index ranges cover the printed tables with slack
    template <int NI, int NJ, int NK, int JOFF>
    struct Block {
        std::array<TablePoly, NI * NJ * NK> data{};
        TablePoly* at(int i, int j, int k) {
            const int jj = j + JOFF;
            if (i < 0 || i >= NI || jj < 0 || jj >= NJ || k < 0 || k >= NK) return nullptr;
            return &data[(i * NJ + jj) * NK + k];
        }
        const TablePoly* at(int i, int j, int k) const {
            return const_cast<Block*>(this)->at(i, j, k);
        }
    };

    Block<3, 9, 4, 1> b1_;     // i 0..2, j -1..7, k 0..3
    Block<2, 8, 2, 2> b2b_;    // i 0..1, j -2..5, k 0..1
    Block<2, 8, 1, 2> b2q_;    // i 0..1, j -2..5
    Block<3, 9, 4, 1> b3_;     // i 0..2, j -1..7, k 0..3
    Block<3, 1, 6, 0> b4_;     // i 0..2, k 0..5
    Block<3, 16, 7, 4> b5_;    // i 0..2, j -4..11, k 0..6
    std::size_t n_entries_ = 0;

    TablePoly* lookup(int table, const std::string& name, int i, int j, int k);
};

}  // namespace brouwer
