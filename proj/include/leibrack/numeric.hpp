#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace leibrack {

// Shared tolerances and finite-difference steps for the float-valued side.
// First differences keep ~10 digits at unit scale; nested second differences
// lose about half of them.
inline constexpr double kTolModel = 1e-9;
inline constexpr double kTolRack = 1e-9;
inline constexpr double kTolPhi = 1e-6;
inline constexpr double kTolBracket = 1e-3;
inline constexpr double kPhiStep = 1e-5;
inline constexpr double kOuterStep = 1e-4;
inline constexpr std::uint64_t kDefaultSeed = 20240817u;

using DVec = std::vector<double>;

/// Dense row-major matrix of doubles; desk-scale sizes only.
struct DMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;

    DMatrix() = default;
    DMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
    static DMatrix identity(std::size_t n);

    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    DMatrix operator*(const DMatrix& o) const;
    DMatrix operator+(const DMatrix& o) const;
    DMatrix operator-(const DMatrix& o) const;
    DMatrix scaled(double s) const;
    DMatrix transpose() const;

    double max_abs() const;
    bool is_exactly_zero() const;
};

DVec matvec(const DMatrix& m, const DVec& x);
double max_abs_diff(const DMatrix& a, const DMatrix& b);
double vec_max_abs(const DVec& v);
double vec_max_abs_diff(const DVec& a, const DVec& b);
double vec_norm(const DVec& v);
DVec vec_scaled(const DVec& v, double s);

/// Matrix exponential. Exact truncated sum when the argument is nilpotent
/// (some power is exactly the zero matrix), otherwise scaling and squaring
/// with the Taylor series summed to machine precision.
DMatrix expm(const DMatrix& m);

std::optional<DMatrix> inverse(const DMatrix& m);
std::optional<DVec> solve_dense(DMatrix m, DVec b);

/// Coordinates of `target` in the span of `basis` (least squares via the Gram
/// system). Returns nullopt for a singular Gram matrix unless the target is
/// zero; writes the max-abs reconstruction residual if requested.
std::optional<DVec> span_coordinates(const std::vector<DMatrix>& basis, const DMatrix& target,
                                     double* residual = nullptr);

/// Deterministic pseudo-random source for sampled checks.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}
    double uniform() { return dist_(eng_); }  // in [-1, 1]
    DVec vec(std::size_t n);
    DVec unit(std::size_t n);  // normalized to Euclidean norm 1

private:
    std::mt19937_64 eng_;
    std::uniform_real_distribution<double> dist_{-1.0, 1.0};
};

}  // namespace leibrack
