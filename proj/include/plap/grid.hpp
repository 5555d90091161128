// Uniform 1-D mesh on (0, L) with homogeneous Dirichlet closure, grid
// functions living on its interior nodes and face-centred gradients.
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace plap {

/// Raised when two grid objects that must share a mesh do not.
class MeshMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exponent, index or other scalar argument is out of range.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Uniform grid on (0, L) with n interior nodes x_i = i*h, i = 1..n, and
/// spacing h = L/(n+1). Boundary nodes x_0 = 0 and x_{n+1} = L carry the
/// Dirichlet value 0 and are never stored.
class Mesh1D {
public:
    Mesh1D(double length, std::size_t interior_nodes);

    double length() const noexcept { return length_; }
    std::size_t size() const noexcept { return n_; }
    double spacing() const noexcept { return h_; }

    /// Coordinate of interior node i, 0-based (node i sits at (i+1)*h).
    double node(std::size_t i) const noexcept { return static_cast<double>(i + 1) * h_; }

    friend bool operator==(const Mesh1D& a, const Mesh1D& b) noexcept {
        return a.n_ == b.n_ && a.length_ == b.length_;
    }

private:
    double length_;
    std::size_t n_;
    double h_;
};

/// Values at the n interior nodes of a mesh. Immutable after construction;
/// arithmetic returns new objects.
class GridFunction {
public:
    /// Zero function.
    explicit GridFunction(const Mesh1D& mesh);
    /// Throws DomainError unless values has mesh.size() finite entries.
    GridFunction(const Mesh1D& mesh, std::vector<double> values);

    static GridFunction from_function(const Mesh1D& mesh, const std::function<double(double)>& f);

    const Mesh1D& mesh() const noexcept { return mesh_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    GridFunction operator-() const;
    friend GridFunction operator+(const GridFunction& a, const GridFunction& b);
    friend GridFunction operator-(const GridFunction& a, const GridFunction& b);
    friend GridFunction operator*(double c, const GridFunction& a);
    friend GridFunction operator*(const GridFunction& a, double c) { return c * a; }
    friend GridFunction operator/(const GridFunction& a, double c) { return (1.0 / c) * a; }

    friend bool operator==(const GridFunction& a, const GridFunction& b) noexcept {
        return a.mesh_ == b.mesh_ && a.values_ == b.values_;
    }

private:
    Mesh1D mesh_;
    std::vector<double> values_;
};

/// One value per inter-node interval: n+1 faces, faces 0 and n touch the
/// boundary.
class FaceFunction {
public:
    FaceFunction(const Mesh1D& mesh, std::vector<double> values);

    const Mesh1D& mesh() const noexcept { return mesh_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t k) const noexcept { return values_[k]; }

private:
    Mesh1D mesh_;
    std::vector<double> values_;
};

void require_same_mesh(const Mesh1D& a, const Mesh1D& b, const char* where);

/// Discrete L^2 inner product h * sum u_i v_i.
double inner_l2(const GridFunction& u, const GridFunction& v);
double norm_l2(const GridFunction& u);

/// Face k (k = 0..n) holds (u_{k+1} - u_k)/h with u_0 = u_{n+1} = 0 (nodes
/// numbered 1..n).
FaceFunction discrete_gradient(const GridFunction& u);

/// (h * sum_k |Du_k|^p)^(1/p); requires p >= 2.
double norm_V_p(const GridFunction& u, double p);

namespace kernel {

// Span-level building blocks shared by the solvers; no validation.
double dot(std::span<const double> a, std::span<const double> b) noexcept;
void gradient(std::span<const double> u, double h, std::span<double> faces) noexcept;
double sum_abs_pow(std::span<const double> faces, double p) noexcept;

}  // namespace kernel

}  // namespace plap
