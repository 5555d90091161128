#include "plap/grid.hpp"

#include <cmath>
#include <sstream>

namespace plap {

Mesh1D::Mesh1D(double length, std::size_t interior_nodes)
    : length_(length), n_(interior_nodes), h_(length / static_cast<double>(interior_nodes + 1)) {
    if (!(std::isfinite(length) && length > 0.0)) {
        throw DomainError("Mesh1D: length must be positive and finite");
    }
    if (interior_nodes < 3) {
        throw DomainError("Mesh1D: at least 3 interior nodes required");
    }
}

GridFunction::GridFunction(const Mesh1D& mesh) : mesh_(mesh), values_(mesh.size(), 0.0) {}

GridFunction::GridFunction(const Mesh1D& mesh, std::vector<double> values)
    : mesh_(mesh), values_(std::move(values)) {
    if (values_.size() != mesh_.size()) {
        std::ostringstream msg;
        msg << "GridFunction: expected " << mesh_.size() << " values, got " << values_.size();
        throw DomainError(msg.str());
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw DomainError("GridFunction: non-finite value");
    }
}

GridFunction GridFunction::from_function(const Mesh1D& mesh, const std::function<double(double)>& f) {
    std::vector<double> v(mesh.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(mesh.node(i));
    return GridFunction(mesh, std::move(v));
}

GridFunction GridFunction::operator-() const { return -1.0 * *this; }

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_mesh(a.mesh(), b.mesh(), "operator+");
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return GridFunction(a.mesh(), std::move(r));
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_mesh(a.mesh(), b.mesh(), "operator-");
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return GridFunction(a.mesh(), std::move(r));
}

GridFunction operator*(double c, const GridFunction& a) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a[i];
    return GridFunction(a.mesh(), std::move(r));
}

FaceFunction::FaceFunction(const Mesh1D& mesh, std::vector<double> values)
    : mesh_(mesh), values_(std::move(values)) {
    if (values_.size() != mesh_.size() + 1) throw DomainError("FaceFunction: expected n+1 values");
    for (double v : values_) {
        if (!std::isfinite(v)) throw DomainError("FaceFunction: non-finite value");
    }
}

void require_same_mesh(const Mesh1D& a, const Mesh1D& b, const char* where) {
    if (!(a == b)) throw MeshMismatch(std::string(where) + ": grid functions live on different meshes");
}

namespace kernel {

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void gradient(std::span<const double> u, double h, std::span<double> faces) noexcept {
    const std::size_t n = u.size();
    double left = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        faces[k] = (u[k] - left) / h;
        left = u[k];
    }
    faces[n] = (0.0 - left) / h;
}

double sum_abs_pow(std::span<const double> faces, double p) noexcept {
    double s = 0.0;
    if (p == 2.0) {
        for (double d : faces) s += d * d;
    } else {
        for (double d : faces) s += std::pow(std::abs(d), p);
    }
    return s;
}

}  // namespace kernel

double inner_l2(const GridFunction& u, const GridFunction& v) {
    require_same_mesh(u.mesh(), v.mesh(), "inner_l2");
    return u.mesh().spacing() * kernel::dot(u.values(), v.values());
}

double norm_l2(const GridFunction& u) { return std::sqrt(u.mesh().spacing() * kernel::dot(u.values(), u.values())); }

FaceFunction discrete_gradient(const GridFunction& u) {
    std::vector<double> faces(u.size() + 1);
    kernel::gradient(u.values(), u.mesh().spacing(), faces);
    return FaceFunction(u.mesh(), std::move(faces));
}

double norm_V_p(const GridFunction& u, double p) {
    if (!(p >= 2.0)) throw DomainError("norm_V_p: exponent p must be >= 2");
    std::vector<double> faces(u.size() + 1);
    kernel::gradient(u.values(), u.mesh().spacing(), faces);
    return std::pow(u.mesh().spacing() * kernel::sum_abs_pow(faces, p), 1.0 / p);
}

}  // namespace plap
