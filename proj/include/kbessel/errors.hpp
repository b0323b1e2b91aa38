#ifndef KBESSEL_ERRORS_HPP
#define KBESSEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kbessel {

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

// |r| exceeds the configured bound M.
struct order_out_of_range : domain_error {
    explicit order_out_of_range(const std::string& m) : domain_error(m) {}
};

// A nonuniform evaluator was asked for a point inside the coalescence guard
// band; the caller must route to the uniform evaluator instead.
struct dispatch_to_uniform : std::runtime_error {
    explicit dispatch_to_uniform(const std::string& m) : std::runtime_error(m) {}
};

// A uniform evaluator was asked for a point outside its window.
struct window_error : std::runtime_error {
    explicit window_error(const std::string& m) : std::runtime_error(m) {}
};

struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& m) : std::runtime_error(m) {}
};

// Quadrature failed to reach the requested tolerance.
struct accuracy_error : std::runtime_error {
    explicit accuracy_error(const std::string& m) : std::runtime_error(m) {}
};

// Coset sum requested outside its absolute-convergence region.
struct divergence_error : std::runtime_error {
    explicit divergence_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace kbessel

#endif
