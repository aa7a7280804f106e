#include "mtae/activations.hpp"

#include <cmath>
#include <stdexcept>

namespace mtae {

double activation(double a, Activation kind) {
    if (!std::isfinite(a)) throw std::invalid_argument("non-finite activation input");
    switch (kind) {
        case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-a));
        case Activation::Relu: return a > 0.0 ? a : 0.0;
        case Activation::Linear: return a;
    }
    throw std::logic_error("unknown activation kind");
}

double activation_derivative(double a, Activation kind) {
    if (!std::isfinite(a)) throw std::invalid_argument("non-finite activation input");
    switch (kind) {
        case Activation::Sigmoid: {
            const double s = 1.0 / (1.0 + std::exp(-a));
            return s * (1.0 - s);
        }
        case Activation::Relu: return a > 0.0 ? 1.0 : 0.0;
        case Activation::Linear: return 1.0;
    }
    throw std::logic_error("unknown activation kind");
}

Activation activation_from_string(const std::string& name) {
    if (name == "sigmoid") return Activation::Sigmoid;
    if (name == "relu") return Activation::Relu;
    if (name == "linear") return Activation::Linear;
    throw std::invalid_argument("unknown activation: " + name);
}

std::string to_string(Activation kind) {
    switch (kind) {
        case Activation::Sigmoid: return "sigmoid";
        case Activation::Relu: return "relu";
        case Activation::Linear: return "linear";
    }
    return "?";
}

}  // namespace mtae
