#pragma once

#include <string>

namespace mtae {

enum class Activation { Sigmoid, Relu, Linear };

// Scalar activation and its derivative. Inputs must be finite; the vector
// paths in the training kernels skip revalidation and rely on the callers.
double activation(double a, Activation kind);
double activation_derivative(double a, Activation kind);

Activation activation_from_string(const std::string& name);
std::string to_string(Activation kind);

}  // namespace mtae
