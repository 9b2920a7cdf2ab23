// Derivative jets: the ordered list v^(0), v^(1), ..., v^(K) of proper-time
// derivatives of the 4-velocity at one instant. Operations state the minimum
// order they need and reject shorter jets; there is no silent zero-padding.
#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "chronon/errors.hpp"
#include "chronon/fourvector.hpp"

namespace chronon {

class DerivativeJet {
  public:
    DerivativeJet() = default;
    explicit DerivativeJet(std::vector<FourVector> derivs) : v_(std::move(derivs)) {}
    DerivativeJet(std::initializer_list<FourVector> derivs) : v_(derivs) {}

    /// Highest derivative order carried; -1 for an empty jet.
    int max_order() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }

    /// v^(n)
    const FourVector& operator[](int n) const { return v_[static_cast<std::size_t>(n)]; }
    FourVector& operator[](int n) { return v_[static_cast<std::size_t>(n)]; }

    void push_back(const FourVector& d) { v_.push_back(d); }

    void require_order(int n, const char* op) const {
        if (n > max_order())
            throw JetLengthError(std::string(op) + ": jet carries derivatives up to order " +
                                 std::to_string(max_order()) + " but order " + std::to_string(n) +
                                 " is required");
    }

    DerivativeJet& operator+=(const DerivativeJet& o) {
        if (o.size() != size()) throw JetLengthError("jet addition: length mismatch");
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }

  private:
    std::vector<FourVector> v_;
};

inline DerivativeJet operator+(DerivativeJet a, const DerivativeJet& b) { return a += b; }

}  // namespace chronon
